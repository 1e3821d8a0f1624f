// SPDX-License-Identifier: Apache-2.0
#include "bracketframe/ortho.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "bracketframe/error.hpp"

namespace bracketframe {

AOrthoSystem::AOrthoSystem(LatticeGrid grid, Period period,
                           std::vector<SampledSignal> members)
    : grid_(grid), period_(period), members_(std::move(members)) {
  for (const SampledSignal& e : members_) require_same_grid(grid_, e.grid(), "AOrthoSystem");
}

double AOrthoSystem::orthonormality_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = 0; j < members_.size(); ++j) {
      const BracketFn br = bracket(members_[i], members_[j], period_);
      if (i != j) {
        worst = std::max(worst, br.max_abs());
        continue;
      }
      for (const Complex& v : br.samples()) {
        worst = std::max(worst, std::min(std::abs(v), std::abs(v - 1.0)));
      }
    }
  }
  return worst;
}

OrthogonalityResult is_a_orthogonal(const SampledSignal& f, const SampledSignal& g,
                                    Period period, double tol) {
  OrthogonalityResult result;
  result.residual = bracket(f, g, period).max_abs();
  const double scale = a_norm(f, period).max_abs() * a_norm(g, period).max_abs();
  result.orthogonal = result.residual <= tol * scale;
  return result;
}

namespace {

// Σ_i <f, e_i>_P e_i
SampledSignal expand(const SampledSignal& f, std::span<const SampledSignal> basis,
                     std::int64_t period_steps) {
  SampledSignal acc(f.grid());
  for (const SampledSignal& e : basis) {
    acc = acc + scale_by_periodic(e, bracket(f, e, period_steps));
  }
  return acc;
}

}  // namespace

AOrthoSystem gram_schmidt(std::span<const SampledSignal> inputs, Period period,
                          std::optional<double> dep_tol) {
  if (inputs.empty()) throw InvalidArgument("gram_schmidt: no input signals");
  const LatticeGrid grid = inputs.front().grid();
  const std::int64_t P = grid.period_steps(period);

  double scale = 0.0;
  for (const SampledSignal& g : inputs) {
    require_same_grid(grid, g.grid(), "gram_schmidt");
    scale = std::max(scale, a_norm(g, period).max_abs());
  }
  const double threshold = dep_tol.value_or(1e-10 * scale);

  std::vector<SampledSignal> members;
  members.reserve(inputs.size());
  for (std::size_t n = 0; n < inputs.size(); ++n) {
    const SampledSignal residual = inputs[n] - expand(inputs[n], members, P);
    const double peak = a_norm(residual, period).max_abs();
    if (!(peak > threshold)) {
      std::ostringstream msg;
      msg << "gram_schmidt: input " << n << " lies in the modulation span of the "
          << "previous inputs (residual " << to_string(period) << "-norm " << peak
          << " <= " << threshold << ")";
      throw ADependent(n, msg.str());
    }
    members.push_back(normalize_a(residual, P, threshold / peak).trimmed());
  }
  return AOrthoSystem(grid, period, std::move(members));
}

BracketFn bessel_defect(const SampledSignal& f, const AOrthoSystem& sys) {
  BracketFn defect = bracket(f, f, sys.period());
  for (const SampledSignal& e : sys.members()) {
    const BracketFn c = bracket(f, e, sys.period());
    defect = defect - c * c.conj();
  }
  return defect;
}

SampledSignal project_modulation_span(const SampledSignal& f, const SampledSignal& g,
                                      Period period) {
  if (g.max_abs() == 0.0) throw ZeroWindow("project_modulation_span: window is zero");
  const BracketFn cross = bracket(f, g, period);
  const BracketFn self = bracket(g, g, period);
  std::vector<Complex> weight(static_cast<std::size_t>(cross.period_len()));
  for (std::size_t r = 0; r < weight.size(); ++r) {
    const double n2 = self.samples()[r].real();
    weight[r] = n2 > 0.0 ? cross.samples()[r] / n2 : Complex{};
  }
  return scale_by_periodic(g, PeriodicSignal(g.grid(), cross.period_len(), std::move(weight)));
}

SampledSignal project_multi(const SampledSignal& f, const AOrthoSystem& sys) {
  require_same_grid(f.grid(), sys.grid(), "project_multi");
  return expand(f, sys.members(), sys.grid().period_steps(sys.period()));
}

namespace {

PeriodicSignal modulate_periodic(const PeriodicSignal& h, std::int64_t m) {
  const std::int64_t P = h.period_len();
  std::vector<Complex> out(h.samples().begin(), h.samples().end());
  for (std::int64_t r = 0; r < P; ++r) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(floor_mod(m * r, P)) / P;
    out[static_cast<std::size_t>(r)] *= Complex(std::cos(angle), std::sin(angle));
  }
  return PeriodicSignal(h.grid(), P, std::move(out));
}

void check_factorable(const FactorableMap& map, const LatticeGrid& grid, Period period,
                      std::int64_t lo, std::int64_t hi) {
  const std::int64_t P = grid.period_steps(period);
  const ModulationUnit unit =
      period == Period::shift_a ? ModulationUnit::inv_a : ModulationUnit::mod_b;

  std::mt19937_64 rng(0xfac70ab1e);
  std::normal_distribution<double> normal;
  for (int probe = 0; probe < 3; ++probe) {
    std::vector<Complex> samples(static_cast<std::size_t>(hi - lo));
    for (Complex& v : samples) v = {normal(rng), normal(rng)};
    const SampledSignal f(grid, lo, std::move(samples));
    const PeriodicSignal base = map(f);
    if (base.period_len() != P) {
      throw NotFactorable("riesz_representer: map returns period " +
                          std::to_string(base.period_len()) + ", expected " +
                          std::to_string(P));
    }
    for (std::int64_t m : {1, 2}) {
      const PeriodicSignal lhs = map(modulate(f, m, unit));
      const PeriodicSignal rhs = modulate_periodic(base, m);
      const double err = max_abs_difference(lhs, rhs);
      if (err > 1e-8 * std::max(1.0, base.max_abs())) {
        std::ostringstream msg;
        msg << "riesz_representer: map does not commute with E_{" << m << "/P} (error "
            << err << ")";
        throw NotFactorable(msg.str());
      }
    }
  }
}

}  // namespace

SampledSignal riesz_representer(const FactorableMap& map, const LatticeGrid& grid,
                                Period period, std::int64_t k_first, std::int64_t k_last) {
  if (k_last < k_first) throw InvalidArgument("riesz_representer: empty k window");
  const std::int64_t P = grid.period_steps(period);
  const std::int64_t lo = k_first * P;
  const std::int64_t hi = (k_last + 1) * P;
  check_factorable(map, grid, period, lo, hi);

  std::vector<Complex> out(static_cast<std::size_t>(hi - lo));
  for (std::int64_t k = k_first; k <= k_last; ++k) {
    const SampledSignal cell(grid, k * P, std::vector<Complex>(static_cast<std::size_t>(P), 1.0));
    const PeriodicSignal value = map(cell);
    for (std::int64_t i = k * P; i < (k + 1) * P; ++i) {
      out[static_cast<std::size_t>(i - lo)] = std::conj(value.at(i));
    }
  }
  return SampledSignal(grid, lo, std::move(out));
}

}  // namespace bracketframe
