// SPDX-License-Identifier: Apache-2.0
#include "bracketframe/bracket.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bracketframe/error.hpp"

namespace bracketframe {

BracketFn bracket(const SampledSignal& f, const SampledSignal& g,
                  std::int64_t period_steps) {
  require_same_grid(f.grid(), g.grid(), "bracket");
  if (period_steps <= 0) throw InvalidArgument("bracket: period must be positive");
  std::vector<Complex> out(static_cast<std::size_t>(period_steps));
  const std::int64_t lo = std::max(f.offset(), g.offset());
  const std::int64_t hi = std::min(f.end(), g.end());
  for (std::int64_t i = lo; i < hi; ++i) {
    out[static_cast<std::size_t>(floor_mod(i, period_steps))] +=
        f.at(i) * std::conj(g.at(i));
  }
  return BracketFn(f.grid(), period_steps, std::move(out));
}

BracketFn bracket(const SampledSignal& f, const SampledSignal& g, Period period) {
  return bracket(f, g, f.grid().period_steps(period));
}

BracketFn a_norm(const SampledSignal& f, Period period) {
  const BracketFn self = bracket(f, f, period);
  std::vector<Complex> out(self.samples().size());
  for (std::size_t r = 0; r < out.size(); ++r) {
    out[r] = std::sqrt(std::max(0.0, self.samples()[r].real()));
  }
  return BracketFn(f.grid(), self.period_len(), std::move(out));
}

SampledSignal normalize_a(const SampledSignal& f, std::int64_t period_steps,
                          double eps) {
  if (eps < 0.0) throw InvalidArgument("normalize_a: eps must be >= 0");
  const BracketFn self = bracket(f, f, period_steps);
  std::vector<double> norms(self.samples().size());
  double max_norm = 0.0;
  for (std::size_t r = 0; r < norms.size(); ++r) {
    norms[r] = std::sqrt(std::max(0.0, self.samples()[r].real()));
    max_norm = std::max(max_norm, norms[r]);
  }
  const double threshold = eps * max_norm;
  std::vector<Complex> out(f.samples().begin(), f.samples().end());
  for (std::int64_t j = 0; j < f.size(); ++j) {
    const double n = norms[static_cast<std::size_t>(floor_mod(f.offset() + j, period_steps))];
    Complex& v = out[static_cast<std::size_t>(j)];
    v = (n > threshold && n > 0.0) ? v / n : Complex{};
  }
  return SampledSignal(f.grid(), f.offset(), std::move(out));
}

SampledSignal normalize_a(const SampledSignal& f, Period period, double eps) {
  return normalize_a(f, f.grid().period_steps(period), eps);
}

SampledSignal scale_by_periodic(const SampledSignal& f, const PeriodicSignal& h) {
  require_same_grid(f.grid(), h.grid(), "scale_by_periodic");
  std::vector<Complex> out(f.samples().begin(), f.samples().end());
  for (std::int64_t j = 0; j < f.size(); ++j) {
    out[static_cast<std::size_t>(j)] *= h.at(f.offset() + j);
  }
  return SampledSignal(f.grid(), f.offset(), std::move(out));
}

ValueRange ess_range(const PeriodicSignal& h, std::optional<double> support_eps) {
  if (h.max_imag_abs() > 1e-10) {
    throw NotRealValued("ess_range: imaginary part up to " +
                        std::to_string(h.max_imag_abs()));
  }
  double max_value = -std::numeric_limits<double>::infinity();
  for (const Complex& v : h.samples()) max_value = std::max(max_value, v.real());

  ValueRange range{std::numeric_limits<double>::infinity(),
                   -std::numeric_limits<double>::infinity()};
  const double threshold = support_eps ? *support_eps * max_value : 0.0;
  for (const Complex& v : h.samples()) {
    if (support_eps && !(v.real() > threshold)) continue;
    range.inf = std::min(range.inf, v.real());
    range.sup = std::max(range.sup, v.real());
  }
  if (range.inf > range.sup) range = {0.0, 0.0};  // empty support
  return range;
}

}  // namespace bracketframe
