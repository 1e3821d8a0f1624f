// SPDX-License-Identifier: Apache-2.0
#include "bracketframe/gabor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bracketframe/error.hpp"
#include "bracketframe/ortho.hpp"
#include "bracketframe/spectral.hpp"
#include "parallel.hpp"

namespace bracketframe {

namespace {

Complex unit_root(std::int64_t r, std::int64_t n) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

std::size_t idx(std::int64_t i) { return static_cast<std::size_t>(i); }

// B_n = <f, T_{na} g>_{1/b} for every n in `range`.
std::vector<BracketFn> translate_brackets(const SampledSignal& f, const SampledSignal& g,
                                          IndexRange range) {
  std::vector<BracketFn> out(idx(range.size()), PeriodicSignal::constant(g.grid(), g.grid().q(), 0.0));
  detail::parallel_for(range.size(), [&](std::int64_t i) {
    const SampledSignal gn = translate(g, range.first + i, ShiftUnit::shift_a);
    out[idx(i)] = bracket(f, gn, Period::inv_b);
  });
  return out;
}

// Σ_n h_n(j) g(j - np) over the union of the translate supports, with the
// periodic weights h_n of period `period_len`.
SampledSignal synthesize(const SampledSignal& g, IndexRange range,
                         const std::vector<BracketFn>& weights, double scale) {
  const LatticeGrid& grid = g.grid();
  if (range.size() == 0 || g.empty()) return SampledSignal(grid);
  const std::int64_t p = grid.p();
  const std::int64_t lo = g.offset() + range.first * p;
  const std::int64_t hi = g.end() + range.last * p;
  std::vector<Complex> out(idx(hi - lo));
  detail::parallel_for(hi - lo, [&](std::int64_t i) {
    const std::int64_t j = lo + i;
    // n with g.offset() <= j - np < g.end()
    const std::int64_t n_lo = std::max(range.first, floor_div(j - g.end(), p) + 1);
    const std::int64_t n_hi = std::min(range.last, floor_div(j - g.offset(), p));
    Complex acc{};
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
      acc += weights[idx(n - range.first)].at(j) * g.at(j - n * p);
    }
    out[idx(i)] = scale * acc;
  }, 256);
  return SampledSignal(grid, lo, std::move(out));
}

}  // namespace

WHSystem::WHSystem(SampledSignal window, std::int64_t domain_lo, std::int64_t domain_hi)
    : window_(std::move(window)), domain_lo_(domain_lo), domain_hi_(domain_hi) {
  if (window_.max_abs() == 0.0) throw ZeroWindow("WHSystem: window is identically zero");
  if (domain_hi_ <= domain_lo_) throw InvalidArgument("WHSystem: empty analysis domain");
}

WHSystem WHSystem::around_window(SampledSignal window, std::int64_t margin_steps) {
  if (margin_steps < 0) throw InvalidArgument("WHSystem: negative domain margin");
  const std::int64_t lo = window.offset() - margin_steps;
  const std::int64_t hi = window.end() + margin_steps;
  return WHSystem(std::move(window), lo, hi);
}

IndexRange WHSystem::n_range_for(std::int64_t lo, std::int64_t hi) const noexcept {
  if (hi <= lo) return {};
  const std::int64_t p = grid().p();
  // window_.offset() + np < hi  and  window_.end() + np > lo
  return {floor_div(lo - window_.end(), p) + 1, ceil_div(hi - window_.offset(), p) - 1};
}

SampledSignal WHSystem::translated_window(std::int64_t n) const {
  return translate(window_, n, ShiftUnit::shift_a);
}

PeriodicSignal gk_function(const SampledSignal& g, std::int64_t k) {
  return bracket(g, translate(g, k, ShiftUnit::inv_b), Period::shift_a);
}

std::int64_t gk_max_index(const SampledSignal& g) noexcept {
  return g.empty() ? 0 : (g.size() - 1) / g.grid().q();
}

Complex wh_coefficient(const SampledSignal& f, const WHSystem& sys, std::int64_t m,
                       std::int64_t n) {
  const LatticeGrid& grid = sys.grid();
  require_same_grid(f.grid(), grid, "wh_coefficient");
  const std::int64_t q = grid.q();
  if (m < 0 || m >= q) {
    throw IndexOutOfRange("wh_coefficient: modulation index " + std::to_string(m) +
                          " outside [0, " + std::to_string(q) + ")");
  }
  const SampledSignal& g = sys.window();
  const std::int64_t shift = n * grid.p();
  const std::int64_t lo = std::max(f.offset(), g.offset() + shift);
  const std::int64_t hi = std::min(f.end(), g.end() + shift);
  Complex acc{};
  for (std::int64_t j = lo; j < hi; ++j) {
    // conj(e^{2πi m j/q} g(j - np))
    acc += f.at(j) * std::conj(g.at(j - shift)) * unit_root(floor_mod(-m * floor_mod(j, q), q), q);
  }
  return acc * grid.dt();
}

double fiber_energy(const SampledSignal& f, const WHSystem& sys, std::int64_t n) {
  const BracketFn h = bracket(f, sys.translated_window(n), Period::inv_b);
  return sys.grid().inv_b() * h.l2_norm_squared();
}

double coefficient_energy(const SampledSignal& f, const WHSystem& sys, std::int64_t n) {
  double acc = 0.0;
  for (std::int64_t m = 0; m < sys.m_count(); ++m) acc += std::norm(wh_coefficient(f, sys, m, n));
  return acc;
}

SampledSignal frame_operator_naive(const SampledSignal& f, const WHSystem& sys) {
  const LatticeGrid& grid = sys.grid();
  require_same_grid(f.grid(), grid, "frame_operator_naive");
  const IndexRange range = sys.n_range_for(f);
  const std::int64_t q = grid.q();

  // c[n][m] = <f, E_{mb} T_{na} g>
  std::vector<std::vector<Complex>> coef(idx(range.size()));
  detail::parallel_for(range.size(), [&](std::int64_t i) {
    std::vector<Complex>& row = coef[idx(i)];
    row.resize(idx(q));
    for (std::int64_t m = 0; m < q; ++m) row[idx(m)] = wh_coefficient(f, sys, m, range.first + i);
  });

  // Σ_m c[n][m] e^{2πi m j/q} depends on j only modulo q.
  std::vector<BracketFn> weights;
  weights.reserve(coef.size());
  for (const std::vector<Complex>& row : coef) {
    std::vector<Complex> w(idx(q));
    for (std::int64_t r = 0; r < q; ++r) {
      Complex acc{};
      for (std::int64_t m = 0; m < q; ++m) acc += row[idx(m)] * unit_root(m * r % q, q);
      w[idx(r)] = acc;
    }
    weights.emplace_back(grid, q, std::move(w));
  }
  return synthesize(sys.window(), range, weights, 1.0);
}

SampledSignal frame_operator_compressed(const SampledSignal& f, const WHSystem& sys) {
  require_same_grid(f.grid(), sys.grid(), "frame_operator_compressed");
  const IndexRange range = sys.n_range_for(f);
  const std::vector<BracketFn> brackets = translate_brackets(f, sys.window(), range);
  return synthesize(sys.window(), range, brackets, sys.grid().inv_b());
}

SampledSignal frame_operator_projection_form(const SampledSignal& f, const WHSystem& sys) {
  const LatticeGrid& grid = sys.grid();
  require_same_grid(f.grid(), grid, "frame_operator_projection_form");
  const IndexRange range = sys.n_range_for(f);
  const BracketFn g_norm2 = bracket(sys.window(), sys.window(), Period::inv_b);
  std::vector<SampledSignal> terms(idx(range.size()), SampledSignal(grid));
  detail::parallel_for(range.size(), [&](std::int64_t i) {
    const std::int64_t n = range.first + i;
    const SampledSignal pf = project_modulation_span(f, sys.translated_window(n), Period::inv_b);
    terms[idx(i)] = scale_by_periodic(pf, g_norm2.translated(n * grid.p()));
  });
  SampledSignal acc(grid);
  for (const SampledSignal& t : terms) acc = acc + t;
  return Complex(grid.inv_b()) * acc;
}

FrameIdentityTerms wh_frame_identity(const SampledSignal& f, const SampledSignal& g) {
  require_same_grid(f.grid(), g.grid(), "wh_frame_identity");
  FrameIdentityTerms terms;
  if (f.empty() || g.max_abs() == 0.0) return terms;
  const LatticeGrid& grid = g.grid();
  const std::int64_t q = grid.q();
  const double dt = grid.dt();
  const double scale = grid.inv_b();

  const PeriodicSignal g0 = gk_function(g, 0);
  double f1 = 0.0;
  for (std::int64_t j = f.offset(); j < f.end(); ++j) f1 += std::norm(f.at(j)) * g0.at(j).real();
  terms.F1 = scale * dt * f1;

  const std::int64_t k_max = std::min(gk_max_index(g), (f.size() - 1) / q);
  double f2 = 0.0;
  double bracket_total = 0.0;
  for (std::int64_t k = -k_max; k <= k_max; ++k) {
    const PeriodicSignal gk = gk_function(g, k);
    const SampledSignal fk = translate(f, k, ShiftUnit::inv_b);
    bracket_total += (bracket(fk, f, Period::shift_a) * gk).integral().real();
    if (k == 0) continue;
    Complex acc{};
    for (std::int64_t j = std::max(f.offset(), fk.offset()); j < std::min(f.end(), fk.end()); ++j) {
      acc += std::conj(f.at(j)) * fk.at(j) * gk.at(j);
    }
    f2 += acc.real();
  }
  terms.F2 = scale * dt * f2;
  terms.bracket_form = scale * bracket_total;

  const WHSystem sys(g, f.offset(), f.end());
  const IndexRange range = sys.n_range();
  std::vector<double> per_n(idx(range.size()));
  detail::parallel_for(range.size(), [&](std::int64_t i) {
    per_n[idx(i)] = coefficient_energy(f, sys, range.first + i);
  });
  for (double e : per_n) terms.direct_total += e;
  return terms;
}

TightnessVerdict tight_frame_check(const SampledSignal& g, double tol) {
  if (g.max_abs() == 0.0) throw ZeroWindow("tight_frame_check: window is identically zero");
  const LatticeGrid& grid = g.grid();
  const double b = grid.b();
  TightnessVerdict v;

  const PeriodicSignal g0 = gk_function(g, 0);
  v.g0_range = ess_range(g0);
  v.g0_over_b_range = {v.g0_range.inf / b, v.g0_range.sup / b};

  double gk_worst = 0.0;
  const std::int64_t k_max = gk_max_index(g);
  for (std::int64_t k = -k_max; k <= k_max; ++k) {
    if (k == 0) continue;
    const double r = gk_function(g, k).max_abs();
    v.gk_residuals.emplace_back(k, r);
    gk_worst = std::max(gk_worst, r);
  }

  v.deviation = std::max(v.g0_over_b_range.sup - v.g0_over_b_range.inf, gk_worst);
  v.tight = v.deviation <= tol;
  v.tight_bound = v.tight ? 0.5 * (v.g0_over_b_range.inf + v.g0_over_b_range.sup) : 0.0;
  const double g0_vs_b = std::max(std::abs(v.g0_range.sup - b), std::abs(v.g0_range.inf - b));
  v.normalized_tight = g0_vs_b <= tol && gk_worst <= tol;

  // <g, E_{n/a} T_{m/b} g> = ∫_0^a G_m(t) e^{-2πi n t/a} dt: a DFT of G_m.
  const std::int64_t p = grid.p();
  double gram = 0.0;
  for (std::int64_t m = -k_max; m <= k_max; ++m) {
    const PeriodicSignal gm = gk_function(g, m);
    std::vector<double> row(idx(p));
    detail::parallel_for(p, [&](std::int64_t n) {
      if (m == 0 && n == 0) return;
      Complex acc{};
      for (std::int64_t r = 0; r < p; ++r) acc += gm.at(r) * unit_root(floor_mod(-n * r, p), p);
      row[idx(n)] = std::abs(acc) * grid.dt();
    }, 64);
    for (double x : row) gram = std::max(gram, x);
  }
  v.adjoint_gram_residual = gram;
  v.norm_defect = g.norm_squared() - grid.ab_rational().value();

  const WHSystem sys = WHSystem::around_window(g, 0);
  v.fixed_point_residual = (frame_operator_compressed(g, sys) - g).norm() / g.norm();
  v.orthonormal_basis = v.normalized_tight && std::abs(v.norm_defect) <= tol && grid.is_critical();
  return v;
}

RieszBounds riesz_sequence_bounds(const SampledSignal& g, Period period,
                                  bool support_restricted, bool cross_validate) {
  if (g.max_abs() == 0.0) throw ZeroWindow("riesz_sequence_bounds: window is identically zero");
  const BracketFn h = bracket(g, g, period);
  const std::optional<double> support_eps =
      support_restricted ? std::optional<double>(1e-12) : std::nullopt;
  const ValueRange range = ess_range(h, support_eps);
  RieszBounds out{range.inf, range.sup, std::numeric_limits<double>::quiet_NaN(),
                  std::numeric_limits<double>::quiet_NaN()};
  if (!cross_validate) return out;

  // Normal operator of the synthesis map φ ↦ φ~ g on the active residues,
  // applied as the adjoint of the explicit synthesis (never through the
  // bracket). The dt weights of both norms cancel.
  const std::int64_t P = g.grid().period_steps(period);
  const double peak = h.max_abs();
  std::vector<std::int64_t> active;
  for (std::int64_t r = 0; r < P; ++r) {
    if (!support_restricted || h.at(r).real() > 1e-12 * peak) active.push_back(r);
  }
  std::vector<std::int64_t> slot(idx(P), -1);
  for (std::size_t i = 0; i < active.size(); ++i) slot[idx(active[i])] = static_cast<std::int64_t>(i);

  const HermitianOperator normal = [&](std::span<const Complex> x, std::span<Complex> y) {
    std::fill(y.begin(), y.end(), Complex{});
    for (std::int64_t j = g.offset(); j < g.end(); ++j) {
      const std::int64_t s = slot[idx(floor_mod(j, P))];
      if (s < 0) continue;
      const Complex synth = x[idx(s)] * g.at(j);
      y[idx(s)] += std::conj(g.at(j)) * synth;
    }
  };

  std::size_t arg_max = 0, arg_min = 0;
  for (std::size_t i = 0; i < active.size(); ++i) {
    if (h.at(active[i]).real() > h.at(active[arg_max]).real()) arg_max = i;
    if (h.at(active[i]).real() < h.at(active[arg_min]).real()) arg_min = i;
  }
  CVector start(active.size());
  start[arg_max] = 1.0;
  out.synthesis_max = power_iteration(normal, start, 500, 1e-12).value;
  std::fill(start.begin(), start.end(), Complex{});
  start[arg_min] = 1.0;
  if (!(h.at(active[arg_min]).real() > 0.0)) {
    out.synthesis_min = 0.0;
  } else {
    try {
      out.synthesis_min = inverse_iteration(normal, start, 500, 1e-12, 1e-13).value;
    } catch (const NotPositiveDefinite&) {
      out.synthesis_min = 0.0;
    }
  }
  return out;
}

void apply_windowed_frame_operator(const WHSystem& sys, std::span<const Complex> x,
                                   std::span<Complex> y) {
  const std::int64_t lo = sys.domain_lo();
  const SampledSignal f(sys.grid(), lo, std::vector<Complex>(x.begin(), x.end()));
  const SampledSignal sf = frame_operator_compressed(f, sys);
  for (std::int64_t i = 0; i < sys.domain_size(); ++i) y[idx(i)] = sf.at(lo + i);
}

namespace {

// The windowed frame operator on one residue class j ≡ r (mod q) of the
// analysis domain: y_k = b^{-1} Σ_n g(j_k - np) Σ_k' x_k' conj(g(j_k' - np)).
struct Fiber {
  const WHSystem* sys = nullptr;
  std::int64_t first = 0;  // smallest domain index in the class
  std::int64_t count = 0;
  IndexRange n_range;

  std::int64_t index(std::int64_t k) const { return first + k * sys->grid().q(); }

  void apply(std::span<const Complex> x, std::span<Complex> y) const {
    const SampledSignal& g = sys->window();
    const std::int64_t p = sys->grid().p();
    std::fill(y.begin(), y.end(), Complex{});
    for (std::int64_t n = n_range.first; n <= n_range.last; ++n) {
      Complex c{};
      for (std::int64_t k = 0; k < count; ++k) c += x[idx(k)] * std::conj(g.at(index(k) - n * p));
      if (c == Complex{}) continue;
      for (std::int64_t k = 0; k < count; ++k) y[idx(k)] += c * g.at(index(k) - n * p);
    }
    const double scale = sys->grid().inv_b();
    for (Complex& v : y) v *= scale;
  }

  double diagonal(std::int64_t k) const {
    const SampledSignal& g = sys->window();
    double acc = 0.0;
    for (std::int64_t n = n_range.first; n <= n_range.last; ++n) {
      acc += std::norm(g.at(index(k) - n * sys->grid().p()));
    }
    return acc * sys->grid().inv_b();
  }
};

struct FiberResult {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  int iterations_min = 0;
  int iterations_max = 0;
  bool converged = true;
  bool empty = true;
};

FiberResult fiber_bounds(const Fiber& fiber, int max_iter, double tol) {
  FiberResult res;
  if (fiber.count == 0) return res;
  res.empty = false;
  const HermitianOperator op = [&fiber](std::span<const Complex> x, std::span<Complex> y) {
    fiber.apply(x, y);
  };

  std::int64_t k_max = 0, k_min = 0;
  std::vector<double> diag(idx(fiber.count));
  for (std::int64_t k = 0; k < fiber.count; ++k) {
    diag[idx(k)] = fiber.diagonal(k);
    if (diag[idx(k)] > diag[idx(k_max)]) k_max = k;
    if (diag[idx(k)] < diag[idx(k_min)]) k_min = k;
  }

  CVector start(idx(fiber.count));
  start[idx(k_max)] = 1.0;
  const EigenEstimate top = power_iteration(op, start, max_iter, tol);
  res.lambda_max = std::max(top.value, diag[idx(k_max)]);
  res.iterations_max = top.iterations;
  res.converged = top.converged;

  if (!(diag[idx(k_min)] > 0.0)) {
    res.lambda_min = 0.0;
    return res;
  }
  std::fill(start.begin(), start.end(), Complex{});
  start[idx(k_min)] = 1.0;
  try {
    const EigenEstimate bottom = inverse_iteration(op, start, max_iter, tol, 1e-14);
    res.lambda_min = std::min(bottom.value, diag[idx(k_min)]);
    res.iterations_min = bottom.iterations;
    res.converged = res.converged && bottom.converged;
  } catch (const NotPositiveDefinite&) {
    res.lambda_min = 0.0;
  } catch (const NotConverged& e) {
    res.lambda_min = diag[idx(k_min)];
    res.iterations_min = e.iterations();
    res.converged = false;
  }
  return res;
}

}  // namespace

SpectralBounds spectral_frame_bounds(const WHSystem& sys, int max_iter, double tol,
                                     bool require_convergence) {
  const std::int64_t q = sys.grid().q();
  const std::int64_t fibers = std::min(q, sys.domain_size());
  std::vector<FiberResult> results(idx(fibers));
  detail::parallel_for(fibers, [&](std::int64_t i) {
    Fiber fiber;
    fiber.sys = &sys;
    fiber.first = sys.domain_lo() + i;
    fiber.count = ceil_div(sys.domain_hi() - fiber.first, q);
    fiber.n_range = sys.n_range();
    results[idx(i)] = fiber_bounds(fiber, max_iter, tol);
  });

  SpectralBounds out;
  out.lambda_min = std::numeric_limits<double>::infinity();
  out.lambda_max = 0.0;
  out.converged = true;
  for (const FiberResult& r : results) {
    if (r.empty) continue;
    out.lambda_min = std::min(out.lambda_min, r.lambda_min);
    out.lambda_max = std::max(out.lambda_max, r.lambda_max);
    out.iterations_min = std::max(out.iterations_min, r.iterations_min);
    out.iterations_max = std::max(out.iterations_max, r.iterations_max);
    out.converged = out.converged && r.converged;
  }
  if (require_convergence && !out.converged) {
    const int iters = std::max(out.iterations_min, out.iterations_max);
    std::ostringstream msg;
    msg << "spectral_frame_bounds: Rayleigh quotients did not settle to relative " << tol
        << " within " << max_iter << " iterations";
    throw NotConverged(iters, msg.str());
  }
  return out;
}

ValueRange a_frame_bounds(const SampledSignal& g, std::span<const SampledSignal> probes,
                          double eps) {
  if (probes.empty()) throw EmptyProbeSet("a_frame_bounds: empty probe batch");
  if (g.max_abs() == 0.0) throw ZeroWindow("a_frame_bounds: window is identically zero");
  const LatticeGrid& grid = g.grid();
  const WHSystem sys = WHSystem::around_window(g, 0);
  const double scale = grid.inv_b();
  constexpr double inf = std::numeric_limits<double>::infinity();

  std::vector<ValueRange> per_probe(probes.size(), ValueRange{inf, -inf});
  detail::parallel_for(static_cast<std::int64_t>(probes.size()), [&](std::int64_t i) {
    const SampledSignal& f = probes[idx(i)];
    require_same_grid(f.grid(), grid, "a_frame_bounds");
    if (f.empty()) return;
    const BracketFn norm2 = bracket(f, f, Period::inv_b);
    const IndexRange range = sys.n_range_for(f);
    std::vector<double> energy(idx(grid.q()));
    for (std::int64_t n = range.first; n <= range.last; ++n) {
      const BracketFn bn = bracket(f, sys.translated_window(n), Period::inv_b);
      for (std::int64_t r = 0; r < grid.q(); ++r) energy[idx(r)] += std::norm(bn.at(r));
    }
    const double threshold = eps * std::sqrt(norm2.max_abs());
    ValueRange& out = per_probe[idx(i)];
    for (std::int64_t r = 0; r < grid.q(); ++r) {
      const double n2 = norm2.at(r).real();
      if (!(std::sqrt(n2) > threshold)) continue;
      const double ratio = scale * energy[idx(r)] / n2;
      out.inf = std::min(out.inf, ratio);
      out.sup = std::max(out.sup, ratio);
    }
  });

  ValueRange total{inf, -inf};
  for (const ValueRange& r : per_probe) {
    total.inf = std::min(total.inf, r.inf);
    total.sup = std::max(total.sup, r.sup);
  }
  if (total.inf > total.sup) throw EmptyProbeSet("a_frame_bounds: every probe is zero");
  return total;
}

SampledSignal frame_reconstruct(const SampledSignal& f, const WHSystem& sys, double cg_tol,
                                int max_iter) {
  require_same_grid(f.grid(), sys.grid(), "frame_reconstruct");
  const std::int64_t lo = f.empty() ? sys.domain_lo() : std::min(sys.domain_lo(), f.offset());
  const std::int64_t hi = f.empty() ? sys.domain_hi() : std::max(sys.domain_hi(), f.end());
  const WHSystem domain(sys.window(), lo, hi);

  // The diagonal of the windowed operator is G_0/b; a zero there makes the
  // operator singular on the domain.
  const PeriodicSignal g0 = gk_function(sys.window(), 0);
  const double g0_peak = g0.max_abs();
  for (std::int64_t j = lo; j < hi; ++j) {
    if (!(g0.at(j).real() > 1e-14 * g0_peak)) {
      std::ostringstream msg;
      msg << "frame_reconstruct: G_0 vanishes at t = " << f.time_of(j)
          << ", the frame operator is singular on the domain";
      throw SingularFrameOperator(msg.str());
    }
  }

  const SampledSignal rhs = f.on_interval(lo, hi);
  const HermitianOperator op = [&domain](std::span<const Complex> x, std::span<Complex> y) {
    apply_windowed_frame_operator(domain, x, y);
  };
  CgResult solve;
  try {
    solve = conjugate_gradient(op, rhs.samples(), cg_tol, max_iter);
  } catch (const NotPositiveDefinite& e) {
    throw SingularFrameOperator(std::string("frame_reconstruct: ") + e.what());
  }
  const SampledSignal dual(f.grid(), lo, std::move(solve.x));
  return frame_operator_compressed(dual, domain).on_interval(lo, hi);
}

}  // namespace bracketframe
