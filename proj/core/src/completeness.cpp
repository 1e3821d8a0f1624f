// SPDX-License-Identifier: Apache-2.0
#include "bracketframe/gabor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bracketframe/error.hpp"
#include "parallel.hpp"

namespace bracketframe {

CompletenessVerdict completeness_check(const SampledSignal& g, double zero_tol) {
  const LatticeGrid& grid = g.grid();
  if (!grid.is_critical()) {
    throw LatticeNotCritical("completeness_check: needs ab = 1 but p/q = " +
                             std::to_string(grid.p()) + "/" + std::to_string(grid.q()));
  }
  if (g.max_abs() == 0.0) throw ZeroWindow("completeness_check: window is identically zero");

  const std::int64_t p = grid.p();
  // Row y_r = r·dt sees g(y_r - k·a) only for k in [k_first, k_last].
  const std::int64_t k_first = -floor_div(g.end() - 1, p);
  const std::int64_t k_last = -floor_div(g.offset(), p);
  const std::int64_t K = k_last - k_first + 1;
  // x sampled at the midpoints (s + 1/2)/M of M cells; M even and a few
  // times the number of translates.
  const std::int64_t M = std::max<std::int64_t>(64, 4 * K);

  CompletenessVerdict v;
  v.rows = p;
  v.columns = M;
  v.translates = K;
  v.half_line = true;

  std::vector<double> modulus(static_cast<std::size_t>(p * M));
  detail::parallel_for(p, [&](std::int64_t r) {
    for (std::int64_t s = 0; s < M; ++s) {
      const double x = (static_cast<double>(s) + 0.5) / static_cast<double>(M);
      Complex z{};
      for (std::int64_t k = k_first; k <= k_last; ++k) {
        const Complex gv = g.at(r - k * p);
        if (gv == Complex{}) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) * x;
        z += gv * Complex(std::cos(angle), std::sin(angle));
      }
      modulus[static_cast<std::size_t>(r * M + s)] = std::abs(z);
    }
  }, 16);

  const double peak = *std::max_element(modulus.begin(), modulus.end());
  const auto zeros = std::count_if(modulus.begin(), modulus.end(),
                                   [&](double z) { return z <= zero_tol * peak; });
  v.zero_fraction = static_cast<double>(zeros) / static_cast<double>(modulus.size());
  if (v.zero_fraction == 0.0) {
    v.kind = CompletenessKind::complete;
  } else if (v.zero_fraction < 1e-3) {
    v.kind = CompletenessKind::marginal;
  } else {
    v.kind = CompletenessKind::incomplete;
  }

  const double g_peak = g.max_abs();
  v.sup_criterion_complete = true;
  for (std::int64_t r = 0; r < p && v.sup_criterion_complete; ++r) {
    double row_sup = 0.0;
    for (std::int64_t k = k_first; k <= k_last; ++k) row_sup = std::max(row_sup, std::abs(g.at(r - k * p)));
    v.sup_criterion_complete = row_sup > zero_tol * g_peak;
  }
  v.verdicts_agree = v.sup_criterion_complete == (v.kind != CompletenessKind::incomplete);
  return v;
}

}  // namespace bracketframe
