// SPDX-License-Identifier: Apache-2.0
#include "bracketframe/report.hpp"

#include "bracketframe/error.hpp"
#include "bracketframe/generators.hpp"

namespace bracketframe {

std::string to_string(CompletenessKind kind) {
  switch (kind) {
    case CompletenessKind::complete: return "complete";
    case CompletenessKind::incomplete: return "incomplete";
    case CompletenessKind::marginal: return "marginal";
  }
  return "unknown";
}

FrameReport analyze_frame(const SampledSignal& window, const AnalysisOptions& options) {
  if (window.max_abs() == 0.0) throw ZeroWindow("analyze_frame: window is identically zero");
  const LatticeGrid& grid = window.grid();
  const std::int64_t margin =
      options.domain_margin_steps < 0 ? window.size() : options.domain_margin_steps;
  const WHSystem sys = WHSystem::around_window(window, margin);

  FrameReport r;
  r.grid = grid;
  r.ab = grid.ab_rational();
  r.density_admissible = grid.p() <= grid.q();
  r.domain_lo = sys.domain_lo();
  r.domain_hi = sys.domain_hi();
  r.options = options;

  r.tightness = tight_frame_check(window, options.tol);
  r.modulation_periodization_sup = ess_range(bracket(window, window, Period::inv_b)).sup;
  r.riesz = riesz_sequence_bounds(window, Period::shift_a, false, true);
  r.spectral = spectral_frame_bounds(sys, options.max_iter, options.eig_tol, false);
  r.spectral_converged = r.spectral.converged;

  const std::vector<SampledSignal> probes = random_probes(
      grid, sys.domain_lo(), sys.domain_hi(), options.probe_count, options.probe_seed);
  r.a_frame = a_frame_bounds(window, probes);

  if (grid.is_critical()) r.completeness = completeness_check(window, options.zero_tol);
  r.window_norm = window.norm();
  r.wiener_amalgam_norm = bracketframe::wiener_amalgam_norm(window, grid.p());
  return r;
}

}  // namespace bracketframe
