// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "bracketframe/gabor.hpp"

namespace bracketframe {

struct AnalysisOptions {
  double tol = 1e-9;
  double zero_tol = 1e-6;
  double eig_tol = 1e-12;
  int max_iter = 2000;
  /// Domain margin around the window support; negative means "one window
  /// width".
  std::int64_t domain_margin_steps = -1;
  std::size_t probe_count = 20;
  std::uint64_t probe_seed = 0x5eed;
};

/// Everything frame-analyze reports about a window and lattice.
struct FrameReport {
  LatticeGrid grid{1, 1, 1};
  Rational ab{1, 1};
  /// ab <= 1 (necessary for completeness); recorded, never derived.
  bool density_admissible = true;
  std::int64_t domain_lo = 0;
  std::int64_t domain_hi = 0;
  AnalysisOptions options;

  TightnessVerdict tightness;
  /// sup_t Σ_n |g(t - n/b)|^2, a lower bound for any upper frame bound.
  double modulation_periodization_sup = 0.0;
  RieszBounds riesz;
  SpectralBounds spectral;
  bool spectral_converged = true;
  ValueRange a_frame;
  std::optional<CompletenessVerdict> completeness;
  double window_norm = 0.0;
  double wiener_amalgam_norm = 0.0;
};

FrameReport analyze_frame(const SampledSignal& window,
                          const AnalysisOptions& options = {});

std::string to_string(CompletenessKind kind);

}  // namespace bracketframe
