// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bracketframe/bracket.hpp"
#include "bracketframe/signal.hpp"

namespace bracketframe {

/// Inclusive integer interval; empty when last < first.
struct IndexRange {
  std::int64_t first = 0;
  std::int64_t last = -1;
  std::int64_t size() const noexcept { return last < first ? 0 : last - first + 1; }
};

/// Weyl-Heisenberg system (E_{mb} T_{na} g) together with the finite
/// analysis domain [domain_lo, domain_hi) (grid indices) on which windowed
/// quantities (spectral bounds, reconstruction) are evaluated.
///
/// On the grid e^{2πi m b t_j} = e^{2πi m j / q}, so the modulation index
/// set m = 0..q-1 realises every distinct modulation exactly once.
class WHSystem {
 public:
  WHSystem(SampledSignal window, std::int64_t domain_lo, std::int64_t domain_hi);

  /// Domain = support of the window widened by `margin_steps` on each side.
  static WHSystem around_window(SampledSignal window, std::int64_t margin_steps);

  const SampledSignal& window() const noexcept { return window_; }
  const LatticeGrid& grid() const noexcept { return window_.grid(); }
  std::int64_t domain_lo() const noexcept { return domain_lo_; }
  std::int64_t domain_hi() const noexcept { return domain_hi_; }
  std::int64_t domain_size() const noexcept { return domain_hi_ - domain_lo_; }
  std::int64_t m_count() const noexcept { return grid().q(); }

  /// Translations n whose T_{na} g meets the analysis domain.
  IndexRange n_range() const noexcept { return n_range_for(domain_lo_, domain_hi_); }
  /// Translations n whose T_{na} g meets [lo, hi).
  IndexRange n_range_for(std::int64_t lo, std::int64_t hi) const noexcept;
  IndexRange n_range_for(const SampledSignal& f) const noexcept {
    return n_range_for(f.offset(), f.end());
  }

  /// T_{na} g
  SampledSignal translated_window(std::int64_t n) const;

 private:
  SampledSignal window_;
  std::int64_t domain_lo_;
  std::int64_t domain_hi_;
};

/// G_k(t) = Σ_n g(t - na) conj(g(t - na - k/b)), one period of length a.
PeriodicSignal gk_function(const SampledSignal& g, std::int64_t k);

/// Largest |k| for which G_k can be nonzero: |k|·q < support length of g.
std::int64_t gk_max_index(const SampledSignal& g) noexcept;

/// <f, E_{mb} T_{na} g> for 0 <= m < q. Throws IndexOutOfRange otherwise.
Complex wh_coefficient(const SampledSignal& f, const WHSystem& sys,
                       std::int64_t m, std::int64_t n);

/// b^{-1} ||<f, T_{na} g>_{1/b}||^2_{L^2[0,1/b]}; equals
/// Σ_{m=0}^{q-1} |<f, E_{mb} T_{na} g>|^2 exactly on the grid.
double fiber_energy(const SampledSignal& f, const WHSystem& sys, std::int64_t n);

/// Σ_{m=0}^{q-1} |<f, E_{mb} T_{na} g>|^2 by explicit coefficients.
double coefficient_energy(const SampledSignal& f, const WHSystem& sys,
                          std::int64_t n);

/// S f = Σ_n Σ_{m=0}^{q-1} <f, E_{mb}T_{na}g> E_{mb}T_{na}g.
SampledSignal frame_operator_naive(const SampledSignal& f, const WHSystem& sys);

/// S f = b^{-1} Σ_n <f, T_{na}g>_{1/b} T_{na}g. No modulation loop.
SampledSignal frame_operator_compressed(const SampledSignal& f,
                                        const WHSystem& sys);

/// S f = b^{-1} Σ_n P_n f · T_{na} ||g||^2_{1/b}, with P_n the projection
/// onto span(E_{mb} T_{na} g)_m.
SampledSignal frame_operator_projection_form(const SampledSignal& f,
                                             const WHSystem& sys);

struct FrameIdentityTerms {
  /// b^{-1} ∫ |f|^2 G_0
  double F1 = 0.0;
  /// b^{-1} Σ_{k≠0} ∫ conj(f(t)) f(t - k/b) G_k(t) dt
  double F2 = 0.0;
  /// b^{-1} Σ_k ∫_0^a <T_{k/b} f, f>_a <g, T_{k/b} g>_a
  double bracket_form = 0.0;
  /// Σ_{m,n} |<f, E_{mb}T_{na}g>|^2 from explicit coefficients.
  double direct_total = 0.0;
};

FrameIdentityTerms wh_frame_identity(const SampledSignal& f,
                                     const SampledSignal& g);

struct TightnessVerdict {
  bool tight = false;
  bool normalized_tight = false;
  bool orthonormal_basis = false;
  /// Frame bound G_0 / b when tight.
  double tight_bound = 0.0;
  /// max(sup G_0/b - inf G_0/b, max_{k≠0} sup |G_k|)
  double deviation = 0.0;
  ValueRange g0_range;
  /// Range of G_0 / b.
  ValueRange g0_over_b_range;
  /// (k, sup |G_k|) for 0 < |k| <= gk_max_index.
  std::vector<std::pair<std::int64_t, double>> gk_residuals;
  /// max |<g, E_{n/a} T_{m/b} g>| over (n,m) != (0,0).
  double adjoint_gram_residual = 0.0;
  /// ||g||^2 - ab
  double norm_defect = 0.0;
  /// ||S g - g|| / ||g||
  double fixed_point_residual = 0.0;
};

TightnessVerdict tight_frame_check(const SampledSignal& g, double tol);

struct RieszBounds {
  double A = 0.0;
  double B = 0.0;
  /// Extreme squared singular values of φ ↦ φ~ g estimated by power and
  /// inverse iteration on the normal operator; NaN when not computed.
  double synthesis_min = 0.0;
  double synthesis_max = 0.0;
};

/// (A, B) = ess range of <g,g>_P, optionally restricted to its support.
/// Throws ZeroWindow for g = 0.
RieszBounds riesz_sequence_bounds(const SampledSignal& g, Period period,
                                  bool support_restricted,
                                  bool cross_validate = true);

enum class CompletenessKind { complete, incomplete, marginal };

struct CompletenessVerdict {
  CompletenessKind kind = CompletenessKind::incomplete;
  /// Fraction of (y, x) cells with |Z| <= zero_tol · max |Z|.
  double zero_fraction = 0.0;
  std::int64_t rows = 0;
  std::int64_t columns = 0;
  /// Number of translates k contributing to some fiber.
  std::int64_t translates = 0;
  bool half_line = true;
  /// sup_n |g(y - na)| > zero_tol · max|g| for every row.
  bool sup_criterion_complete = false;
  bool verdicts_agree = false;
};

/// Completeness of (g, a, b) at the critical density ab = 1 from the
/// fibers Z(y, x) = Σ_k g(y - ka) e^{2πikx}, y in [0, a) on the grid and x
/// sampled at cell midpoints of [0, 1). Throws LatticeNotCritical unless
/// p = q.
CompletenessVerdict completeness_check(const SampledSignal& g,
                                       double zero_tol = 1e-6);

struct SpectralBounds {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  int iterations_min = 0;
  int iterations_max = 0;
  bool converged = false;
};
/// Frame operator restricted to signals supported in the analysis domain,
/// applied to a coefficient vector of length domain_size().
void apply_windowed_frame_operator(const WHSystem& sys,
                                   std::span<const Complex> x,
                                   std::span<Complex> y);
/// Extreme eigenvalues of the windowed frame operator. S commutes with
/// E_{mb}, so it acts separately on each residue class of grid indices
/// modulo q; every such fiber is handled on its own, λ_max by power
/// iteration and λ_min by inverse iteration with CG solves. Each fiber
/// starts from the grid delta at its largest (smallest) diagonal entry
/// G_0/b, and Rayleigh quotients of a positive operator only move outward
/// from there, so the estimates always enclose the range of G_0/b on the
/// domain. Throws NotConverged when `require_convergence` is set and some
/// fiber stalls.
SpectralBounds spectral_frame_bounds(const WHSystem& sys, int max_iter = 2000,
                                     double tol = 1e-12,
                                     bool require_convergence = true);
/// inf / sup over probes f and grid points t with ||f||_{1/b}(t) > 0 of
///   b^{-1} Σ_n |<f, T_{na} g>_{1/b}(t)|^2 / ||f||^2_{1/b}(t).
/// Throws EmptyProbeSet for an empty batch.
ValueRange a_frame_bounds(const SampledSignal& g,
                          std::span<const SampledSignal> probes,
                          double eps = 1e-10);

/// Solves S x = f on the analysis domain with CG (compressed operator) and
/// resynthesises Σ <x, E_{mb}T_{na}g> E_{mb}T_{na}g. Throws
/// SingularFrameOperator when G_0 vanishes on the domain or CG meets
/// non-positive curvature, NotConverged when CG stalls.
SampledSignal frame_reconstruct(const SampledSignal& f, const WHSystem& sys,
                                double cg_tol = 1e-10, int max_iter = 5000);

}  // namespace bracketframe
