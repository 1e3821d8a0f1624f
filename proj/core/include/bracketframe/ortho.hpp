// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bracketframe/bracket.hpp"

namespace bracketframe {

/// Finite family that is orthonormal in the bracket product of `period`.
class AOrthoSystem {
 public:
  AOrthoSystem(LatticeGrid grid, Period period,
               std::vector<SampledSignal> members);

  const LatticeGrid& grid() const noexcept { return grid_; }
  Period period() const noexcept { return period_; }
  std::span<const SampledSignal> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  /// Largest deviation from the a-orthonormal invariant: max |<e_i,e_j>|
  /// for i != j together with the distance of <e_i,e_i> from {0, 1}.
  double orthonormality_residual() const;

 private:
  LatticeGrid grid_;
  Period period_;
  std::vector<SampledSignal> members_;
};

struct OrthogonalityResult {
  bool orthogonal = false;
  /// max_t |<f,g>_P(t)|
  double residual = 0.0;
};

/// f ⊥_P g  <=>  max |<f,g>_P| <= tol · max ||f||_P · max ||g||_P.
OrthogonalityResult is_a_orthogonal(const SampledSignal& f,
                                    const SampledSignal& g, Period period,
                                    double tol);

/// Gram-Schmidt in the bracket product:
///   e_{n+1} = N_P(g_{n+1} - Σ_i <g_{n+1}, e_i>_P e_i).
///
/// `dep_tol` defaults to 1e-10 · max_n sup ||g_n||_P. A residual whose
/// P-norm stays below dep_tol everywhere raises ADependent(n); positions
/// where it is locally below dep_tol are part of the zero set of N_P.
AOrthoSystem gram_schmidt(std::span<const SampledSignal> inputs, Period period,
                          std::optional<double> dep_tol = std::nullopt);

/// <f,f>_P - Σ_n |<f,e_n>_P|^2, pointwise. Non-negative for an orthonormal
/// system, identically zero when f lies in the modulation span.
BracketFn bessel_defect(const SampledSignal& f, const AOrthoSystem& sys);

/// Orthogonal projection onto span(E_{m/P} g)_m:
///   P f = <f,g>_P g / ||g||_P^2, with g / ||g||_P^2 := 0 where ||g||_P = 0.
/// The default period is 1/b, i.e. the span of (E_{mb} g)_m.
SampledSignal project_modulation_span(const SampledSignal& f,
                                      const SampledSignal& g,
                                      Period period = Period::inv_b);

/// Σ_n <f,e_n>_P e_n: the orthogonal projection onto span(E_{m/P} e_n).
SampledSignal project_multi(const SampledSignal& f, const AOrthoSystem& sys);

/// Linear map from signals to P-periodic functions that commutes with
/// multiplication by bounded P-periodic functions.
using FactorableMap = std::function<PeriodicSignal(const SampledSignal&)>;

/// Builds g = Σ_k conj(L(χ_k)) χ_k with χ_k = T_{kP} χ_[0,P), k in
/// [k_first, k_last], so that L(f) = <f,g>_P on signals supported in
/// [k_first·P, (k_last+1)·P).
///
/// Before building, L is spot-checked for L(E_{m/P} f) = E_{m/P} L(f) on a
/// few deterministic probes; a failure throws NotFactorable.
SampledSignal riesz_representer(const FactorableMap& map,
                                const LatticeGrid& grid, Period period,
                                std::int64_t k_first, std::int64_t k_last);

}  // namespace bracketframe
