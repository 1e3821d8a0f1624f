// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "bracketframe/signal.hpp"

namespace bracketframe {

/// Function-valued inner product; one period stored eagerly.
using BracketFn = PeriodicSignal;

/// <f,g>_P(t) = Σ_n f(t - nP) conj(g(t - nP)), sampled on one period.
///
/// Finite sums: each output sample collects the overlap of the supports
/// along one residue class modulo the period.
BracketFn bracket(const SampledSignal& f, const SampledSignal& g, Period period);
BracketFn bracket(const SampledSignal& f, const SampledSignal& g,
                  std::int64_t period_steps);

/// ||f||_P(t) = sqrt(<f,f>_P(t)), real and non-negative.
BracketFn a_norm(const SampledSignal& f, Period period);

/// Pointwise normalisation N_P(f): each sample divided by ||f||_P at its
/// position. Positions where ||f||_P <= eps · max ||f||_P are treated as the
/// zero set and map to 0.
SampledSignal normalize_a(const SampledSignal& f, Period period,
                          double eps = 1e-12);
SampledSignal normalize_a(const SampledSignal& f, std::int64_t period_steps,
                          double eps = 1e-12);

/// Pointwise product with the periodic extension of h.
SampledSignal scale_by_periodic(const SampledSignal& f, const PeriodicSignal& h);

struct ValueRange {
  double inf = 0.0;
  double sup = 0.0;
};

/// Grid approximation of (ess inf, ess sup) of a real periodic function.
/// With `support_eps`, only samples with h > support_eps · max h count.
/// Throws NotRealValued when any |Im h| exceeds 1e-10.
ValueRange ess_range(const PeriodicSignal& h,
                     std::optional<double> support_eps = std::nullopt);

}  // namespace bracketframe
