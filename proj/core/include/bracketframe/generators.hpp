// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "bracketframe/signal.hpp"

namespace bracketframe {

/// χ_[start·dt, (start+len)·dt)
SampledSignal indicator(const LatticeGrid& grid, std::int64_t start_steps,
                        std::int64_t len_steps);

/// e^{-c t^2} sampled on [-halfwidth, halfwidth). Throws InvalidArgument
/// unless halfwidth·L is an integer.
SampledSignal gaussian(const LatticeGrid& grid, double c, double halfwidth);

/// Deterministic probe batch for a_frame_bounds on [lo, hi): even entries
/// are complex Gaussian noise on the whole interval, odd entries are noise
/// on a single cell [k/b, (k+1)/b) inside it.
std::vector<SampledSignal> random_probes(const LatticeGrid& grid, std::int64_t lo,
                                         std::int64_t hi, std::size_t count,
                                         std::uint64_t seed);

}  // namespace bracketframe
