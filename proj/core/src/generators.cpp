// SPDX-License-Identifier: Apache-2.0
#include "bracketframe/generators.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "bracketframe/error.hpp"

namespace bracketframe {

SampledSignal indicator(const LatticeGrid& grid, std::int64_t start_steps,
                        std::int64_t len_steps) {
  if (len_steps < 0) throw InvalidArgument("indicator: negative length");
  return SampledSignal(grid, start_steps,
                       std::vector<Complex>(static_cast<std::size_t>(len_steps), 1.0));
}

SampledSignal gaussian(const LatticeGrid& grid, double c, double halfwidth) {
  if (!(c > 0.0) || !(halfwidth > 0.0)) {
    throw InvalidArgument("gaussian: c and halfwidth must be positive");
  }
  const double steps = halfwidth * static_cast<double>(grid.L());
  const auto h = static_cast<std::int64_t>(std::llround(steps));
  if (std::abs(steps - static_cast<double>(h)) > 1e-9 * std::max(1.0, steps)) {
    std::ostringstream msg;
    msg << "gaussian: halfwidth " << halfwidth << " is not a multiple of dt = 1/" << grid.L();
    throw InvalidArgument(msg.str());
  }
  std::vector<Complex> samples(static_cast<std::size_t>(2 * h));
  for (std::int64_t j = -h; j < h; ++j) {
    const double t = static_cast<double>(j) * grid.dt();
    samples[static_cast<std::size_t>(j + h)] = std::exp(-c * t * t);
  }
  return SampledSignal(grid, -h, std::move(samples));
}

std::vector<SampledSignal> random_probes(const LatticeGrid& grid, std::int64_t lo,
                                         std::int64_t hi, std::size_t count,
                                         std::uint64_t seed) {
  if (hi <= lo) throw InvalidArgument("random_probes: empty interval");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const std::int64_t q = grid.q();
  const std::int64_t first_cell = ceil_div(lo, q);
  const std::int64_t last_cell = floor_div(hi, q) - 1;

  std::vector<SampledSignal> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::int64_t a = lo, b = hi;
    if (i % 2 == 1 && last_cell >= first_cell) {
      std::uniform_int_distribution<std::int64_t> pick(first_cell, last_cell);
      a = pick(rng) * q;
      b = a + q;
    }
    std::vector<Complex> samples(static_cast<std::size_t>(b - a));
    for (Complex& v : samples) v = {normal(rng), normal(rng)};
    out.emplace_back(grid, a, std::move(samples));
  }
  return out;
}

}  // namespace bracketframe
