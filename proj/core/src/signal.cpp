// SPDX-License-Identifier: Apache-2.0
#include "bracketframe/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bracketframe/error.hpp"

namespace bracketframe {

namespace {

// e^{2πi·r/n} for an already reduced residue r.
Complex unit_root(std::int64_t r, std::int64_t n) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                       static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

// (x·y) mod n; both factors are reduced first, so n up to ~3e9 is safe.
std::int64_t mul_mod(std::int64_t x, std::int64_t y, std::int64_t n) {
  return floor_mod(x, n) * floor_mod(y, n) % n;
}

template <class Op>
SampledSignal combine(const SampledSignal& lhs, const SampledSignal& rhs,
                      Op op) {
  require_same_grid(lhs.grid(), rhs.grid(), "signal arithmetic");
  if (lhs.empty() && rhs.empty()) return SampledSignal(lhs.grid());
  std::int64_t lo = 0, hi = 0;
  if (lhs.empty()) {
    lo = rhs.offset();
    hi = rhs.end();
  } else if (rhs.empty()) {
    lo = lhs.offset();
    hi = lhs.end();
  } else {
    lo = std::min(lhs.offset(), rhs.offset());
    hi = std::max(lhs.end(), rhs.end());
  }
  std::vector<Complex> out(static_cast<std::size_t>(hi - lo));
  for (std::int64_t i = lo; i < hi; ++i) {
    out[static_cast<std::size_t>(i - lo)] = op(lhs.at(i), rhs.at(i));
  }
  return SampledSignal(lhs.grid(), lo, std::move(out));
}

std::int64_t dilated_density(const LatticeGrid& grid, std::int64_t num,
                             std::int64_t den) {
  if (num == 0 || den == 0) {
    throw InvalidArgument("dilation factor must be nonzero");
  }
  const std::int64_t scaled = grid.L() * std::abs(den);
  if (scaled % std::abs(num) != 0) {
    std::ostringstream msg;
    msg << "dilation by " << num << "/" << den << " maps L=" << grid.L()
        << " to the non-integer density " << scaled << "/" << std::abs(num);
    throw IncompatibleDilation(msg.str());
  }
  return scaled / std::abs(num);
}

}  // namespace

SampledSignal::SampledSignal(LatticeGrid grid) : grid_(grid) {}

SampledSignal::SampledSignal(LatticeGrid grid, std::int64_t offset,
                             std::vector<Complex> samples)
    : grid_(grid), offset_(offset), samples_(std::move(samples)) {}

double SampledSignal::norm_squared() const noexcept {
  double acc = 0.0;
  for (const Complex& v : samples_) acc += std::norm(v);
  return acc * grid_.dt();
}

double SampledSignal::norm() const noexcept { return std::sqrt(norm_squared()); }

double SampledSignal::max_abs() const noexcept {
  double m = 0.0;
  for (const Complex& v : samples_) m = std::max(m, std::abs(v));
  return m;
}

SampledSignal SampledSignal::on_interval(std::int64_t lo, std::int64_t hi) const {
  if (hi < lo) throw InvalidArgument("on_interval: hi < lo");
  std::vector<Complex> out(static_cast<std::size_t>(hi - lo));
  for (std::int64_t i = lo; i < hi; ++i) {
    out[static_cast<std::size_t>(i - lo)] = at(i);
  }
  return SampledSignal(grid_, lo, std::move(out));
}

SampledSignal SampledSignal::trimmed(double threshold) const {
  std::int64_t lo = 0;
  std::int64_t hi = size();
  while (lo < hi && std::abs(samples_[static_cast<std::size_t>(lo)]) <= threshold) ++lo;
  while (hi > lo && std::abs(samples_[static_cast<std::size_t>(hi - 1)]) <= threshold) --hi;
  if (lo == hi) return SampledSignal(grid_);
  return on_interval(offset_ + lo, offset_ + hi);
}

SampledSignal SampledSignal::conj() const {
  std::vector<Complex> out(samples_.size());
  std::transform(samples_.begin(), samples_.end(), out.begin(),
                 [](Complex v) { return std::conj(v); });
  return SampledSignal(grid_, offset_, std::move(out));
}

SampledSignal operator+(const SampledSignal& lhs, const SampledSignal& rhs) {
  return combine(lhs, rhs, [](Complex x, Complex y) { return x + y; });
}

SampledSignal operator-(const SampledSignal& lhs, const SampledSignal& rhs) {
  return combine(lhs, rhs, [](Complex x, Complex y) { return x - y; });
}

SampledSignal operator-(const SampledSignal& f) { return Complex(-1.0) * f; }

SampledSignal operator*(Complex scale, const SampledSignal& f) {
  std::vector<Complex> out(f.samples().begin(), f.samples().end());
  for (Complex& v : out) v *= scale;
  return SampledSignal(f.grid(), f.offset(), std::move(out));
}

double max_abs_difference(const SampledSignal& f, const SampledSignal& g) {
  require_same_grid(f.grid(), g.grid(), "max_abs_difference");
  const std::int64_t lo = std::min(f.offset(), g.offset());
  const std::int64_t hi = std::max(f.end(), g.end());
  double m = 0.0;
  for (std::int64_t i = lo; i < hi; ++i) m = std::max(m, std::abs(f.at(i) - g.at(i)));
  return m;
}

SampledSignal translate(const SampledSignal& f, std::int64_t k, ShiftUnit unit) {
  std::int64_t step = 1;
  switch (unit) {
    case ShiftUnit::shift_a: step = f.grid().p(); break;
    case ShiftUnit::inv_b: step = f.grid().q(); break;
    case ShiftUnit::raw_steps: step = 1; break;
  }
  return SampledSignal(f.grid(), f.offset() + k * step,
                       std::vector<Complex>(f.samples().begin(), f.samples().end()));
}

SampledSignal modulate(const SampledSignal& f, std::int64_t m,
                       ModulationUnit unit) {
  // m·b·t_j = m·j/q and m·t_j/a = m·j/p: the phase only depends on m·j
  // modulo the lattice period in steps.
  const std::int64_t n = unit == ModulationUnit::mod_b ? f.grid().q() : f.grid().p();
  std::vector<Complex> out(f.samples().begin(), f.samples().end());
  for (std::int64_t j = 0; j < f.size(); ++j) {
    out[static_cast<std::size_t>(j)] *= unit_root(mul_mod(m, f.offset() + j, n), n);
  }
  return SampledSignal(f.grid(), f.offset(), std::move(out));
}

SampledSignal dilate(const SampledSignal& f, std::int64_t num, std::int64_t den) {
  const std::int64_t L2 = dilated_density(f.grid(), num, den);
  const LatticeGrid grid(L2, f.grid().p(), f.grid().q());
  const double scale = 1.0 / std::sqrt(std::abs(static_cast<double>(num) / den));
  std::vector<Complex> out(f.samples().begin(), f.samples().end());
  for (Complex& v : out) v *= scale;
  if ((num < 0) == (den < 0)) return SampledSignal(grid, f.offset(), std::move(out));
  // Reflection: new index i carries the old sample at -i.
  std::reverse(out.begin(), out.end());
  return SampledSignal(grid, -(f.end() - 1), std::move(out));
}

Complex inner_product(const SampledSignal& f, const SampledSignal& g) {
  require_same_grid(f.grid(), g.grid(), "inner_product");
  const std::int64_t lo = std::max(f.offset(), g.offset());
  const std::int64_t hi = std::min(f.end(), g.end());
  Complex acc{};
  for (std::int64_t i = lo; i < hi; ++i) acc += f.at(i) * std::conj(g.at(i));
  return acc * f.grid().dt();
}

double wiener_amalgam_norm(const SampledSignal& g, std::int64_t block_steps) {
  if (block_steps <= 0) throw InvalidArgument("wiener_amalgam_norm: block must be positive");
  if (g.empty()) return 0.0;
  double total = 0.0;
  const std::int64_t first = floor_div(g.offset(), block_steps);
  const std::int64_t last = floor_div(g.end() - 1, block_steps);
  for (std::int64_t n = first; n <= last; ++n) {
    const std::int64_t lo = std::max(n * block_steps, g.offset());
    const std::int64_t hi = std::min((n + 1) * block_steps, g.end());
    double block_max = 0.0;
    for (std::int64_t i = lo; i < hi; ++i) block_max = std::max(block_max, std::abs(g.at(i)));
    total += block_max;
  }
  return total;
}

// ---------------------------------------------------------------------------

PeriodicSignal::PeriodicSignal(LatticeGrid grid, std::int64_t period_len,
                               std::vector<Complex> samples)
    : grid_(grid), period_len_(period_len), samples_(std::move(samples)) {
  if (period_len_ <= 0 || static_cast<std::int64_t>(samples_.size()) != period_len_) {
    throw InvalidArgument("periodic signal needs exactly period_len > 0 samples");
  }
}

PeriodicSignal PeriodicSignal::constant(LatticeGrid grid, std::int64_t period_len,
                                        Complex value) {
  return PeriodicSignal(grid, period_len,
                        std::vector<Complex>(static_cast<std::size_t>(period_len), value));
}

Complex PeriodicSignal::integral() const noexcept {
  Complex acc{};
  for (const Complex& v : samples_) acc += v;
  return acc * grid_.dt();
}

double PeriodicSignal::l2_norm_squared() const noexcept {
  double acc = 0.0;
  for (const Complex& v : samples_) acc += std::norm(v);
  return acc * grid_.dt();
}

double PeriodicSignal::max_abs() const noexcept {
  double m = 0.0;
  for (const Complex& v : samples_) m = std::max(m, std::abs(v));
  return m;
}

double PeriodicSignal::max_imag_abs() const noexcept {
  double m = 0.0;
  for (const Complex& v : samples_) m = std::max(m, std::abs(v.imag()));
  return m;
}

PeriodicSignal PeriodicSignal::translated(std::int64_t steps) const {
  std::vector<Complex> out(samples_.size());
  for (std::int64_t r = 0; r < period_len_; ++r) out[static_cast<std::size_t>(r)] = at(r - steps);
  return PeriodicSignal(grid_, period_len_, std::move(out));
}

PeriodicSignal PeriodicSignal::conj() const {
  std::vector<Complex> out(samples_.size());
  std::transform(samples_.begin(), samples_.end(), out.begin(),
                 [](Complex v) { return std::conj(v); });
  return PeriodicSignal(grid_, period_len_, std::move(out));
}

namespace {

template <class Op>
PeriodicSignal combine_periodic(const PeriodicSignal& lhs, const PeriodicSignal& rhs,
                                Op op) {
  require_same_grid(lhs.grid(), rhs.grid(), "periodic arithmetic");
  if (lhs.period_len() != rhs.period_len()) {
    throw GridMismatch("periodic arithmetic: period lengths " +
                       std::to_string(lhs.period_len()) + " and " +
                       std::to_string(rhs.period_len()) + " differ");
  }
  std::vector<Complex> out(static_cast<std::size_t>(lhs.period_len()));
  for (std::int64_t r = 0; r < lhs.period_len(); ++r) {
    out[static_cast<std::size_t>(r)] = op(lhs.at(r), rhs.at(r));
  }
  return PeriodicSignal(lhs.grid(), lhs.period_len(), std::move(out));
}

}  // namespace

PeriodicSignal operator+(const PeriodicSignal& lhs, const PeriodicSignal& rhs) {
  return combine_periodic(lhs, rhs, [](Complex x, Complex y) { return x + y; });
}

PeriodicSignal operator-(const PeriodicSignal& lhs, const PeriodicSignal& rhs) {
  return combine_periodic(lhs, rhs, [](Complex x, Complex y) { return x - y; });
}

PeriodicSignal operator*(const PeriodicSignal& lhs, const PeriodicSignal& rhs) {
  return combine_periodic(lhs, rhs, [](Complex x, Complex y) { return x * y; });
}

PeriodicSignal operator*(Complex scale, const PeriodicSignal& h) {
  std::vector<Complex> out(h.samples().begin(), h.samples().end());
  for (Complex& v : out) v *= scale;
  return PeriodicSignal(h.grid(), h.period_len(), std::move(out));
}

double max_abs_difference(const PeriodicSignal& lhs, const PeriodicSignal& rhs) {
  const PeriodicSignal diff = lhs - rhs;
  return diff.max_abs();
}

PeriodicSignal dilate(const PeriodicSignal& h, std::int64_t num, std::int64_t den) {
  const std::int64_t L2 = dilated_density(h.grid(), num, den);
  const LatticeGrid grid(L2, h.grid().p(), h.grid().q());
  const double scale = 1.0 / std::sqrt(std::abs(static_cast<double>(num) / den));
  std::vector<Complex> out(static_cast<std::size_t>(h.period_len()));
  const bool reflect = (num < 0) != (den < 0);
  for (std::int64_t r = 0; r < h.period_len(); ++r) {
    out[static_cast<std::size_t>(r)] = scale * h.at(reflect ? -r : r);
  }
  return PeriodicSignal(grid, h.period_len(), std::move(out));
}

}  // namespace bracketframe
