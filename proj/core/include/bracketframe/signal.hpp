// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "bracketframe/lattice.hpp"

namespace bracketframe {

using Complex = std::complex<double>;

/// Compactly supported complex signal on a LatticeGrid.
///
/// Sample j sits at t = (offset + j) * dt. Outside [offset, offset + size)
/// the signal is zero. Values are immutable once constructed; every
/// operation returns a new signal.
class SampledSignal {
 public:
  /// The zero signal on `grid`.
  explicit SampledSignal(LatticeGrid grid);
  SampledSignal(LatticeGrid grid, std::int64_t offset,
                std::vector<Complex> samples);

  const LatticeGrid& grid() const noexcept { return grid_; }
  std::int64_t offset() const noexcept { return offset_; }
  /// One past the last grid index of the support.
  std::int64_t end() const noexcept {
    return offset_ + static_cast<std::int64_t>(samples_.size());
  }
  std::int64_t size() const noexcept {
    return static_cast<std::int64_t>(samples_.size());
  }
  bool empty() const noexcept { return samples_.empty(); }
  std::span<const Complex> samples() const noexcept { return samples_; }

  /// Value at absolute grid index (zero outside the support).
  Complex at(std::int64_t index) const noexcept {
    const std::int64_t j = index - offset_;
    return (j >= 0 && j < size()) ? samples_[static_cast<std::size_t>(j)]
                                  : Complex{};
  }
  double time_of(std::int64_t index) const noexcept {
    return static_cast<double>(index) * grid_.dt();
  }

  double norm_squared() const noexcept;
  double norm() const noexcept;
  double max_abs() const noexcept;

  /// Same signal represented on exactly [lo, hi): zero-padded or truncated.
  SampledSignal on_interval(std::int64_t lo, std::int64_t hi) const;
  /// Drops leading and trailing samples with modulus <= threshold.
  SampledSignal trimmed(double threshold = 0.0) const;
  SampledSignal conj() const;

 private:
  LatticeGrid grid_;
  std::int64_t offset_ = 0;
  std::vector<Complex> samples_;
};

SampledSignal operator+(const SampledSignal& lhs, const SampledSignal& rhs);
SampledSignal operator-(const SampledSignal& lhs, const SampledSignal& rhs);
SampledSignal operator-(const SampledSignal& f);
SampledSignal operator*(Complex scale, const SampledSignal& f);
inline SampledSignal operator*(const SampledSignal& f, Complex scale) {
  return scale * f;
}

/// sup_j |f_j - g_j| over the union of the supports.
double max_abs_difference(const SampledSignal& f, const SampledSignal& g);

/// T_x f with x = k·a, k/b or k·dt. Pure offset arithmetic.
SampledSignal translate(const SampledSignal& f, std::int64_t k, ShiftUnit unit);

/// E_x f with x = m·b or m/a. The phase is reduced modulo the lattice
/// period in integer arithmetic, so E_{qb} is exactly the identity on grid
/// samples.
SampledSignal modulate(const SampledSignal& f, std::int64_t m,
                       ModulationUnit unit);

/// D_c f with c = num/den. The grid density changes to L' = L·|den/num|
/// while (p, q) keep their step counts, i.e. the lattice is dilated along
/// with the signal: D_c maps the system (g, a, b) to (D_c g, c·a, b/c).
/// Throws IncompatibleDilation when L' is not an integer.
SampledSignal dilate(const SampledSignal& f, std::int64_t num, std::int64_t den);

/// <f, g> = dt · Σ_j f_j conj(g_j).
Complex inner_product(const SampledSignal& f, const SampledSignal& g);

/// Σ_n sup |g · χ_[n·block, (n+1)·block)| with blocks of `block_steps`
/// grid steps aligned at index 0.
double wiener_amalgam_norm(const SampledSignal& g, std::int64_t block_steps);

/// One period of a periodic function on a LatticeGrid. Evaluation at any
/// grid index wraps modulo period_len.
class PeriodicSignal {
 public:
  PeriodicSignal(LatticeGrid grid, std::int64_t period_len,
                 std::vector<Complex> samples);

  static PeriodicSignal constant(LatticeGrid grid, std::int64_t period_len,
                                 Complex value);

  const LatticeGrid& grid() const noexcept { return grid_; }
  std::int64_t period_len() const noexcept { return period_len_; }
  std::span<const Complex> samples() const noexcept { return samples_; }

  Complex at(std::int64_t index) const noexcept {
    return samples_[static_cast<std::size_t>(floor_mod(index, period_len_))];
  }

  /// ∫_0^P h(t) dt by the left Riemann sum.
  Complex integral() const noexcept;
  /// ∫_0^P |h(t)|^2 dt.
  double l2_norm_squared() const noexcept;
  double max_abs() const noexcept;
  double max_imag_abs() const noexcept;

  /// (T_s h)(t) = h(t - s·dt).
  PeriodicSignal translated(std::int64_t steps) const;
  PeriodicSignal conj() const;

 private:
  LatticeGrid grid_;
  std::int64_t period_len_;
  std::vector<Complex> samples_;
};

PeriodicSignal operator+(const PeriodicSignal& lhs, const PeriodicSignal& rhs);
PeriodicSignal operator-(const PeriodicSignal& lhs, const PeriodicSignal& rhs);
/// Pointwise product.
PeriodicSignal operator*(const PeriodicSignal& lhs, const PeriodicSignal& rhs);
PeriodicSignal operator*(Complex scale, const PeriodicSignal& h);

double max_abs_difference(const PeriodicSignal& lhs, const PeriodicSignal& rhs);

/// D_c applied to one period: samples keep their index, the grid density
/// becomes L·|den/num| and the values are scaled by |c|^{-1/2}.
PeriodicSignal dilate(const PeriodicSignal& h, std::int64_t num,
                      std::int64_t den);

}  // namespace bracketframe
