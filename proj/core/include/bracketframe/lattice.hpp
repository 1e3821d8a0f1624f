// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace bracketframe {

/// Period of a bracket product: the shift parameter a, or the inverse
/// modulation parameter 1/b.
enum class Period { shift_a, inv_b };

/// Unit of a translation count.
enum class ShiftUnit { shift_a, inv_b, raw_steps };

/// Unit of a modulation count: multiples of b, or multiples of 1/a.
enum class ModulationUnit { mod_b, inv_a };

struct Rational {
  std::int64_t num;
  std::int64_t den;
  double value() const noexcept { return static_cast<double>(num) / den; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Uniform grid with step dt = 1/L carrying a Gabor lattice whose shift
/// a = p/L and inverse modulation 1/b = q/L are exact grid multiples.
///
/// All combinatorics (translations by na or k/b, aliasing of modulations,
/// the critical-density test ab = 1) are done on the integers (L, p, q);
/// doubles only appear when a sample value or a quadrature weight is needed.
class LatticeGrid {
 public:
  LatticeGrid(std::int64_t L, std::int64_t p, std::int64_t q);

  std::int64_t L() const noexcept { return L_; }
  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }

  double dt() const noexcept { return 1.0 / static_cast<double>(L_); }
  double a() const noexcept { return static_cast<double>(p_) / L_; }
  double b() const noexcept { return static_cast<double>(L_) / q_; }
  double inv_b() const noexcept { return static_cast<double>(q_) / L_; }

  /// ab = p/q in lowest terms.
  Rational ab_rational() const noexcept;
  bool is_critical() const noexcept { return p_ == q_; }

  std::int64_t period_steps(Period period) const noexcept {
    return period == Period::shift_a ? p_ : q_;
  }
  double period_length(Period period) const noexcept {
    return static_cast<double>(period_steps(period)) / L_;
  }

  friend bool operator==(const LatticeGrid&, const LatticeGrid&) = default;

 private:
  std::int64_t L_;
  std::int64_t p_;
  std::int64_t q_;
};

std::string to_string(const LatticeGrid& grid);
std::string to_string(Period period);

/// Throws GridMismatch naming `context` unless both grids are equal.
void require_same_grid(const LatticeGrid& lhs, const LatticeGrid& rhs,
                       const char* context);

/// Mathematical (non-negative) remainder.
constexpr std::int64_t floor_mod(std::int64_t x, std::int64_t m) noexcept {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

constexpr std::int64_t floor_div(std::int64_t x, std::int64_t m) noexcept {
  return (x - floor_mod(x, m)) / m;
}

constexpr std::int64_t ceil_div(std::int64_t x, std::int64_t m) noexcept {
  return -floor_div(-x, m);
}

}  // namespace bracketframe
