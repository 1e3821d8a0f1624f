// SPDX-License-Identifier: Apache-2.0
#include "bracketframe/lattice.hpp"

#include <numeric>
#include <sstream>

#include "bracketframe/error.hpp"

namespace bracketframe {

LatticeGrid::LatticeGrid(std::int64_t L, std::int64_t p, std::int64_t q)
    : L_(L), p_(p), q_(q) {
  if (L <= 0 || p <= 0 || q <= 0) {
    std::ostringstream msg;
    msg << "lattice requires positive (L, p, q), got (" << L << ", " << p
        << ", " << q << ")";
    throw InvalidArgument(msg.str());
  }
}

Rational LatticeGrid::ab_rational() const noexcept {
  const std::int64_t d = std::gcd(p_, q_);
  return {p_ / d, q_ / d};
}

std::string to_string(const LatticeGrid& grid) {
  std::ostringstream out;
  out << "(L=" << grid.L() << ", p=" << grid.p() << ", q=" << grid.q() << ")";
  return out.str();
}

std::string to_string(Period period) {
  return period == Period::shift_a ? "a" : "inv_b";
}

void require_same_grid(const LatticeGrid& lhs, const LatticeGrid& rhs,
                       const char* context) {
  if (lhs == rhs) return;
  throw GridMismatch(std::string(context) + ": grid " + to_string(lhs) +
                     " differs from " + to_string(rhs));
}

}  // namespace bracketframe
