// SPDX-License-Identifier: Apache-2.0
#include "bracketframe/spectral.hpp"

#include <cmath>
#include <sstream>

#include "bracketframe/error.hpp"

namespace bracketframe {

double norm2(std::span<const std::complex<double>> x) noexcept {
  double s = 0.0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

std::complex<double> dot(std::span<const std::complex<double>> x,
                         std::span<const std::complex<double>> y) noexcept {
  std::complex<double> s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

namespace {

void scale_in_place(CVector& x, double s) {
  for (auto& v : x) v *= s;
}

}  // namespace

CgResult conjugate_gradient(const HermitianOperator& op,
                            std::span<const std::complex<double>> rhs, double tol,
                            int max_iter) {
  const std::size_t n = rhs.size();
  CgResult result;
  result.x.assign(n, {});
  const double rhs_norm = norm2(rhs);
  if (rhs_norm == 0.0) return result;

  CVector r(rhs.begin(), rhs.end());
  CVector p = r;
  CVector ap(n);
  double rs = norm2(r) * norm2(r);
  for (int it = 1; it <= max_iter; ++it) {
    op(p, ap);
    const double curvature = dot(p, ap).real();
    if (!(curvature > 0.0)) {
      std::ostringstream msg;
      msg << "conjugate_gradient: non-positive curvature " << curvature << " at iteration "
          << it;
      throw NotPositiveDefinite(msg.str());
    }
    const double alpha = rs / curvature;
    for (std::size_t i = 0; i < n; ++i) {
      result.x[i] += alpha * p[i];
      r[i] -= alpha * ap[i];
    }
    const double rs_next = norm2(r) * norm2(r);
    result.iterations = it;
    result.relative_residual = std::sqrt(rs_next) / rhs_norm;
    if (result.relative_residual <= tol) return result;
    const double beta = rs_next / rs;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    rs = rs_next;
  }
  std::ostringstream msg;
  msg << "conjugate_gradient: relative residual " << result.relative_residual
      << " after " << max_iter << " iterations (target " << tol << ")";
  throw NotConverged(max_iter, msg.str());
}

EigenEstimate power_iteration(const HermitianOperator& op, CVector start, int max_iter,
                              double tol) {
  EigenEstimate est;
  const double n0 = norm2(start);
  if (n0 == 0.0) throw InvalidArgument("power_iteration: zero start vector");
  scale_in_place(start, 1.0 / n0);
  est.vector = std::move(start);

  CVector y(est.vector.size());
  op(est.vector, y);
  est.value = dot(est.vector, y).real();
  for (int it = 1; it <= max_iter; ++it) {
    const double ny = norm2(y);
    if (ny == 0.0) {
      est.iterations = it;
      est.converged = true;
      return est;
    }
    est.vector = y;
    scale_in_place(est.vector, 1.0 / ny);
    op(est.vector, y);
    const double next = dot(est.vector, y).real();
    const bool done = std::abs(next - est.value) <= tol * std::abs(next);
    est.value = std::max(est.value, next);
    est.iterations = it;
    if (done) {
      est.converged = true;
      return est;
    }
  }
  return est;
}

EigenEstimate inverse_iteration(const HermitianOperator& op, CVector start, int max_iter,
                                double tol, double cg_tol) {
  EigenEstimate est;
  const double n0 = norm2(start);
  if (n0 == 0.0) throw InvalidArgument("inverse_iteration: zero start vector");
  scale_in_place(start, 1.0 / n0);
  est.vector = std::move(start);

  CVector y(est.vector.size());
  op(est.vector, y);
  est.value = dot(est.vector, y).real();
  const int cg_iter = std::max<int>(1000, 10 * static_cast<int>(est.vector.size()));
  for (int it = 1; it <= max_iter; ++it) {
    CVector z = conjugate_gradient(op, est.vector, cg_tol, cg_iter).x;
    const double nz = norm2(z);
    if (nz == 0.0) throw NotPositiveDefinite("inverse_iteration: solve returned zero");
    scale_in_place(z, 1.0 / nz);
    op(z, y);
    const double next = dot(z, y).real();
    est.vector = std::move(z);
    const bool done = std::abs(next - est.value) <= tol * std::abs(next);
    est.value = std::min(est.value, next);
    est.iterations = it;
    if (done) {
      est.converged = true;
      return est;
    }
  }
  return est;
}

}  // namespace bracketframe
