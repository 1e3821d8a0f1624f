// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace bracketframe {

using CVector = std::vector<std::complex<double>>;

/// y = A x for a Hermitian operator on C^n. `y` is pre-sized and must be
/// overwritten entirely.
using HermitianOperator = std::function<void(
    std::span<const std::complex<double>> x, std::span<std::complex<double>> y)>;

struct CgResult {
  CVector x;
  int iterations = 0;
  /// ||b - A x|| / ||b||
  double relative_residual = 0.0;
};

/// Conjugate gradients for a Hermitian positive definite A. Stops when the
/// relative residual drops to `tol`. Throws NotConverged after `max_iter`
/// iterations and NotPositiveDefinite on non-positive curvature.
CgResult conjugate_gradient(const HermitianOperator& op,
                            std::span<const std::complex<double>> rhs,
                            double tol, int max_iter);

struct EigenEstimate {
  double value = 0.0;
  CVector vector;
  int iterations = 0;
  bool converged = false;
};

/// Largest eigenvalue by power iteration with Rayleigh quotients; converged
/// once successive quotients differ by at most tol·|quotient|. Returns the
/// last estimate with converged = false after max_iter iterations.
EigenEstimate power_iteration(const HermitianOperator& op, CVector start,
                              int max_iter, double tol);

/// Smallest eigenvalue of a positive definite operator by inverse iteration,
/// solving A y = x with conjugate gradients at each step.
EigenEstimate inverse_iteration(const HermitianOperator& op, CVector start,
                                int max_iter, double tol, double cg_tol);

double norm2(std::span<const std::complex<double>> x) noexcept;
std::complex<double> dot(std::span<const std::complex<double>> x,
                         std::span<const std::complex<double>> y) noexcept;

}  // namespace bracketframe
