// SPDX-License-Identifier: Apache-2.0
// Reference computations for the tests. Everything here is written from the
// defining formulas with plain loops and floating-point times, independent
// of the library's index arithmetic.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "bracketframe/signal.hpp"

namespace oracle {

using bracketframe::Complex;
using bracketframe::LatticeGrid;
using bracketframe::SampledSignal;

inline SampledSignal random_signal(const LatticeGrid& grid, std::int64_t lo, std::int64_t hi,
                                   std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> s(static_cast<std::size_t>(hi - lo));
  for (Complex& v : s) v = {normal(rng), normal(rng)};
  return SampledSignal(grid, lo, std::move(s));
}

inline SampledSignal real_signal(const LatticeGrid& grid, std::int64_t lo, std::int64_t hi,
                                 std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> s(static_cast<std::size_t>(hi - lo));
  for (Complex& v : s) v = normal(rng);
  return SampledSignal(grid, lo, std::move(s));
}

/// Σ_n f(t_r - nP) conj(g(t_r - nP)) for r in [0, P), summing every n that
/// could reach either support.
inline std::vector<Complex> bracket(const SampledSignal& f, const SampledSignal& g,
                                    std::int64_t P) {
  std::vector<Complex> out(static_cast<std::size_t>(P));
  const std::int64_t reach = (std::abs(f.offset()) + std::abs(f.end()) + std::abs(g.offset()) +
                              std::abs(g.end())) / P + 2;
  for (std::int64_t r = 0; r < P; ++r) {
    Complex acc{};
    for (std::int64_t n = -reach; n <= reach; ++n) {
      acc += f.at(r - n * P) * std::conj(g.at(r - n * P));
    }
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

/// ∫ f conj(g) by the left Riemann sum over every grid index.
inline Complex inner(const SampledSignal& f, const SampledSignal& g) {
  Complex acc{};
  for (std::int64_t j = std::min(f.offset(), g.offset()); j < std::max(f.end(), g.end()); ++j) {
    acc += f.at(j) * std::conj(g.at(j));
  }
  return acc / static_cast<double>(f.grid().L());
}

/// E_{mb} T_{na} g evaluated at the grid time t_j with the phase computed
/// in floating point from t_j = j/L and b = L/q.
inline Complex atom(const SampledSignal& g, std::int64_t m, std::int64_t n, std::int64_t j) {
  const LatticeGrid& grid = g.grid();
  const double t = static_cast<double>(j) / static_cast<double>(grid.L());
  const double b = static_cast<double>(grid.L()) / static_cast<double>(grid.q());
  const double phase = 2.0 * std::numbers::pi * static_cast<double>(m) * b * t;
  return std::polar(1.0, phase) * g.at(j - n * grid.p());
}

/// <f, E_{mb} T_{na} g> from the definition.
inline Complex coefficient(const SampledSignal& f, const SampledSignal& g, std::int64_t m,
                           std::int64_t n) {
  Complex acc{};
  for (std::int64_t j = f.offset(); j < f.end(); ++j) acc += f.at(j) * std::conj(atom(g, m, n, j));
  return acc / static_cast<double>(f.grid().L());
}

/// Translations n whose T_{na} g meets [lo, hi).
inline std::pair<std::int64_t, std::int64_t> n_span(const SampledSignal& g, std::int64_t lo,
                                                    std::int64_t hi) {
  const std::int64_t p = g.grid().p();
  std::int64_t first = 0, last = -1;
  bool any = false;
  for (std::int64_t n = (lo - g.end()) / p - 2; n <= (hi - g.offset()) / p + 2; ++n) {
    if (g.offset() + n * p < hi && g.end() + n * p > lo) {
      if (!any) first = n;
      last = n;
      any = true;
    }
  }
  return {first, last};
}

/// Dense matrix of the frame operator restricted to signals on [lo, hi):
/// S = dt Σ_{n} Σ_{m=0}^{q-1} v_{mn} v_{mn}^*, v_{mn} = E_{mb}T_{na}g on the
/// domain. Acting on sample vectors it reproduces S f on the domain.
inline Eigen::MatrixXcd frame_matrix(const SampledSignal& g, std::int64_t lo, std::int64_t hi) {
  const std::int64_t N = hi - lo;
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(N, N);
  const auto [n_first, n_last] = n_span(g, lo, hi);
  Eigen::VectorXcd v(N);
  for (std::int64_t n = n_first; n <= n_last; ++n) {
    for (std::int64_t m = 0; m < g.grid().q(); ++m) {
      for (std::int64_t i = 0; i < N; ++i) v(i) = atom(g, m, n, lo + i);
      S.noalias() += v * v.adjoint();
    }
  }
  return S / static_cast<double>(g.grid().L());
}

inline Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& A) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(A, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/// max |x - y| / max(|y|, floor)
inline double rel_err(const std::vector<Complex>& x, const std::vector<Complex>& y,
                      double floor = 1e-300) {
  double diff = 0.0, scale = floor;
  for (std::size_t i = 0; i < x.size(); ++i) {
    diff = std::max(diff, std::abs(x[i] - y[i]));
    scale = std::max(scale, std::abs(y[i]));
  }
  return diff / scale;
}

inline std::vector<Complex> samples(const bracketframe::PeriodicSignal& h) {
  return {h.samples().begin(), h.samples().end()};
}

/// Samples of f on [lo, hi).
inline std::vector<Complex> window_of(const SampledSignal& f, std::int64_t lo, std::int64_t hi) {
  std::vector<Complex> out(static_cast<std::size_t>(hi - lo));
  for (std::int64_t j = lo; j < hi; ++j) out[static_cast<std::size_t>(j - lo)] = f.at(j);
  return out;
}

/// Σ_{|n|<=10} e^{-2c (t - n)^2}: the a = 1 bracket of e^{-c t^2} with itself.
inline double gaussian_bracket_a1(double t, double c = 1.0) {
  double acc = 0.0;
  for (int n = -10; n <= 10; ++n) acc += std::exp(-2.0 * c * (t - n) * (t - n));
  return acc;
}

}  // namespace oracle
