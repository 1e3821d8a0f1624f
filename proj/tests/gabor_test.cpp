// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bracketframe/error.hpp"
#include "bracketframe/gabor.hpp"
#include "bracketframe/generators.hpp"
#include "support/oracles.hpp"

namespace bf = bracketframe;

namespace {

// (p, q) = (1, 1), (1, 2), (2, 3) in units of L.
std::vector<bf::LatticeGrid> battery(std::int64_t L) {
  return {bf::LatticeGrid(L, L, L), bf::LatticeGrid(L, L, 2 * L), bf::LatticeGrid(L, 2 * L, 3 * L)};
}

double rel_diff(const bf::SampledSignal& x, const bf::SampledSignal& ref) {
  return bf::max_abs_difference(x, ref) / std::max(ref.max_abs(), 1e-300);
}

}  // namespace

TEST(GkFunction, Examples) {
  const bf::LatticeGrid unit(64, 64, 64);
  for (const auto& v : oracle::samples(bf::gk_function(bf::indicator(unit, 0, 64), 0))) {
    EXPECT_EQ(v, bf::Complex(1.0));
  }
  const bf::LatticeGrid half_b(64, 64, 128);
  EXPECT_EQ(bf::gk_function(bf::indicator(half_b, 0, 64), 1).max_abs(), 0.0);

  double g1 = 0.0;  // Σ_n e^{-n^2} e^{-(n+1)^2}
  for (int n = -10; n <= 10; ++n) g1 += std::exp(-double(n * n) - double((n + 1) * (n + 1)));
  EXPECT_NEAR(g1, 0.7492392970276454, 1e-14);
  const bf::PeriodicSignal gk = bf::gk_function(bf::gaussian(unit, 1.0, 8.0), 1);
  EXPECT_NEAR(gk.at(0).real(), g1, 1e-12);
  EXPECT_EQ(bf::gk_max_index(bf::gaussian(unit, 1.0, 8.0)), 15);
}

TEST(WhCoefficient, Examples) {
  const bf::LatticeGrid unit(64, 64, 64);
  const bf::SampledSignal chi = bf::indicator(unit, 0, 64);
  const bf::WHSystem sys = bf::WHSystem::around_window(chi, 64);
  EXPECT_NEAR(std::abs(bf::wh_coefficient(chi, sys, 0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_EQ(bf::wh_coefficient(chi, sys, 0, 1), bf::Complex{});
  EXPECT_THROW(bf::wh_coefficient(chi, sys, 64, 0), bf::IndexOutOfRange);
  EXPECT_THROW(bf::wh_coefficient(chi, sys, -1, 0), bf::IndexOutOfRange);

  // ∫_0^1 e^{-πit} dt = 2/(πi)
  const bf::LatticeGrid fine(512, 512, 1024);
  const bf::SampledSignal chi_f = bf::indicator(fine, 0, 512);
  const bf::WHSystem sys_f = bf::WHSystem::around_window(chi_f, 0);
  EXPECT_NEAR(std::abs(bf::wh_coefficient(chi_f, sys_f, 1, 0)), 2.0 / std::numbers::pi, 1e-6);
}

TEST(WhCoefficient, MatchesFloatingPhaseOracle) {
  std::mt19937_64 rng(31);
  for (const bf::LatticeGrid& grid : battery(16)) {
    const bf::SampledSignal g = oracle::random_signal(grid, -20, 30, rng);
    const bf::SampledSignal f = oracle::random_signal(grid, -40, 50, rng);
    const bf::WHSystem sys = bf::WHSystem::around_window(g, 0);
    for (std::int64_t n = -3; n <= 3; ++n) {
      for (std::int64_t m = 0; m < grid.q(); m += 5) {
        EXPECT_LE(std::abs(bf::wh_coefficient(f, sys, m, n) - oracle::coefficient(f, g, m, n)),
                  1e-12);
      }
    }
  }
}

TEST(FiberEnergy, EqualsCoefficientSum) {
  std::mt19937_64 rng(32);
  for (const bf::LatticeGrid& grid : battery(64)) {
    for (int trial = 0; trial < 5; ++trial) {
      const bf::SampledSignal g = oracle::random_signal(grid, -grid.q(), grid.q(), rng);
      const bf::SampledSignal f = oracle::random_signal(grid, -2 * grid.q(), grid.q() + 17, rng);
      const bf::WHSystem sys = bf::WHSystem::around_window(g, 0);
      const bf::IndexRange range = sys.n_range_for(f);
      for (std::int64_t n = range.first; n <= range.last; ++n) {
        double brute = 0.0;
        for (std::int64_t m = 0; m < grid.q(); ++m) brute += std::norm(oracle::coefficient(f, g, m, n));
        const double fiber = bf::fiber_energy(f, sys, n);
        EXPECT_LE(std::abs(fiber - brute), 1e-10 * std::max(brute, 1e-300)) << "n=" << n;
        EXPECT_LE(std::abs(bf::coefficient_energy(f, sys, n) - brute), 1e-10 * brute);
      }
    }
  }
}

TEST(FiberEnergy, TrivialCases) {
  const bf::LatticeGrid unit(64, 64, 64);
  const bf::SampledSignal chi = bf::indicator(unit, 0, 64);
  const bf::WHSystem sys = bf::WHSystem::around_window(chi, 0);
  EXPECT_NEAR(bf::fiber_energy(chi, sys, 0), 1.0, 1e-15);
  const bf::LatticeGrid wide(64, 128, 128);
  const bf::WHSystem sys2 = bf::WHSystem::around_window(bf::indicator(wide, 0, 64), 0);
  EXPECT_EQ(bf::fiber_energy(bf::indicator(wide, 64, 64), sys2, 0), 0.0);
}

TEST(FrameOperator, NaiveCompressedProjectionAndDenseAgree) {
  std::mt19937_64 rng(33);
  for (const bf::LatticeGrid& grid : battery(16)) {
    const bf::SampledSignal g = oracle::random_signal(grid, -grid.q() / 2, grid.q(), rng);
    const bf::SampledSignal f = oracle::random_signal(grid, -grid.q(), grid.q(), rng);
    const bf::WHSystem sys = bf::WHSystem::around_window(g, grid.q());
    const bf::SampledSignal naive = bf::frame_operator_naive(f, sys);
    EXPECT_LE(rel_diff(bf::frame_operator_compressed(f, sys), naive), 1e-10);
    EXPECT_LE(rel_diff(bf::frame_operator_projection_form(f, sys), naive), 1e-10);

    const std::int64_t lo = naive.offset(), hi = naive.end();
    const Eigen::MatrixXcd S = oracle::frame_matrix(g, lo, hi);
    Eigen::VectorXcd x(hi - lo);
    for (std::int64_t j = lo; j < hi; ++j) x(j - lo) = f.at(j);
    const Eigen::VectorXcd y = S * x;
    double worst = 0.0;
    for (std::int64_t j = lo; j < hi; ++j) worst = std::max(worst, std::abs(y(j - lo) - naive.at(j)));
    EXPECT_LE(worst, 1e-10 * naive.max_abs());
  }
}

TEST(FrameOperator, IdentityAndTwiceIdentity) {
  std::mt19937_64 rng(34);
  const bf::LatticeGrid unit(64, 64, 64);
  const bf::SampledSignal chi = bf::indicator(unit, 0, 64);
  const bf::WHSystem sys = bf::WHSystem::around_window(chi, 128);
  const bf::SampledSignal f = oracle::random_signal(unit, -100, 150, rng);
  EXPECT_LE(bf::max_abs_difference(bf::frame_operator_naive(f, sys), f), 1e-10);
  EXPECT_LE(bf::max_abs_difference(bf::frame_operator_compressed(f, sys), f), 1e-10);
  const bf::SampledSignal gauss = bf::gaussian(unit, 1.0, 8.0);
  EXPECT_LE(bf::max_abs_difference(bf::frame_operator_compressed(gauss, sys), gauss), 1e-10);

  const bf::LatticeGrid half_b(64, 64, 128);
  const bf::SampledSignal chi2 = bf::indicator(half_b, 0, 64);
  const bf::WHSystem sys2 = bf::WHSystem::around_window(chi2, 128);
  const bf::SampledSignal f2 = oracle::random_signal(half_b, -100, 150, rng);
  EXPECT_LE(bf::max_abs_difference(bf::frame_operator_naive(f2, sys2), bf::Complex(2.0) * f2), 1e-10);
  EXPECT_LE(bf::max_abs_difference(bf::frame_operator_compressed(f2, sys2), bf::Complex(2.0) * f2),
            1e-10);

  EXPECT_EQ(bf::frame_operator_compressed(bf::SampledSignal(unit), sys).max_abs(), 0.0);
  EXPECT_EQ(bf::frame_operator_naive(bf::SampledSignal(unit), sys).max_abs(), 0.0);
}

TEST(FrameIdentity, ThreeWayAgreement) {
  std::mt19937_64 rng(35);
  const bf::LatticeGrid unit(64, 64, 64);
  const bf::SampledSignal g = bf::gaussian(unit, 1.0, 8.0);
  for (int trial = 0; trial < 3; ++trial) {
    const bf::SampledSignal f = oracle::random_signal(unit, -200, 250, rng);
    const bf::FrameIdentityTerms t = bf::wh_frame_identity(f, g);
    EXPECT_LE(std::abs(t.F1 + t.F2 - t.direct_total), 1e-8 * t.direct_total);
    EXPECT_LE(std::abs(t.bracket_form - (t.F1 + t.F2)), 1e-10 * t.direct_total);
  }
}

TEST(FrameIdentity, VanishingCrossTerms) {
  std::mt19937_64 rng(36);
  const bf::LatticeGrid half_b(64, 64, 128);
  const bf::SampledSignal f = oracle::random_signal(half_b, -100, 300, rng);
  const bf::FrameIdentityTerms t = bf::wh_frame_identity(f, bf::indicator(half_b, 0, 64));
  EXPECT_LE(std::abs(t.F2), 1e-12);
  EXPECT_LE(std::abs(t.F1 - 2.0 * f.norm_squared()), 1e-10 * f.norm_squared());

  // f supported on [0, 1/b]: no cross terms whatever the window.
  const bf::LatticeGrid grid(64, 32, 128);
  const bf::SampledSignal f2 = oracle::random_signal(grid, 0, 128, rng);
  const bf::FrameIdentityTerms t2 = bf::wh_frame_identity(f2, bf::gaussian(grid, 1.0, 4.0));
  EXPECT_LE(std::abs(t2.F2), 1e-12);
}

TEST(TightFrameCheck, Examples) {
  const bf::LatticeGrid unit(64, 64, 64);
  const bf::TightnessVerdict onb = bf::tight_frame_check(bf::indicator(unit, 0, 64), 1e-9);
  EXPECT_TRUE(onb.tight);
  EXPECT_TRUE(onb.normalized_tight);
  EXPECT_TRUE(onb.orthonormal_basis);
  EXPECT_EQ(onb.g0_range.inf, 1.0);
  EXPECT_EQ(onb.g0_range.sup, 1.0);
  EXPECT_LE(onb.adjoint_gram_residual, 1e-12);
  EXPECT_LE(onb.fixed_point_residual, 1e-12);

  const bf::LatticeGrid half_b(64, 64, 128);
  const bf::TightnessVerdict two = bf::tight_frame_check(bf::indicator(half_b, 0, 64), 1e-9);
  EXPECT_TRUE(two.tight);
  EXPECT_FALSE(two.normalized_tight);
  EXPECT_FALSE(two.orthonormal_basis);
  EXPECT_DOUBLE_EQ(two.tight_bound, 2.0);

  const bf::TightnessVerdict gauss = bf::tight_frame_check(bf::gaussian(unit, 1.0, 8.0), 1e-9);
  EXPECT_FALSE(gauss.tight);
  EXPECT_NEAR(gauss.g0_range.sup - gauss.g0_range.inf, 1.2713415221890152 - 1.2352867658538902, 1e-10);

  // χ_[0,1)/√2 with a = 1/2, b = 1: normalized tight, not an ONB.
  const bf::LatticeGrid dense(64, 32, 64);
  const bf::TightnessVerdict nt =
      bf::tight_frame_check(bf::Complex(1.0 / std::sqrt(2.0)) * bf::indicator(dense, 0, 64), 1e-9);
  EXPECT_TRUE(nt.normalized_tight);
  EXPECT_FALSE(nt.orthonormal_basis);
  EXPECT_NEAR(nt.norm_defect, 0.0, 1e-12);
}

TEST(RieszBounds, Examples) {
  const bf::LatticeGrid unit(64, 64, 64);
  const bf::RieszBounds chi = bf::riesz_sequence_bounds(bf::indicator(unit, 0, 64), bf::Period::shift_a, false);
  EXPECT_EQ(chi.A, 1.0);
  EXPECT_EQ(chi.B, 1.0);

  const bf::RieszBounds g = bf::riesz_sequence_bounds(bf::gaussian(unit, 1.0, 8.0), bf::Period::shift_a, false);
  EXPECT_NEAR(g.A, oracle::gaussian_bracket_a1(0.5), 1e-12);
  EXPECT_NEAR(g.B, oracle::gaussian_bracket_a1(0.0), 1e-12);
  EXPECT_NEAR(g.synthesis_min, g.A, 1e-3 * g.A);
  EXPECT_NEAR(g.synthesis_max, g.B, 1e-3 * g.B);

  const bf::SampledSignal half = bf::indicator(unit, 0, 32);
  const bf::RieszBounds h = bf::riesz_sequence_bounds(half, bf::Period::shift_a, false);
  EXPECT_EQ(h.A, 0.0);
  EXPECT_EQ(h.synthesis_min, 0.0);
  const bf::RieszBounds hr = bf::riesz_sequence_bounds(half, bf::Period::shift_a, true);
  EXPECT_EQ(hr.A, 1.0);
  EXPECT_EQ(hr.B, 1.0);
  EXPECT_NEAR(hr.synthesis_min, 1.0, 1e-12);

  EXPECT_THROW(bf::riesz_sequence_bounds(bf::SampledSignal(unit), bf::Period::shift_a, false),
               bf::ZeroWindow);
}

TEST(RieszBounds, SynthesisSingularValuesFromDenseSvd) {
  // φ ↦ φ~ g with φ one period of length a; dense matrix in the dt-weighted
  // inner products (the weights cancel).
  std::mt19937_64 rng(37);
  const bf::LatticeGrid grid(64, 48, 64);
  const bf::SampledSignal g = oracle::random_signal(grid, -70, 90, rng);
  const std::int64_t P = grid.p();
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(g.size(), P);
  for (std::int64_t j = g.offset(); j < g.end(); ++j) A(j - g.offset(), bf::floor_mod(j, P)) = g.at(j);
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
  const auto& sv = svd.singularValues();
  const double smax = sv(0) * sv(0), smin = sv(sv.size() - 1) * sv(sv.size() - 1);
  const bf::RieszBounds rb = bf::riesz_sequence_bounds(g, bf::Period::shift_a, false);
  EXPECT_NEAR(rb.A, smin, 1e-10 * smax);
  EXPECT_NEAR(rb.B, smax, 1e-10 * smax);
  EXPECT_NEAR(rb.synthesis_min, smin, 1e-10 * smax);
  EXPECT_NEAR(rb.synthesis_max, smax, 1e-10 * smax);
}

TEST(Completeness, Examples) {
  const bf::LatticeGrid unit(64, 64, 64);
  const bf::CompletenessVerdict chi = bf::completeness_check(bf::indicator(unit, 0, 64));
  EXPECT_EQ(chi.kind, bf::CompletenessKind::complete);
  EXPECT_EQ(chi.zero_fraction, 0.0);
  EXPECT_TRUE(chi.verdicts_agree);

  const bf::CompletenessVerdict half = bf::completeness_check(bf::indicator(unit, 0, 32));
  EXPECT_EQ(half.kind, bf::CompletenessKind::incomplete);
  EXPECT_NEAR(half.zero_fraction, 0.5, 1.0 / 64);
  EXPECT_FALSE(half.sup_criterion_complete);
  EXPECT_TRUE(half.verdicts_agree);

  const bf::CompletenessVerdict gauss = bf::completeness_check(bf::gaussian(unit, 1.0, 8.0));
  EXPECT_EQ(gauss.kind, bf::CompletenessKind::complete);
  // y - k in [-8, 8) for y in [0, 1): k = -7..8.
  EXPECT_EQ(gauss.translates, 16);

  EXPECT_THROW(bf::completeness_check(bf::indicator(bf::LatticeGrid(64, 64, 128), 0, 64)),
               bf::LatticeNotCritical);
}

TEST(Completeness, GaussianZakVanishesOnlyAtTheCenter) {
  // Z(y, x) = Σ_k g(y - k) e^{2πikx} for the sampled Gaussian on [-8, 8)
  // at L = 64, from the definition. The symmetric pairs k, 1 - k cancel at
  // (1/2, 1/2), so Z has an isolated zero there; it vanishes nowhere else
  // and the zero set has measure zero.
  const int L = 64, M = 68;
  auto zak = [](double y, double x) {
    std::complex<double> z{};
    for (int k = -8; k <= 8; ++k) {
      const double t = y - k;
      if (t >= -8.0 && t < 8.0) z += std::exp(-t * t) * std::polar(1.0, 2.0 * std::numbers::pi * k * x);
    }
    return z;
  };
  EXPECT_LE(std::abs(zak(0.5, 0.5)), 1e-15);
  double zmax = 0.0, far_min = 1e300;
  for (int r = 0; r < L; ++r) {
    const double y = double(r) / L;
    for (int s = 0; s < M; ++s) {
      const double x = (s + 0.5) / M;
      const double z = std::abs(zak(y, x));
      zmax = std::max(zmax, z);
      if (std::hypot(y - 0.5, x - 0.5) > 0.25) far_min = std::min(far_min, z);
    }
  }
  EXPECT_GT(far_min, 0.1 * zmax);

  const bf::CompletenessVerdict v = bf::completeness_check(bf::gaussian(bf::LatticeGrid(L, L, L), 1.0, 8.0));
  EXPECT_EQ(v.zero_fraction, 0.0);
  EXPECT_EQ(v.kind, bf::CompletenessKind::complete);
}

TEST(Completeness, ZakAndSupCriteriaAgreeOnHalfLineWindows) {
  const bf::LatticeGrid unit(64, 64, 64);
  std::mt19937_64 rng(38);
  std::vector<bf::SampledSignal> windows{
      bf::indicator(unit, 0, 64),  bf::indicator(unit, 0, 32),  bf::indicator(unit, 16, 32),
      bf::indicator(unit, 0, 128), bf::indicator(unit, 0, 96),  bf::indicator(unit, -10, 40),
      bf::gaussian(unit, 1.0, 8.0), bf::gaussian(unit, 3.0, 0.25),
      oracle::random_signal(unit, 0, 200, rng), oracle::real_signal(unit, 5, 50, rng)};
  for (const bf::SampledSignal& g : windows) {
    const bf::CompletenessVerdict v = bf::completeness_check(g);
    EXPECT_TRUE(v.half_line);
    EXPECT_TRUE(v.verdicts_agree) << "offset " << g.offset() << " size " << g.size();
  }
}

TEST(SpectralBounds, IdentityAndTwiceIdentity) {
  const bf::LatticeGrid unit(64, 64, 64);
  const bf::SpectralBounds one =
      bf::spectral_frame_bounds(bf::WHSystem::around_window(bf::indicator(unit, 0, 64), 64));
  EXPECT_NEAR(one.lambda_min, 1.0, 1e-12);
  EXPECT_NEAR(one.lambda_max, 1.0, 1e-12);
  EXPECT_TRUE(one.converged);

  const bf::LatticeGrid half_b(64, 64, 128);
  const bf::SpectralBounds two =
      bf::spectral_frame_bounds(bf::WHSystem::around_window(bf::indicator(half_b, 0, 64), 64));
  EXPECT_NEAR(two.lambda_min, 2.0, 1e-12);
  EXPECT_NEAR(two.lambda_max, 2.0, 1e-12);
}

TEST(SpectralBounds, GaussianAgainstDenseEigenvalues) {
  const bf::LatticeGrid grid(32, 32, 64);
  const bf::SampledSignal g = bf::gaussian(grid, 1.0, 4.0);
  const bf::WHSystem sys(g, -128, 128);
  const bf::SpectralBounds sb = bf::spectral_frame_bounds(sys);

  const Eigen::VectorXd eig = oracle::hermitian_eigenvalues(oracle::frame_matrix(g, -128, 128));
  EXPECT_NEAR(sb.lambda_min, eig(0), 1e-6 * eig(eig.size() - 1));
  EXPECT_NEAR(sb.lambda_max, eig(eig.size() - 1), 1e-6 * eig(eig.size() - 1));

  // A <= inf G_0/b and sup G_0/b <= B on the domain.
  const bf::PeriodicSignal g0 = bf::gk_function(g, 0);
  const bf::ValueRange r = bf::ess_range(g0);
  EXPECT_LE(sb.lambda_min, r.inf / grid.b() + 1e-6);
  EXPECT_GE(sb.lambda_max, r.sup / grid.b() - 1e-6);
}

TEST(SpectralBounds, WindowedOperatorMatchesDenseMatrix) {
  std::mt19937_64 rng(39);
  const bf::LatticeGrid grid(16, 16, 24);
  const bf::SampledSignal g = oracle::random_signal(grid, -10, 30, rng);
  const bf::WHSystem sys(g, -40, 40);
  const Eigen::MatrixXcd S = oracle::frame_matrix(g, -40, 40);
  const bf::SampledSignal x = oracle::random_signal(grid, -40, 40, rng);
  std::vector<bf::Complex> y(80);
  bf::apply_windowed_frame_operator(sys, x.samples(), y);
  Eigen::VectorXcd xv(80);
  for (int i = 0; i < 80; ++i) xv(i) = x.samples()[i];
  const Eigen::VectorXcd yv = S * xv;
  for (int i = 0; i < 80; ++i) EXPECT_LE(std::abs(y[i] - yv(i)), 1e-12 * yv.cwiseAbs().maxCoeff());

  const Eigen::VectorXd eig = oracle::hermitian_eigenvalues(S);
  const bf::SpectralBounds sb = bf::spectral_frame_bounds(sys, 20000, 1e-10);
  EXPECT_NEAR(sb.lambda_min, eig(0), 1e-6 * eig(eig.size() - 1));
  EXPECT_NEAR(sb.lambda_max, eig(eig.size() - 1), 1e-6 * eig(eig.size() - 1));
}

TEST(AFrameBounds, Examples) {
  std::mt19937_64 rng(40);
  const bf::LatticeGrid unit(64, 64, 64);
  const std::vector<bf::SampledSignal> probes = bf::random_probes(unit, -128, 192, 8, 1);
  const bf::ValueRange one = bf::a_frame_bounds(bf::indicator(unit, 0, 64), probes);
  EXPECT_NEAR(one.inf, 1.0, 1e-10);
  EXPECT_NEAR(one.sup, 1.0, 1e-10);

  const bf::LatticeGrid half_b(64, 64, 128);
  const std::vector<bf::SampledSignal> probes2 = bf::random_probes(half_b, -128, 256, 8, 2);
  const bf::ValueRange two = bf::a_frame_bounds(bf::indicator(half_b, 0, 64), probes2);
  EXPECT_NEAR(two.inf, 2.0, 1e-10);
  EXPECT_NEAR(two.sup, 2.0, 1e-10);

  // A probe living where no translate of χ_[0,1/2) reaches.
  const std::vector<bf::SampledSignal> off{oracle::random_signal(unit, 32, 64, rng)};
  EXPECT_EQ(bf::a_frame_bounds(bf::indicator(unit, 0, 32), off).inf, 0.0);

  EXPECT_THROW(bf::a_frame_bounds(bf::indicator(unit, 0, 64), std::vector<bf::SampledSignal>{}),
               bf::EmptyProbeSet);
}

TEST(Reconstruct, Examples) {
  std::mt19937_64 rng(41);
  const bf::LatticeGrid unit(64, 64, 64);
  const bf::SampledSignal f = oracle::random_signal(unit, -64, 128, rng);
  const bf::WHSystem one = bf::WHSystem::around_window(bf::indicator(unit, 0, 64), 64);
  EXPECT_LE((bf::frame_reconstruct(f, one) - f).norm(), 1e-12 * f.norm());

  const bf::LatticeGrid half_b(64, 64, 128);
  const bf::SampledSignal f2 = oracle::random_signal(half_b, -64, 128, rng);
  const bf::WHSystem two = bf::WHSystem::around_window(bf::indicator(half_b, 0, 64), 64);
  EXPECT_LE((bf::frame_reconstruct(f2, two) - f2).norm(), 1e-8 * f2.norm());

  const bf::SampledSignal gauss = bf::gaussian(half_b, 1.0, 4.0);
  const bf::WHSystem sys = bf::WHSystem::around_window(gauss, gauss.size());
  const bf::SampledSignal f3 = oracle::random_signal(half_b, -128, 128, rng);
  EXPECT_LE((bf::frame_reconstruct(f3, sys) - f3).norm(), 1e-6 * f3.norm());

  const bf::WHSystem singular = bf::WHSystem::around_window(bf::indicator(unit, 0, 32), 64);
  EXPECT_THROW(bf::frame_reconstruct(f, singular), bf::SingularFrameOperator);
}

TEST(WHSystem, RangesAndValidation) {
  const bf::LatticeGrid grid(8, 4, 8);
  const bf::WHSystem sys(bf::indicator(grid, 0, 6), 0, 8);
  const bf::IndexRange r = sys.n_range();
  // T_{na} g = χ_[4n, 4n+6) meets [0, 8) for n = -1, 0, 1.
  EXPECT_EQ(r.first, -1);
  EXPECT_EQ(r.last, 1);
  EXPECT_EQ(sys.m_count(), 8);
  EXPECT_THROW(bf::WHSystem(bf::SampledSignal(grid), 0, 8), bf::ZeroWindow);
  EXPECT_THROW(bf::WHSystem(bf::indicator(grid, 0, 6), 8, 8), bf::InvalidArgument);
}
