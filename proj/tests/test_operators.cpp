#include <gtest/gtest.h>

#include "support.hpp"

using namespace hyperstate;
using namespace std::complex_literals;
using testing_support::random_hypergraph;
using testing_support::random_state;

TEST(Fft, MatchesNaiveDft) {
  for (std::size_t n : {1u, 2u, 4u, 8u, 64u, 256u}) {
    const auto xs = random_state(n);
    const std::vector<Amplitude> x(xs.amplitudes().begin(), xs.amplitudes().end());
    for (bool inverse : {false, true}) {
      auto y = x;
      fft::transform(y, inverse ? fft::Direction::Inverse : fft::Direction::Forward);
      const auto ref = testing_support::naive_dft(x, inverse);
      for (std::size_t k = 0; k < n; ++k) ASSERT_LT(std::abs(y[k] - ref[k]), 1e-12) << n << ' ' << k;
    }
  }
  std::vector<Amplitude> bad(6);
  EXPECT_THROW(fft::transform(bad, fft::Direction::Forward), input_error);
}

TEST(Ladder, CommutatorHasTruncationDefect) {
  for (std::size_t dim : {2u, 4u, 16u}) {
    const auto c = commutator(annihilation(dim), creation(dim));
    DenseOperator expected = DenseOperator::Identity(dim, dim);
    expected(dim - 1, dim - 1) = 1.0 - static_cast<double>(dim);
    EXPECT_LT((c - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((creation(dim) * annihilation(dim) - number_operator(dim)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Quadratures, CommutatorExpectationVanishesOnHypergraphStates) {
  for (int d = 1; d <= 6; ++d) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto psi = hypergraph_state(random_hypergraph(d, 0.3));
      EXPECT_LT(std::abs(quadrature_commutator_expectation(psi, 1)), 1e-10);
      EXPECT_LT(std::abs(quadrature_commutator_expectation(psi, 2)), 1e-10);
    }
  }
}

TEST(PhaseBasis, Orthonormal) {
  const std::size_t dim = 16;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      const auto ip = detail::inner(phase_state(dim, a), phase_state(dim, b));
      EXPECT_LT(std::abs(ip - (a == b ? 1.0 : 0.0)), 1e-12);
    }
}

TEST(PhaseBasis, OverlapsMatchDirectInnerProducts) {
  const auto psi = random_state(32);
  const auto c = phase_overlaps(psi);
  for (std::size_t m = 0; m < 32; ++m) EXPECT_LT(std::abs(c[m] - detail::inner(phase_state(32, m), psi)), 1e-12);
  const auto back = from_phase_basis(c);
  EXPECT_LT(testing_support::max_diff(back, psi), 1e-12);
}

TEST(PhaseBasis, PhaseStateMapsToBasisVector) {
  const auto c = phase_overlaps(phase_state(16, 3));
  for (std::size_t m = 0; m < 16; ++m) EXPECT_LT(std::abs(c[m] - (m == 3 ? 1.0 : 0.0)), 1e-12);
}

TEST(PhaseOperator, DenseEqualsSpectralSum) {
  for (std::size_t dim : {4u, 8u, 16u, 64u}) {
    const auto p = phase_operator_dense(dim);
    EXPECT_LT((p - phase_operator_spectral(dim)).cwiseAbs().maxCoeff(), 1e-10);
    const auto s = verify_structure(p);
    EXPECT_TRUE(s.hermitian.holds);
    EXPECT_TRUE(s.circulant.holds);
  }
}

TEST(PhaseOperator, TransformRouteMatchesDense) {
  for (std::size_t dim : {4u, 8u, 16u, 64u, 256u}) {
    const auto p = phase_operator_dense(dim);
    for (int t = 0; t < 3; ++t) {
      const auto psi = random_state(dim);
      const Eigen::VectorXcd dense = p * detail::as_eigen(psi);
      const auto fast = apply_phase_operator(psi);
      EXPECT_LT((dense - detail::as_eigen(fast)).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(PhaseOperator, EigenvaluesAreThePhaseAngles) {
  const std::size_t dim = 8;
  for (std::size_t m = 0; m < dim; ++m) {
    const auto theta = phase_state(dim, m);
    const auto image = apply_phase_operator(theta);
    for (std::size_t n = 0; n < dim; ++n) EXPECT_LT(std::abs(image[n] - phase_angle(dim, m) * theta[n]), 1e-12);
  }
}

TEST(NpCommutator, SkewHermitianToeplitzZeroDiagonal) {
  for (std::size_t dim : {4u, 8u, 16u, 64u, 256u}) {
    const auto s = verify_structure(np_commutator_dense(dim));
    EXPECT_TRUE(s.skew_hermitian.holds) << dim;
    EXPECT_TRUE(s.toeplitz.holds) << dim;
    EXPECT_TRUE(s.zero_diagonal.holds) << dim;
    EXPECT_FALSE(s.hermitian.holds) << dim;
  }
}

TEST(NpCommutator, EqualsDenseProductDifference) {
  const std::size_t dim = 16;
  const auto direct = commutator(number_operator(dim), phase_operator_dense(dim));
  EXPECT_LT((direct - np_commutator_dense(dim)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(NpCommutator, RoutesAgree) {
  for (int d = 1; d <= 8; ++d) {
    for (int t = 0; t < 4; ++t) {
      const auto psi = hypergraph_state(random_hypergraph(d, 0.3));
      EXPECT_LT(std::abs(np_commutator_expectation(psi) - np_commutator_expectation_dense(psi)), 1e-10);
    }
  }
}

TEST(NpCommutator, ExpectationWithinSpectrum) {
  for (int d = 2; d <= 6; ++d) {
    const auto psi = hypergraph_state(random_hypergraph(d, 0.3));
    const auto r = spectral_bound_check(psi);
    EXPECT_TRUE(r.within_spectral_radius);
    EXPECT_TRUE(r.spectrum_within_disc_reach);
    EXPECT_LE(r.lambda_min, r.lambda_max);
  }
}

TEST(NpCommutator, ClosedFormBoundIsBelowTheSpectralRadius) {
  // The row-sum reach is a true bound; the closed form 2pi(D-1)^2/(4D^2) is not.
  for (std::size_t dim : {4u, 16u, 64u}) {
    const auto r = spectral_bound_check(StateVector::basis(dim, 0));
    EXPECT_DOUBLE_EQ(r.closed_form_bound, gershgorin_bound(dim));
    EXPECT_FALSE(r.spectrum_within_closed_form) << dim;
    EXPECT_GT(r.spectral_radius, gershgorin_bound(dim));
  }
}

TEST(OperatorSuite, AllStructuralChecksHold) {
  const auto r = operator_suite(hypergraph_state(parse_edges(4, "0,3;0,2,3;1,2,3")));
  EXPECT_TRUE(r.phase.hermitian.holds);
  EXPECT_TRUE(r.phase.circulant.holds);
  EXPECT_TRUE(r.commutator.skew_hermitian.holds);
  EXPECT_TRUE(r.commutator.toeplitz.holds);
  EXPECT_TRUE(r.commutator.zero_diagonal.holds);
  EXPECT_TRUE(r.spectral_form.holds);
  EXPECT_TRUE(r.transform.holds);
  ASSERT_TRUE(r.bounds.has_value());
  const auto j = to_json(r);
  EXPECT_TRUE(j["phase_operator"]["hermitian"]["property"].get<bool>());
  EXPECT_TRUE(j["phase_operator"]["hermitian"].contains("max_deviation"));
}

TEST(Operators, Guards) {
  EXPECT_THROW(phase_operator_dense(8192), guard_error);
  EXPECT_THROW(spectral_bound_check(StateVector::basis(512, 0)), guard_error);
  EXPECT_THROW(phase_overlaps(StateVector::basis(12, 0)), input_error);
}
