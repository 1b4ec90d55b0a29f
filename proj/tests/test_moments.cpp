#include <gtest/gtest.h>

#include <functional>

#include "support.hpp"

using namespace hyperstate;

namespace {

Rational q(long long p, long long r = 1) {
  return Rational(p, r);
}

/// Number of partitions of a k-set into j nonempty blocks, by restricted growth strings.
long long count_partitions(int k, int j) {
  long long count = 0;
  std::vector<int> a(k, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == k) {
      if (used == j) ++count;
      return;
    }
    for (int b = 0; b <= used && b < j; ++b) {
      a[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return count;
}

}  // namespace

TEST(WFactor, Values) {
  EXPECT_EQ(w_factor(3, 3), q(15, 4));
  EXPECT_EQ(w_factor(2, 3), q(3, 4));
  for (int d = 1; d <= 6; ++d) {
    const long long dim = 1LL << d;
    EXPECT_EQ(w_factor(d, dim - 1), q(dim - 1, dim));
    for (long long k = 1; k < dim; ++k) EXPECT_GT(w_factor(d, k), 0);
  }
  EXPECT_THROW(w_factor(2, 0), input_error);
  EXPECT_THROW(w_factor(2, 4), input_error);
}

TEST(FactorialMoments, Values) {
  EXPECT_EQ(m_moment(2, 2), 2);
  EXPECT_EQ(m_moment(3, 4), 168);
  EXPECT_EQ(m_moment(4, 0), 1);
  EXPECT_EQ(m_moment_oracle(3, 2), 14);
  EXPECT_EQ(m_moment_oracle(2, 1), q(3, 2));
  EXPECT_EQ(m_moment_oracle(5, 0), 1);
  EXPECT_THROW(m_moment(2, 4), input_error);
}

TEST(FactorialMoments, ProductEqualsFallingFactorialSum) {
  for (int d = 1; d <= 6; ++d)
    for (long long k = 0; k < (1LL << d); ++k) ASSERT_EQ(m_moment(d, k), m_moment_oracle(d, k)) << d << ' ' << k;
}

TEST(Stirling, KnownEntriesAndRecurrence) {
  const auto s = stirling_coefficients(8);
  EXPECT_EQ(s(4, 2), 7);
  EXPECT_EQ(s(4, 3), 6);
  EXPECT_EQ(s(6, 3), 90);
  EXPECT_EQ(s(6, 4), 65);
  for (int k = 1; k <= 8; ++k) {
    EXPECT_EQ(s(k, 1), 1);
    EXPECT_EQ(s(k, k), 1);
  }
  EXPECT_THROW(s(3, 4), input_error);
  EXPECT_THROW(stirling_coefficients(0), input_error);
}

TEST(Stirling, MatchesSetPartitionCount) {
  const auto s = stirling_coefficients(8);
  for (int k = 1; k <= 8; ++k) {
    Integer bell = 0;
    for (int j = 1; j <= k; ++j) {
      ASSERT_EQ(s(k, j), count_partitions(k, j)) << k << ' ' << j;
      bell += s(k, j);
    }
    static const long long kBell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    EXPECT_EQ(bell, kBell[k]);
  }
}

TEST(NumberMoments, Values) {
  EXPECT_EQ(mu_moment(3, 4), q(1169, 2));
  EXPECT_EQ(mu_moment(3, 5), 3626);
  EXPECT_EQ(mu_moment_oracle(3, 6), q(46205, 2));
  EXPECT_EQ(mu_moment_oracle(2, 2), q(7, 2));
  EXPECT_EQ(mu_moment_oracle(4, 0), 1);
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(mu_moment(d, 1), q((1 << d) - 1, 2));
}

TEST(NumberMoments, StirlingSumEqualsPowerSum) {
  for (int d = 1; d <= 6; ++d)
    for (long long k = 1; k < (1LL << d); ++k) ASSERT_EQ(mu_moment(d, k), mu_moment_oracle(d, k)) << d << ' ' << k;
}

TEST(NumberMoments, MomentSetAgreesWithSingleEvaluations) {
  const auto s = moment_set(4, 10);
  for (int k = 0; k <= 10; ++k) {
    EXPECT_EQ(s.m[k], m_moment(4, k));
    EXPECT_EQ(s.mu[k], mu_moment(4, k));
  }
}

TEST(NumberMoments, DenseExpectationsAgreeForEveryHypergraph) {
  for (int d = 1; d <= 5; ++d) {
    const std::size_t dim = std::size_t{1} << d;
    const auto a = annihilation(dim), ad = creation(dim), n = number_operator(dim);
    for (int t = 0; t < 3; ++t) {
      const auto psi = hypergraph_state(testing_support::random_hypergraph(d, 0.3));
      DenseOperator ak = DenseOperator::Identity(dim, dim), adk = ak, nk = ak;
      const int kmax = std::min<int>(static_cast<int>(dim) - 1, 8);
      for (int k = 1; k <= kmax; ++k) {
        ak = ak * a;
        adk = adk * ad;
        nk = nk * n;
        const double m = to_double(m_moment(d, k));
        const double mu = to_double(mu_moment(d, k));
        EXPECT_NEAR(expectation(adk * ak, psi).real(), m, 1e-9 * std::max(1.0, m)) << d << ' ' << k;
        EXPECT_NEAR(expectation(nk, psi).real(), mu, 1e-9 * std::max(1.0, mu)) << d << ' ' << k;
        EXPECT_NEAR(to_double(m_moment_oracle(d, k)), m, 1e-9 * std::max(1.0, m));
      }
    }
  }
}

TEST(Determinant, BareissMatchesCofactorExpansion) {
  std::uniform_int_distribution<int> entry(-9, 9);
  std::function<Integer(const std::vector<std::vector<Integer>>&)> cofactor =
      [&](const std::vector<std::vector<Integer>>& m) -> Integer {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Integer det = 0;
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::vector<Integer>> minor;
      for (std::size_t r = 1; r < n; ++r) {
        std::vector<Integer> row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != c) row.push_back(m[r][k]);
        minor.push_back(row);
      }
      det += (c % 2 ? -1 : 1) * m[0][c] * cofactor(minor);
    }
    return det;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (auto& row : m)
      for (auto& x : row) x = trial % 7 == 0 ? 0 : entry(testing_support::rng());
    if (trial % 11 == 0) m[0][0] = 0;  // force a pivot swap
    ASSERT_EQ(bareiss_determinant(m), cofactor(m));
    std::vector<std::vector<Rational>> r(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r[i][j] = Rational(m[i][j], 3);
    Rational scale = 1;
    for (std::size_t i = 0; i < n; ++i) scale *= 3;
    ASSERT_EQ(bareiss_determinant(r) * scale, Rational(cofactor(m)));
  }
}

TEST(AgarwalTara, TabulatedValues) {
  EXPECT_EQ(agarwal_tara(2, 2).a_n, q(-1, 6));
  EXPECT_EQ(agarwal_tara(3, 2).a_n, q(1, 2));
  const auto a3 = agarwal_tara(3, 3);
  EXPECT_EQ(a3.det_m, q(-245, 4));
  EXPECT_EQ(a3.det_mu, q(441, 4));
  EXPECT_EQ(a3.a_n, q(-5, 14));
  EXPECT_EQ(agarwal_tara(4, 3).a_n, q(-239, 1106));
  EXPECT_EQ(agarwal_tara(5, 3).a_n, q(19, 102));
}

TEST(AgarwalTara, SecondOrderClosedForm) {
  for (int d = 2; d <= 12; ++d) EXPECT_EQ(agarwal_tara(d, 2).a_n, w_factor(d, 2) - w_factor(d, 1)) << d;
}

TEST(AgarwalTara, FloatRouteAgrees) {
  for (int d = 3; d <= 6; ++d)
    for (int n = 2; n <= 4; ++n) {
      const double exact = to_double(agarwal_tara(d, n).a_n);
      EXPECT_NEAR(agarwal_tara_float(d, n), exact, 1e-9 * std::abs(exact)) << d << ' ' << n;
    }
}

TEST(AgarwalTara, DimensionGuard) {
  EXPECT_THROW(agarwal_tara(2, 3), input_error);  // needs m_4 in a 4-dimensional space
  EXPECT_NO_THROW(agarwal_tara(3, 4));
  EXPECT_THROW(agarwal_tara(3, 0), input_error);
}

TEST(AgarwalTara, JsonCarriesExactAndFloat) {
  const auto j = to_json(agarwal_tara(2, 2));
  EXPECT_EQ(j["a_n"]["exact"], "-1/6");
  EXPECT_NEAR(j["a_n"]["value"].get<double>(), -1.0 / 6.0, 1e-15);
  EXPECT_EQ(to_fraction_string(Rational(4)), "4");
}
