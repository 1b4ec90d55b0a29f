#pragma once

// Factorial moments m_k = <(a+)^k a^k>, number moments mu_k = <N^k> and the
// Agarwal-Tara determinant ratio A_n, all in exact rational arithmetic.
//
// For a hypergraph state every |amplitude|^2 is 2^-d, so all of these depend
// on d only. Two independent evaluations exist for each moment:
//   m_k   product of W_i = i(D - i)/(i + 1)  vs  2^-d sum_n n(n-1)...(n-k+1)
//   mu_k  sum_j S(k, j) m_j                 vs  2^-d sum_n n^k

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "hyperstate/error.hpp"
#include "hyperstate/state.hpp"

namespace hyperstate {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Moments are exact for any d up to this; beyond it 2^d overflows the index type.
inline constexpr int kMaxMomentVertices = 30;

namespace detail {

inline std::int64_t moment_dim(int d) {
  if (d < 1 || d > kMaxMomentVertices)
    fail_input("moment computations need 1 <= d <= " + std::to_string(kMaxMomentVertices));
  return std::int64_t{1} << d;
}

}  // namespace detail

/// W_k = k(2^d - k)/(k + 1), for 1 <= k <= 2^d - 1.
inline Rational w_factor(int d, std::int64_t k) {
  const auto dim = detail::moment_dim(d);
  if (k < 1 || k > dim - 1) detail::fail_input("W_k needs 1 <= k <= 2^d - 1");
  return Rational(Integer(k) * (dim - k), Integer(k + 1));
}

/// m_k = W_1 W_2 ... W_k, m_0 = 1.
inline Rational m_moment(int d, std::int64_t k) {
  const auto dim = detail::moment_dim(d);
  if (k < 0 || k > dim - 1) detail::fail_input("m_k needs 0 <= k <= 2^d - 1");
  Rational m = 1;
  for (std::int64_t i = 1; i <= k; ++i) m *= w_factor(d, i);
  return m;
}

/// 2^-d sum_{n < 2^d} n(n-1)...(n-k+1).
inline Rational m_moment_oracle(int d, std::int64_t k) {
  const auto dim = detail::moment_dim(d);
  if (k < 0 || k > dim - 1) detail::fail_input("m_k needs 0 <= k <= 2^d - 1");
  Integer sum = 0;
  for (std::int64_t n = k; n < dim; ++n) {
    Integer falling = 1;
    for (std::int64_t j = 0; j < k; ++j) falling *= (n - j);
    sum += falling;
  }
  return Rational(sum, Integer(dim));
}

/// Triangle S(k, j), 1 <= j <= k <= max_k, built from
/// S(k+1, j) = S(k, j-1) + j S(k, j) with S(1, 1) = 1.
class StirlingTable {
 public:
  explicit StirlingTable(int max_k) : max_k_(max_k) {
    if (max_k < 1) detail::fail_input("Stirling table needs max_k >= 1");
    rows_.resize(static_cast<std::size_t>(max_k) + 1);
    rows_[1] = {0, 1};
    for (int k = 1; k < max_k; ++k) {
      auto& next = rows_[k + 1];
      next.assign(static_cast<std::size_t>(k) + 2, 0);
      for (int j = 1; j <= k + 1; ++j) {
        Integer v = 0;
        if (j - 1 >= 1) v += rows_[k][j - 1];
        if (j <= k) v += Integer(j) * rows_[k][j];
        next[j] = v;
      }
    }
  }

  int max_k() const noexcept { return max_k_; }

  const Integer& operator()(int k, int j) const {
    if (k < 1 || k > max_k_ || j < 1 || j > k) detail::fail_input("Stirling index out of range");
    return rows_[k][j];
  }

 private:
  int max_k_;
  std::vector<std::vector<Integer>> rows_;  // rows_[k][j], index 0 unused
};

inline StirlingTable stirling_coefficients(int max_k) {
  return StirlingTable(max_k);
}

/// mu_k = sum_{j=1..k} S(k, j) m_j, for 1 <= k <= 2^d - 1 (mu_0 = 1).
inline Rational mu_moment(int d, std::int64_t k) {
  const auto dim = detail::moment_dim(d);
  if (k < 0 || k > dim - 1) detail::fail_input("mu_k needs 0 <= k <= 2^d - 1");
  if (k == 0) return 1;
  const StirlingTable s(static_cast<int>(k));
  Rational mu = 0;
  Rational m = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    m *= w_factor(d, j);
    mu += Rational(s(static_cast<int>(k), static_cast<int>(j))) * m;
  }
  return mu;
}

/// 2^-d sum_{n < 2^d} n^k; defined for every k >= 0.
inline Rational mu_moment_oracle(int d, std::int64_t k) {
  const auto dim = detail::moment_dim(d);
  if (k < 0) detail::fail_input("mu_k needs k >= 0");
  Integer sum = 0;
  for (std::int64_t n = 0; n < dim; ++n) sum += boost::multiprecision::pow(Integer(n), static_cast<unsigned>(k));
  return Rational(sum, Integer(dim));
}

struct MomentSet {
  int d = 0;
  int max_k = 0;
  std::vector<Rational> w;   // w[k-1] = W_k, k = 1..max_k
  std::vector<Rational> m;   // m[k] = m_k, k = 0..max_k
  std::vector<Rational> mu;  // mu[k] = mu_k, k = 0..max_k
};

inline MomentSet moment_set(int d, int max_k) {
  const auto dim = detail::moment_dim(d);
  if (max_k < 0 || max_k > dim - 1) detail::fail_input("moment set needs 0 <= max_k <= 2^d - 1");
  MomentSet s{d, max_k, {}, {1}, {1}};
  for (int k = 1; k <= max_k; ++k) {
    s.w.push_back(w_factor(d, k));
    s.m.push_back(s.m.back() * s.w.back());
  }
  if (max_k >= 1) {
    const StirlingTable st(max_k);
    for (int k = 1; k <= max_k; ++k) {
      Rational mu = 0;
      for (int j = 1; j <= k; ++j) mu += Rational(st(k, j)) * s.m[j];
      s.mu.push_back(mu);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// determinants

/// Bareiss fraction-free elimination. Exact for any exact field or integral domain T.
template <typename T>
T bareiss_determinant(std::vector<std::vector<T>> a) {
  const std::size_t n = a.size();
  if (n == 0) return T(1);
  for (const auto& row : a)
    if (row.size() != n) detail::fail_input("determinant needs a square matrix");
  T sign = 1;
  T prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return T(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// n x n matrix with (i, j) entry seq[i + j].
template <typename T>
std::vector<std::vector<T>> hankel(const std::vector<T>& seq, int n) {
  std::vector<std::vector<T>> h(n, std::vector<T>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h[i][j] = seq.at(static_cast<std::size_t>(i + j));
  return h;
}

struct AgarwalTaraResult {
  int d = 0;
  int n = 0;
  Rational det_m;
  Rational det_mu;
  Rational a_n;
};

/// A_n = det m^(n) / (det mu^(n) - det m^(n)); needs 2n - 2 <= 2^d - 1.
inline AgarwalTaraResult agarwal_tara(int d, int n) {
  const auto dim = detail::moment_dim(d);
  if (n < 1) detail::fail_input("Agarwal-Tara order must be >= 1");
  if (2 * static_cast<std::int64_t>(n) - 2 > dim - 1)
    detail::fail_input("Hilbert space of dimension " + std::to_string(dim) + " does not carry moments up to order " +
                       std::to_string(2 * n - 2));
  const auto s = moment_set(d, 2 * n - 2);
  AgarwalTaraResult r{d, n, bareiss_determinant(hankel(s.m, n)), bareiss_determinant(hankel(s.mu, n)), 0};
  if (r.det_mu == r.det_m) detail::fail_input("A_n undefined: det mu equals det m");
  r.a_n = r.det_m / (r.det_mu - r.det_m);
  return r;
}

/// Double-precision A_n from power sums, falling-factorial sums and LU
/// determinants; shares nothing with agarwal_tara beyond the definition.
inline double agarwal_tara_float(int d, int n) {
  const auto dim = detail::moment_dim(d);
  if (n < 1 || 2 * static_cast<std::int64_t>(n) - 2 > dim - 1) detail::fail_input("Agarwal-Tara order out of range");
  const int kmax = 2 * n - 2;
  std::vector<double> m(kmax + 1, 0.0), mu(kmax + 1, 0.0);
  for (std::int64_t v = 0; v < dim; ++v) {
    double power = 1.0, falling = 1.0;
    for (int k = 0; k <= kmax; ++k) {
      mu[k] += power;
      m[k] += falling;
      power *= static_cast<double>(v);
      falling *= static_cast<double>(v - k);
    }
  }
  Eigen::MatrixXd hm(n, n), hmu(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      hm(i, j) = m[i + j] / static_cast<double>(dim);
      hmu(i, j) = mu[i + j] / static_cast<double>(dim);
    }
  const double dm = hm.partialPivLu().determinant();
  const double dmu = hmu.partialPivLu().determinant();
  return dm / (dmu - dm);
}

inline double to_double(const Rational& q) {
  return q.convert_to<double>();
}

/// "p/q", or "p" for integers.
inline std::string to_fraction_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline Json to_json(const AgarwalTaraResult& r) {
  return Json{{"d", r.d},
              {"n", r.n},
              {"det_m", {{"exact", to_fraction_string(r.det_m)}, {"value", to_double(r.det_m)}}},
              {"det_mu", {{"exact", to_fraction_string(r.det_mu)}, {"value", to_double(r.det_mu)}}},
              {"a_n", {{"exact", to_fraction_string(r.a_n)}, {"value", to_double(r.a_n)}}}};
}

}  // namespace hyperstate
