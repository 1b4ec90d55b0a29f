#pragma once

// Truncated oscillator algebra on C^dim, the phase basis |theta_m> and the
// phase operator P = sum_m theta_m |theta_m><theta_m|.
//
// Two evaluation routes exist for anything involving P:
//   dense      explicit dim x dim matrices, dim <= kMaxDenseDim
//   transform  P|psi> = F^-1 diag(theta) F |psi>, any power-of-two dim
// The dense route is the reference; the transform route is what scales.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "hyperstate/error.hpp"
#include "hyperstate/fft.hpp"
#include "hyperstate/state.hpp"

namespace hyperstate {

using DenseOperator = Eigen::MatrixXcd;

inline constexpr std::size_t kMaxDenseDim = 4096;
inline constexpr std::size_t kMaxSpectralDim = 256;

namespace detail {

inline void require_dense(std::size_t dim, std::size_t limit, const char* what) {
  if (dim > limit)
    fail_guard(std::string(what) + ": dimension " + std::to_string(dim) + " exceeds " + std::to_string(limit));
}

inline void require_power_of_two(std::size_t dim) {
  if (!is_power_of_two(dim)) fail_input("dimension " + std::to_string(dim) + " is not a power of two");
}

inline Eigen::Map<const Eigen::VectorXcd> as_eigen(const StateVector& psi) {
  return {psi.amplitudes().data(), static_cast<Eigen::Index>(psi.dim())};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// ladder algebra

/// a|n> = sqrt(n)|n-1>, a|0> = 0.
inline DenseOperator annihilation(std::size_t dim) {
  if (dim < 2) detail::fail_input("annihilation operator needs dim >= 2");
  detail::require_dense(dim, kMaxDenseDim, "annihilation");
  const auto n = static_cast<Eigen::Index>(dim);
  DenseOperator a = DenseOperator::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) a(i, i + 1) = std::sqrt(static_cast<double>(i + 1));
  return a;
}

/// a+|n> = sqrt(n+1)|n+1>, a+|dim-1> = 0.
inline DenseOperator creation(std::size_t dim) {
  return annihilation(dim).adjoint();
}

inline DenseOperator number_operator(std::size_t dim) {
  if (dim < 1) detail::fail_input("number operator needs dim >= 1");
  detail::require_dense(dim, kMaxDenseDim, "number operator");
  const auto n = static_cast<Eigen::Index>(dim);
  DenseOperator m = DenseOperator::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = static_cast<double>(i);
  return m;
}

/// X = (a + a+)/sqrt(2).
inline DenseOperator position(std::size_t dim) {
  return (annihilation(dim) + creation(dim)) / std::numbers::sqrt2;
}

/// Momentum quadrature (a - a+)/(i sqrt(2)); not the phase operator.
inline DenseOperator momentum(std::size_t dim) {
  using namespace std::complex_literals;
  return (annihilation(dim) - creation(dim)) / (1i * std::numbers::sqrt2);
}

inline DenseOperator commutator(const DenseOperator& a, const DenseOperator& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    detail::fail_input("commutator needs square operators of equal dimension");
  return a * b - b * a;
}

inline std::complex<double> expectation(const DenseOperator& a, const StateVector& psi) {
  if (a.rows() != static_cast<Eigen::Index>(psi.dim()) || a.cols() != a.rows())
    detail::fail_input("operator/state dimension mismatch");
  const auto v = detail::as_eigen(psi);
  return v.dot(a * v);  // conjugates the left factor
}

/// <A^2> - <A>^2, real part (exact for Hermitian A).
inline double variance(const DenseOperator& a, const StateVector& psi) {
  const auto mean = expectation(a, psi);
  const auto v = detail::as_eigen(psi);
  const Eigen::VectorXcd av = a * v;
  const std::complex<double> second = av.dot(av);  // <psi|A+ A|psi> = <A^2> for Hermitian A
  return (second - mean * mean).real();
}

// ---------------------------------------------------------------------------
// phase basis

/// theta_m = 2 pi m / D with theta_0 = 0.
inline double phase_angle(std::size_t dim, std::size_t m) {
  return 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(dim);
}

/// |theta_m> = D^(-1/2) sum_n e^{i theta_m n} |n>.
inline StateVector phase_state(std::size_t dim, std::size_t m) {
  if (dim < 1) detail::fail_input("phase state needs dim >= 1");
  if (m >= dim) detail::fail_input("phase index out of range");
  std::vector<Amplitude> v(dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t n = 0; n < dim; ++n) v[n] = std::polar(scale, phase_angle(dim, (m * n) % dim));
  return StateVector(std::move(v));
}

/// <theta_m|psi> for every m: a unitary forward DFT of the amplitudes.
inline std::vector<Amplitude> phase_overlaps(const StateVector& psi) {
  detail::require_power_of_two(psi.dim());
  std::vector<Amplitude> c(psi.amplitudes().begin(), psi.amplitudes().end());
  fft::transform(c, fft::Direction::Forward);
  const double scale = 1.0 / std::sqrt(static_cast<double>(c.size()));
  for (auto& x : c) x *= scale;
  return c;
}

/// Inverse of phase_overlaps: sum_m c_m |theta_m>.
inline StateVector from_phase_basis(std::vector<Amplitude> coeffs) {
  detail::require_power_of_two(coeffs.size());
  fft::transform(coeffs, fft::Direction::Inverse);
  const double scale = 1.0 / std::sqrt(static_cast<double>(coeffs.size()));
  for (auto& x : coeffs) x *= scale;
  return StateVector(std::move(coeffs));
}

/// P|psi> through the phase basis.
inline StateVector apply_phase_operator(const StateVector& psi) {
  auto c = phase_overlaps(psi);
  for (std::size_t m = 0; m < c.size(); ++m) c[m] *= phase_angle(c.size(), m);
  return from_phase_basis(std::move(c));
}

inline StateVector apply_number_operator(const StateVector& psi) {
  StateVector out = psi;
  for (std::size_t n = 0; n < out.dim(); ++n) out[n] *= static_cast<double>(n);
  return out;
}

namespace detail {

inline std::complex<double> inner(const StateVector& a, const StateVector& b) {
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// c_s = (2 pi / D^2) sum_r r e^{2 pi i r s / D}; P(k, l) = c_{(k - l) mod D}.
inline std::vector<std::complex<double>> phase_circulant_column(std::size_t dim) {
  std::vector<std::complex<double>> roots(dim);
  for (std::size_t j = 0; j < dim; ++j) roots[j] = std::polar(1.0, phase_angle(dim, j));
  const double scale = 2.0 * std::numbers::pi / (static_cast<double>(dim) * static_cast<double>(dim));
  std::vector<std::complex<double>> c(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    std::complex<double> acc = 0.0;
    for (std::size_t r = 1; r < dim; ++r) acc += static_cast<double>(r) * roots[(r * s) % dim];
    c[s] = scale * acc;
  }
  return c;
}

}  // namespace detail

/// Dense P with entries (2 pi / D^2) sum_r r exp(i theta_r (k - l)).
inline DenseOperator phase_operator_dense(std::size_t dim) {
  if (dim < 1) detail::fail_input("phase operator needs dim >= 1");
  detail::require_dense(dim, kMaxDenseDim, "dense phase operator");
  const auto c = detail::phase_circulant_column(dim);
  const auto n = static_cast<Eigen::Index>(dim);
  DenseOperator p(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index l = 0; l < n; ++l) p(k, l) = c[static_cast<std::size_t>((k - l + n) % n)];
  return p;
}

/// [N, P] with entries (k - l) P(k, l).
inline DenseOperator np_commutator_dense(std::size_t dim) {
  DenseOperator p = phase_operator_dense(dim);
  for (Eigen::Index k = 0; k < p.rows(); ++k)
    for (Eigen::Index l = 0; l < p.cols(); ++l) p(k, l) *= static_cast<double>(k - l);
  return p;
}

/// <psi|N P|psi> - <psi|P N|psi> via two transform-based applications of P.
inline std::complex<double> np_commutator_expectation(const StateVector& psi) {
  const auto n_psi = apply_number_operator(psi);
  const auto p_psi = apply_phase_operator(psi);
  const auto p_n_psi = apply_phase_operator(n_psi);
  // <psi|N (P psi)> = <N psi|P psi> since N is real diagonal.
  return detail::inner(n_psi, p_psi) - detail::inner(psi, p_n_psi);
}

inline std::complex<double> np_commutator_expectation_dense(const StateVector& psi) {
  return expectation(np_commutator_dense(psi.dim()), psi);
}

/// Closed-form eigenvalue bound 2 pi (D-1)^2 / (4 D^2) as derived for [N, P].
/// Not a valid bound on the actual spectrum; see spectral_bound_check.
inline double gershgorin_bound(std::size_t dim) {
  const double d = static_cast<double>(dim);
  return 2.0 * std::numbers::pi * (d - 1.0) * (d - 1.0) / (4.0 * d * d);
}

/// Largest Gershgorin disc reach max_i (|a_ii| + sum_{j != i} |a_ij|).
inline double gershgorin_disc_reach(const DenseOperator& a) {
  double reach = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) reach = std::max(reach, a.row(i).cwiseAbs().sum());
  return reach;
}

// ---------------------------------------------------------------------------
// structure checks

struct PropertyCheck {
  bool holds = false;
  double max_deviation = 0.0;
};

struct StructureReport {
  std::size_t dim = 0;
  double tolerance = 0.0;
  PropertyCheck hermitian;
  PropertyCheck skew_hermitian;
  PropertyCheck toeplitz;
  PropertyCheck circulant;
  PropertyCheck zero_diagonal;
};

/// Tolerance is 1e-10 * dim, absolute.
inline StructureReport verify_structure(const DenseOperator& a) {
  if (a.rows() != a.cols()) detail::fail_input("structure check needs a square matrix");
  const Eigen::Index n = a.rows();
  StructureReport r;
  r.dim = static_cast<std::size_t>(n);
  r.tolerance = 1e-10 * static_cast<double>(n);

  double herm = 0, skew = 0, toep = 0, circ = 0, diag = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    diag = std::max(diag, std::abs(a(i, i)));
    for (Eigen::Index j = 0; j < n; ++j) {
      herm = std::max(herm, std::abs(a(i, j) - std::conj(a(j, i))));
      skew = std::max(skew, std::abs(a(i, j) + std::conj(a(j, i))));
      if (i > 0 && j > 0) toep = std::max(toep, std::abs(a(i, j) - a(i - 1, j - 1)));
      circ = std::max(circ, std::abs(a(i, j) - a((i + n - 1) % n, (j + n - 1) % n)));
    }
  }
  auto check = [&](double dev) { return PropertyCheck{dev <= r.tolerance, dev}; };
  r.hermitian = check(herm);
  r.skew_hermitian = check(skew);
  r.toeplitz = check(toep);
  r.circulant = check(circ);
  r.zero_diagonal = check(diag);
  return r;
}

inline Json to_json(const PropertyCheck& p) {
  return {{"property", p.holds}, {"max_deviation", p.max_deviation}};
}

inline Json to_json(const StructureReport& r) {
  return {{"dim", r.dim},
          {"tolerance", r.tolerance},
          {"hermitian", to_json(r.hermitian)},
          {"skew_hermitian", to_json(r.skew_hermitian)},
          {"toeplitz", to_json(r.toeplitz)},
          {"circulant", to_json(r.circulant)},
          {"zero_diagonal", to_json(r.zero_diagonal)}};
}

// ---------------------------------------------------------------------------
// spectral bounds

struct SpectralBoundReport {
  std::size_t dim = 0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double spectral_radius = 0.0;
  double abs_expectation = 0.0;         // |<[N, P]>|
  bool within_spectral_radius = false;  // |<[N, P]>| <= max |lambda|
  double disc_reach = 0.0;              // Gershgorin reach of i[N, P] computed from its rows
  bool spectrum_within_disc_reach = false;
  double closed_form_bound = 0.0;  // gershgorin_bound(dim)
  bool spectrum_within_closed_form = false;
};

/// Spectrum of the Hermitian matrix i[N, P] for dim <= 256, checked against
/// |<[N, P]>_psi| and against both Gershgorin figures.
inline SpectralBoundReport spectral_bound_check(const StateVector& psi) {
  using namespace std::complex_literals;
  detail::require_dense(psi.dim(), kMaxSpectralDim, "spectral bound check");
  const DenseOperator c = np_commutator_dense(psi.dim());
  const DenseOperator h = 1i * c;
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(h, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();

  SpectralBoundReport r;
  r.dim = psi.dim();
  r.lambda_min = ev.minCoeff();
  r.lambda_max = ev.maxCoeff();
  r.spectral_radius = ev.cwiseAbs().maxCoeff();
  r.abs_expectation = std::abs(expectation(c, psi));
  const double slack = 1e-10 * static_cast<double>(psi.dim());
  r.within_spectral_radius = r.abs_expectation <= r.spectral_radius + slack;
  r.disc_reach = gershgorin_disc_reach(h);
  r.spectrum_within_disc_reach = r.spectral_radius <= r.disc_reach + slack;
  r.closed_form_bound = gershgorin_bound(psi.dim());
  r.spectrum_within_closed_form = r.spectral_radius <= r.closed_form_bound + slack;
  return r;
}

inline Json to_json(const SpectralBoundReport& r) {
  return {{"dim", r.dim},
          {"lambda_min", r.lambda_min},
          {"lambda_max", r.lambda_max},
          {"spectral_radius", r.spectral_radius},
          {"abs_expectation", r.abs_expectation},
          {"within_spectral_radius", r.within_spectral_radius},
          {"disc_reach", r.disc_reach},
          {"spectrum_within_disc_reach", r.spectrum_within_disc_reach},
          {"closed_form_bound", r.closed_form_bound},
          {"spectrum_within_closed_form", r.spectrum_within_closed_form}};
}

/// <psi|[X^k, M^k]|psi> with X the position and M the momentum quadrature.
inline std::complex<double> quadrature_commutator_expectation(const StateVector& psi, int k) {
  if (k < 1) detail::fail_input("quadrature power must be >= 1");
  if (psi.dim() < 2) detail::fail_input("quadrature commutator needs dim >= 2");
  detail::require_dense(psi.dim(), kMaxSpectralDim, "quadrature commutator");
  const DenseOperator x = position(psi.dim());
  const DenseOperator m = momentum(psi.dim());
  DenseOperator xk = x, mk = m;
  for (int i = 1; i < k; ++i) {
    xk = xk * x;
    mk = mk * m;
  }
  return expectation(commutator(xk, mk), psi);
}

}  // namespace hyperstate

namespace hyperstate {

/// sum_m theta_m |theta_m><theta_m| assembled from the phase states themselves.
inline DenseOperator phase_operator_spectral(std::size_t dim) {
  detail::require_dense(dim, kMaxDenseDim, "spectral phase operator");
  const auto n = static_cast<Eigen::Index>(dim);
  DenseOperator p = DenseOperator::Zero(n, n);
  for (std::size_t m = 1; m < dim; ++m) {
    const auto theta = phase_state(dim, m);
    const auto v = detail::as_eigen(theta);
    p.noalias() += phase_angle(dim, m) * (v * v.adjoint());
  }
  return p;
}

struct OperatorSuiteReport {
  std::size_t dim = 0;
  StructureReport phase;                      // P
  StructureReport commutator;                 // [N, P]
  PropertyCheck spectral_form;                // dense P against sum_m theta_m |theta_m><theta_m|
  PropertyCheck transform;                    // dense P psi against the transform route, over probe states
  std::optional<SpectralBoundReport> bounds;  // dim <= kMaxSpectralDim
};

/// Every structural check on the operators of dimension psi.dim(), with psi
/// among the probe states.
inline OperatorSuiteReport operator_suite(const StateVector& psi) {
  const std::size_t dim = psi.dim();
  detail::require_power_of_two(dim);
  OperatorSuiteReport r;
  r.dim = dim;
  const DenseOperator p = phase_operator_dense(dim);
  r.phase = verify_structure(p);
  r.commutator = verify_structure(np_commutator_dense(dim));
  const double tol = 1e-10 * static_cast<double>(dim);
  const double spec = (p - phase_operator_spectral(dim)).cwiseAbs().maxCoeff();
  r.spectral_form = {spec <= tol, spec};

  std::vector<StateVector> probes{psi, StateVector::basis(dim, 0), StateVector::basis(dim, dim - 1),
                                  phase_state(dim, dim / 2)};
  double worst = 0.0;
  for (const auto& v : probes) {
    const Eigen::VectorXcd dense = p * detail::as_eigen(v);
    const auto fast = apply_phase_operator(v);
    worst = std::max(worst, (dense - detail::as_eigen(fast)).cwiseAbs().maxCoeff());
  }
  r.transform = {worst <= 1e-10, worst};
  if (dim <= kMaxSpectralDim) r.bounds = spectral_bound_check(psi);
  return r;
}

inline Json to_json(const OperatorSuiteReport& r) {
  Json j{{"dim", r.dim},
         {"phase_operator", to_json(r.phase)},
         {"np_commutator", to_json(r.commutator)},
         {"spectral_form", to_json(r.spectral_form)},
         {"transform_agreement", to_json(r.transform)}};
  j["spectral_bounds"] = r.bounds ? to_json(*r.bounds) : Json(nullptr);
  return j;
}

}  // namespace hyperstate
