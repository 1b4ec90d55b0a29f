#pragma once

// Coherence of the pure state |psi><psi| with respect to a basis. Both
// measures depend only on the coefficient vector c in that basis:
//   l1:               sum_{i != j} |c_i||c_j| = (sum_i |c_i|)^2 - 1
//   relative entropy: S(rho_diag) - S(rho) = -sum_i |c_i|^2 ln |c_i|^2

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "hyperstate/hypergraph.hpp"
#include "hyperstate/operators.hpp"
#include "hyperstate/state.hpp"

namespace hyperstate {

enum class Basis { Number, Phase };

inline std::string_view to_string(Basis b) {
  return b == Basis::Number ? "number" : "phase";
}

inline Basis parse_basis(std::string_view s) {
  if (s == "number") return Basis::Number;
  if (s == "phase") return Basis::Phase;
  detail::fail_input("unknown basis '" + std::string(s) + "' (expected number|phase)");
}

inline constexpr int kMaxPhaseCoherenceVertices = 20;

namespace detail {

/// Pairwise (tree) summation; exact when all terms are equal and the count is a power of two.
inline double pairwise_sum(std::vector<double> v) {
  if (v.empty()) return 0.0;
  for (std::size_t n = v.size(); n > 1; n = (n + 1) / 2) {
    for (std::size_t i = 0; i < n / 2; ++i) v[i] = v[2 * i] + v[2 * i + 1];
    if (n % 2) v[n / 2] = v[n - 1];
  }
  return v[0];
}

}  // namespace detail

/// (sum_i |c_i|)^2 / sum_i |c_i|^2 - 1, i.e. the l1 measure of |psi><psi| / <psi|psi>.
inline double l1_coherence(const StateVector& psi) {
  std::vector<double> mag(psi.dim()), prob(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    mag[i] = std::abs(psi[i]);
    prob[i] = std::norm(psi[i]);
  }
  const double s = detail::pairwise_sum(std::move(mag));
  const double norm2 = detail::pairwise_sum(std::move(prob));
  if (norm2 <= 0.0) detail::fail_input("coherence of the zero vector");
  return s * s / norm2 - 1.0;
}

/// Shannon entropy (natural log) of p_i = |c_i|^2 / <psi|psi>; zero terms contribute nothing.
inline double rel_entropy_coherence(const StateVector& psi) {
  std::vector<double> prob(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) prob[i] = std::norm(psi[i]);
  const double norm2 = detail::pairwise_sum(prob);
  if (norm2 <= 0.0) detail::fail_input("coherence of the zero vector");
  for (auto& p : prob) {
    p /= norm2;
    p = p > 0.0 ? -p * std::log(p) : 0.0;
  }
  return detail::pairwise_sum(std::move(prob));
}

/// Coefficients <theta_m|psi> as a vector in the phase basis.
inline StateVector to_phase_basis(const StateVector& psi) {
  return StateVector(phase_overlaps(psi));
}

struct CoherenceReport {
  int d = 0;
  std::string edges;
  Basis basis = Basis::Number;
  double c_l1 = 0.0;
  double c_rel_ent = 0.0;
};

inline CoherenceReport coherence_report(const Hypergraph& g, Basis basis) {
  if (basis == Basis::Phase && g.vertex_count() > kMaxPhaseCoherenceVertices)
    detail::fail_guard("phase-basis coherence limited to d <= " + std::to_string(kMaxPhaseCoherenceVertices));
  auto psi = hypergraph_state(g);
  if (basis == Basis::Phase) psi = to_phase_basis(psi);
  return {g.vertex_count(), format_edges(g), basis, l1_coherence(psi), rel_entropy_coherence(psi)};
}

inline Json to_json(const CoherenceReport& r) {
  return Json{
      {"d", r.d}, {"edges", r.edges}, {"basis", to_string(r.basis)}, {"c_l1", r.c_l1}, {"c_rel_ent", r.c_rel_ent}};
}

}  // namespace hyperstate
