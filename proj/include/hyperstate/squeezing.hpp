#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "hyperstate/hypergraph.hpp"
#include "hyperstate/operators.hpp"
#include "hyperstate/state.hpp"

namespace hyperstate {

struct Moments2 {
  double mean = 0.0;
  double variance = 0.0;
};

/// Number statistics of any hypergraph state: ((D-1)/2, (D-1)(D+1)/12), D = 2^d.
inline Moments2 number_stats(int d) {
  if (d < 1) detail::fail_input("number_stats needs d >= 1");
  const double dim = std::ldexp(1.0, d);
  return {(dim - 1.0) / 2.0, (dim - 1.0) * (dim + 1.0) / 12.0};
}

/// Number statistics evaluated on the state itself (N is diagonal).
inline Moments2 number_stats(const StateVector& psi) {
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t n = 0; n < psi.dim(); ++n) {
    const double p = std::norm(psi[n]);
    m1 += static_cast<double>(n) * p;
    m2 += static_cast<double>(n) * static_cast<double>(n) * p;
  }
  return {m1, m2 - m1 * m1};
}

/// Mean and variance of P from the phase distribution p_m = |<theta_m|psi>|^2.
inline Moments2 phase_stats(const StateVector& psi) {
  const auto c = phase_overlaps(psi);
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t m = 0; m < c.size(); ++m) {
    const double theta = phase_angle(c.size(), m);
    const double p = std::norm(c[m]);
    m1 += theta * p;
    m2 += theta * theta * p;
  }
  return {m1, std::max(0.0, m2 - m1 * m1)};
}

enum class EvalPath { Auto, Dense, Transform };

/// Dimension at or below which EvalPath::Auto uses the dense route.
inline constexpr std::size_t kDenseCommutatorDim = 256;

/// (1/2)|<[N, P]>|.
inline double half_commutator(const StateVector& psi, EvalPath path = EvalPath::Auto) {
  if (path == EvalPath::Auto) path = psi.dim() <= kDenseCommutatorDim ? EvalPath::Dense : EvalPath::Transform;
  const auto value = path == EvalPath::Dense ? np_commutator_expectation_dense(psi) : np_commutator_expectation(psi);
  return 0.5 * std::abs(value);
}

/// Below this, (1/2)|<[N, P]>| is treated as vanishing.
inline constexpr double kVanishingCommutator = 1e-14;

/// (var - half_comm) / half_comm, or nullopt when the commutator vanishes.
/// The single exception: a vanishing variance with a vanishing commutator is -1.
inline std::optional<double> squeezing_degree(double var, double half_comm) {
  if (half_comm < kVanishingCommutator) {
    if (var < kVanishingCommutator) return -1.0;
    return std::nullopt;
  }
  return (var - half_comm) / half_comm;
}

struct SqueezeReport {
  int d = 0;
  std::string edges;  // canonical edge list
  double mean_n = 0.0;
  double var_n = 0.0;
  double mean_p = 0.0;
  double var_p = 0.0;
  double half_comm = 0.0;
  std::optional<double> s_n;
  std::optional<double> s_p;
};

inline SqueezeReport squeeze_report(const StateVector& psi, int d, std::string edges, EvalPath path = EvalPath::Auto) {
  SqueezeReport r;
  r.d = d;
  r.edges = std::move(edges);
  const auto ns = number_stats(psi);
  const auto ps = phase_stats(psi);
  r.mean_n = ns.mean;
  r.var_n = ns.variance;
  r.mean_p = ps.mean;
  r.var_p = ps.variance;
  r.half_comm = half_commutator(psi, path);
  r.s_n = squeezing_degree(r.var_n, r.half_comm);
  r.s_p = squeezing_degree(r.var_p, r.half_comm);
  return r;
}

inline SqueezeReport squeeze_report(const Hypergraph& g, EvalPath path = EvalPath::Auto) {
  return squeeze_report(hypergraph_state(g), g.vertex_count(), format_edges(g), path);
}

inline Json optional_to_json(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json to_json(const SqueezeReport& r) {
  return Json{{"d", r.d},
              {"edges", r.edges},
              {"mean_n", r.mean_n},
              {"var_n", r.var_n},
              {"mean_p", r.mean_p},
              {"var_p", r.var_p},
              {"half_comm", r.half_comm},
              {"s_n", optional_to_json(r.s_n)},
              {"s_p", optional_to_json(r.s_p)}};
}

}  // namespace hyperstate
