#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperstate/error.hpp"
#include "hyperstate/hypergraph.hpp"

namespace hyperstate {

using Amplitude = std::complex<double>;

/// JSON with insertion-ordered keys, so emitted field order is fixed.
using Json = nlohmann::ordered_json;

/// Amplitudes of a vector in the number basis |0>, ..., |dim-1>.
/// Hypergraph states are unit-norm with entries +-2^(-d/2); operator
/// images (e.g. P|psi>) reuse the type without the norm invariant.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<Amplitude> amplitudes) : amps_(std::move(amplitudes)) {}

  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  std::span<Amplitude> amplitudes() noexcept { return amps_; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
  Amplitude& operator[](std::size_t i) { return amps_[i]; }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

  bool is_normalized(double tol = 1e-12) const { return std::abs(norm() - 1.0) <= tol; }

  /// Basis vector |n>.
  static StateVector basis(std::size_t dim, std::size_t n) {
    if (n >= dim) detail::fail_input("basis index out of range");
    std::vector<Amplitude> v(dim);
    v[n] = 1.0;
    return StateVector(std::move(v));
  }

 private:
  std::vector<Amplitude> amps_;
};

/// |G> = 2^(-d/2) sum_n (-1)^f(n) |n>.
inline StateVector hypergraph_state(const Hypergraph& g) {
  const auto f = boolean_function(g);  // enforces the d <= 24 guard
  const double amp = 1.0 / std::sqrt(static_cast<double>(f.truth_table.size()));
  std::vector<Amplitude> v(f.truth_table.size());
  for (std::size_t n = 0; n < v.size(); ++n) v[n] = f.truth_table[n] ? -amp : amp;
  return StateVector(std::move(v));
}

// ---------------------------------------------------------------------------
// generating circuit

enum class GateKind { H, CZ };

/// H acts on one qubit; CZ flips the sign of the all-ones subspace of its targets.
struct Gate {
  GateKind kind;
  std::vector<int> targets;
  friend bool operator==(const Gate&, const Gate&) = default;
};

struct CircuitDescription {
  int qubits = 0;
  std::vector<Gate> gates;
};

/// One H per vertex, then one multi-controlled Z per edge in canonical order.
inline CircuitDescription emit_circuit(const Hypergraph& g) {
  CircuitDescription c{g.vertex_count(), {}};
  for (int v = 0; v < g.vertex_count(); ++v) c.gates.push_back({GateKind::H, {v}});
  for (const auto& e : g.edges()) c.gates.push_back({GateKind::CZ, e});
  return c;
}

/// Lines `H <v>` and `CZ <v1> ... <vk>`, newline-terminated.
inline std::string format_circuit(const CircuitDescription& c) {
  std::string out;
  for (const auto& gate : c.gates) {
    out += gate.kind == GateKind::H ? "H" : "CZ";
    for (int v : gate.targets) out += ' ' + std::to_string(v);
    out += '\n';
  }
  return out;
}

/// JSON array of [re, im] pairs.
inline Json state_to_json(const StateVector& psi) {
  auto arr = Json::array();
  for (const auto& a : psi.amplitudes()) arr.push_back({a.real(), a.imag()});
  return arr;
}

inline StateVector state_from_json(const Json& j) {
  if (!j.is_array()) detail::fail_input("state JSON must be an array of [re, im] pairs");
  std::vector<Amplitude> v;
  v.reserve(j.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      detail::fail_input("state JSON entry must be [re, im]");
    v.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return StateVector(std::move(v));
}

}  // namespace hyperstate
