#pragma once

// Generators and independent reference routines shared by the test suites.

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hyperstate/hyperstate.hpp"

namespace testing_support {

using hyperstate::Amplitude;
using hyperstate::Edge;
using hyperstate::Hypergraph;
using hyperstate::StateVector;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

/// Uniform random hypergraph: each subset of size >= min_size present with probability p.
inline Hypergraph random_hypergraph(int d, double p = 0.3, int min_size = 1) {
  std::bernoulli_distribution keep(p);
  std::vector<Edge> edges;
  for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
    if (std::popcount(mask) < min_size || !keep(rng())) continue;
    Edge e;
    for (int v = 0; v < d; ++v)
      if (mask >> v & 1) e.push_back(v);
    edges.push_back(std::move(e));
  }
  return Hypergraph(d, std::move(edges));
}

inline StateVector random_state(std::size_t dim) {
  std::normal_distribution<double> g;
  std::vector<Amplitude> v(dim);
  double norm = 0;
  for (auto& x : v) {
    x = {g(rng()), g(rng())};
    norm += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(norm);
  return StateVector(std::move(v));
}

inline std::vector<int> random_permutation(int d) {
  std::vector<int> p(d);
  for (int i = 0; i < d; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

/// O(D^2) DFT with the forward sign e^{-2 pi i k n / D}, unscaled.
inline std::vector<Amplitude> naive_dft(const std::vector<Amplitude>& x, bool inverse = false) {
  const std::size_t n = x.size();
  std::vector<Amplitude> y(n);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      y[k] += x[j] * std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>((k * j) % n) /
                                         static_cast<double>(n));
  return y;
}

/// Straight state-vector simulation of a circuit: H on every qubit of |0..0>,
/// then each multi-controlled Z flips the sign where all its targets are 1.
/// Qubit 0 is the most significant bit.
inline StateVector simulate(const hyperstate::CircuitDescription& c) {
  const std::size_t dim = std::size_t{1} << c.qubits;
  std::vector<Amplitude> v(dim, 0.0);
  v[0] = 1.0;
  for (const auto& g : c.gates) {
    if (g.kind == hyperstate::GateKind::H) {
      const std::size_t bit = std::size_t{1} << (c.qubits - 1 - g.targets.at(0));
      for (std::size_t n = 0; n < dim; ++n) {
        if (n & bit) continue;
        const auto a = v[n], b = v[n | bit];
        v[n] = (a + b) / std::numbers::sqrt2;
        v[n | bit] = (a - b) / std::numbers::sqrt2;
      }
    } else {
      std::size_t mask = 0;
      for (int t : g.targets) mask |= std::size_t{1} << (c.qubits - 1 - t);
      for (std::size_t n = 0; n < dim; ++n)
        if ((n & mask) == mask) v[n] = -v[n];
    }
  }
  return StateVector(std::move(v));
}

inline double max_diff(const StateVector& a, const StateVector& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace testing_support
