#pragma once

// Hypergraphs on d vertices, their Boolean functions, family generators
// and the text form `d=<int>; edges=<edge>(;<edge>)*`.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "hyperstate/error.hpp"

namespace hyperstate {

using Edge = std::vector<int>;

/// Largest vertex count a Hypergraph may carry (vertices map to bits of a 64-bit word).
inline constexpr int kMaxVertices = 63;

/// Largest vertex count for which 2^d-sized objects (truth tables, states) are built.
inline constexpr int kMaxStateVertices = 24;

/// A vertex count plus a set of hyperedges, always held in canonical form:
/// vertices ascending inside each edge, edges ordered by (size, lexicographic).
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates and canonicalizes. Throws input_error on an empty edge, a vertex
  /// outside [0, d), a repeated vertex inside an edge, or a repeated edge.
  Hypergraph(int d, std::vector<Edge> edges) : d_(d), edges_(std::move(edges)) {
    if (d < 1 || d > kMaxVertices)
      detail::fail_input("vertex count must be in [1, " + std::to_string(kMaxVertices) + "], got " + std::to_string(d));
    for (auto& e : edges_) {
      if (e.empty()) detail::fail_input("empty hyperedge");
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) detail::fail_input("repeated vertex inside a hyperedge");
      if (e.front() < 0 || e.back() >= d) detail::fail_input("vertex index out of range for d=" + std::to_string(d));
    }
    std::sort(edges_.begin(), edges_.end(), edge_less);
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) detail::fail_input("repeated hyperedge");
  }

  int vertex_count() const noexcept { return d_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  /// Bit pattern selecting the edge's vertices inside a basis index n.
  /// Vertex j carries weight 2^(d-1-j), i.e. vertex 0 is the most significant bit.
  std::uint64_t edge_mask(std::size_t i) const {
    std::uint64_t mask = 0;
    for (int v : edges_.at(i)) mask |= std::uint64_t{1} << (d_ - 1 - v);
    return mask;
  }

  /// Canonical edge order: cardinality first, then lexicographic vertex list.
  static bool edge_less(const Edge& a, const Edge& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int d_ = 1;
  std::vector<Edge> edges_;
};

/// Truth table of f : {0,1}^d -> {0,1}; entry n is f(n).
struct BooleanFunction {
  int arity = 0;
  std::vector<std::uint8_t> truth_table;

  bool operator()(std::size_t n) const { return truth_table.at(n) != 0; }
  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;
};

/// f(n) = XOR over edges of AND over the edge's vertex bits of n.
inline BooleanFunction boolean_function(const Hypergraph& g) {
  const int d = g.vertex_count();
  if (d > kMaxStateVertices)
    detail::fail_guard("truth table for d=" + std::to_string(d) + " exceeds 2^" + std::to_string(kMaxStateVertices) +
                       " entries");
  std::vector<std::uint64_t> masks(g.edge_count());
  for (std::size_t i = 0; i < masks.size(); ++i) masks[i] = g.edge_mask(i);

  const std::size_t size = std::size_t{1} << d;
  BooleanFunction f{d, std::vector<std::uint8_t>(size, 0)};
  for (std::size_t n = 0; n < size; ++n) {
    std::uint8_t bit = 0;
    for (auto m : masks) bit ^= static_cast<std::uint8_t>((n & m) == m);
    f.truth_table[n] = bit;
  }
  return f;
}

/// Every vertex lies in some edge and co-membership links all vertices
/// into a single component. Graphs with d <= 1 count as connected.
inline bool is_connected(const Hypergraph& g) {
  const int d = g.vertex_count();
  if (d <= 1) return true;
  std::vector<int> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> covered(d, false);
  for (const auto& e : g.edges()) {
    for (int v : e) {
      covered[v] = true;
      parent[find(v)] = find(e.front());
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) return false;
  const int root = find(0);
  for (int v = 1; v < d; ++v)
    if (find(v) != root) return false;
  return true;
}

/// Image of g under the vertex map v -> perm[v].
inline Hypergraph relabel(const Hypergraph& g, const std::vector<int>& perm) {
  const int d = g.vertex_count();
  if (static_cast<int>(perm.size()) != d) detail::fail_input("relabeling must cover every vertex");
  std::vector<int> seen(perm);
  std::sort(seen.begin(), seen.end());
  for (int v = 0; v < d; ++v)
    if (seen[v] != v) detail::fail_input("relabeling is not a permutation");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    Edge mapped;
    for (int v : e) mapped.push_back(perm[v]);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph(d, std::move(edges));
}

inline constexpr int kMaxIsomorphismVertices = 10;

/// Exhaustive search over vertex permutations.
inline bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const int d = a.vertex_count();
  if (d > kMaxIsomorphismVertices)
    detail::fail_guard("isomorphism test limited to d <= " + std::to_string(kMaxIsomorphismVertices));
  std::vector<std::size_t> sa, sb;
  for (const auto& e : a.edges()) sa.push_back(e.size());
  for (const auto& e : b.edges()) sb.push_back(e.size());
  if (sa != sb) return false;
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Hypergraph edgeless(int d) {
  return Hypergraph(d, {});
}

inline Hypergraph single_full_edge(int d) {
  if (d < 1) detail::fail_input("single_full_edge needs d >= 1");
  Edge e(d);
  std::iota(e.begin(), e.end(), 0);
  return Hypergraph(d, {std::move(e)});
}

/// All k-subsets of {0..d-1} in lexicographic order.
inline std::vector<Edge> k_subsets(int d, int k) {
  if (d < 1 || d > kMaxVertices || k < 1 || k > d)
    detail::fail_input("k-subsets need 1 <= k <= d, got d=" + std::to_string(d) + " k=" + std::to_string(k));
  std::vector<Edge> out;
  Edge cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == d - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline Hypergraph complete_k_graph(int d, int k) {
  return Hypergraph(d, k_subsets(d, k));
}

/// Every hypergraph whose edges form a nonempty subset of the k-subsets of
/// {0..d-1}. Item i (0-based) uses the edge-subset bitmask i+1, where bit b
/// selects the b-th k-subset in lexicographic order.
class KUniformFamily {
 public:
  /// Refuses families whose base set has more than this many k-subsets.
  static constexpr std::size_t kMaxBaseEdges = 30;

  KUniformFamily(int d, int k) : d_(d), k_(k) {
    if (d < 1 || d > kMaxVertices || k < 1 || k > d)
      detail::fail_input("k-uniform family needs 1 <= k <= d, got d=" + std::to_string(d) + " k=" + std::to_string(k));
    if (binomial(d, k) > kMaxBaseEdges)
      detail::fail_guard("C(" + std::to_string(d) + "," + std::to_string(k) + ") exceeds " +
                         std::to_string(kMaxBaseEdges) + " base edges");
    base_ = k_subsets(d, k);
  }

  int vertex_count() const noexcept { return d_; }
  int edge_size() const noexcept { return k_; }
  const std::vector<Edge>& base_edges() const noexcept { return base_; }
  std::uint64_t size() const noexcept { return (std::uint64_t{1} << base_.size()) - 1; }

  Hypergraph at(std::uint64_t index) const {
    if (index >= size()) detail::fail_input("family index out of range");
    const std::uint64_t mask = index + 1;
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < base_.size(); ++b)
      if ((mask >> b) & 1U) edges.push_back(base_[b]);
    return Hypergraph(d_, std::move(edges));
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Hypergraph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const KUniformFamily* fam, std::uint64_t i) : fam_(fam), i_(i) {}
    Hypergraph operator*() const { return fam_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++i_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.i_ == b.i_; }

   private:
    const KUniformFamily* fam_ = nullptr;
    std::uint64_t i_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

  static std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
  }

 private:
  int d_;
  int k_;
  std::vector<Edge> base_;
};

inline KUniformFamily k_uniform_family(int d, int k) {
  return {d, k};
}

// ---------------------------------------------------------------------------
// text form

/// Edge list only: "0,3;0,2,3;1,2,3" (empty string for no edges).
inline std::string format_edges(const Hypergraph& g) {
  std::string out;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) out += ';';
    const auto& e = g.edges()[i];
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(e[j]);
    }
  }
  return out;
}

inline std::string serialize_hypergraph(const Hypergraph& g) {
  return "d=" + std::to_string(g.vertex_count()) + "; edges=" + format_edges(g);
}

namespace detail {

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

inline int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    fail_input("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  return value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace detail

/// Parses an edge list "0,3;0,2,3" for a given d. Whitespace is ignored.
inline Hypergraph parse_edges(int d, std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  std::vector<Edge> edges;
  if (!s.empty()) {
    for (auto part : detail::split(s, ';')) {
      if (part.empty()) detail::fail_input("empty hyperedge in '" + s + "'");
      Edge e;
      for (auto v : detail::split(part, ',')) e.push_back(detail::parse_int(v, "vertex index"));
      edges.push_back(std::move(e));
    }
  }
  return Hypergraph(d, std::move(edges));
}

inline Hypergraph parse_hypergraph(std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  constexpr std::string_view kEdgesKey = ";edges=";
  if (s.rfind("d=", 0) != 0) detail::fail_input("hypergraph text must start with 'd='");
  const auto sep = s.find(kEdgesKey);
  if (sep == std::string::npos) detail::fail_input("hypergraph text lacks '; edges='");
  const int d = detail::parse_int(std::string_view(s).substr(2, sep - 2), "vertex count");
  return parse_edges(d, std::string_view(s).substr(sep + kEdgesKey.size()));
}

}  // namespace hyperstate
