#pragma once

// Recomputes every reference value the library knows about and grades each
// one: pass, fail, discrepancy (ungraded mismatch) or info (no reference).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "hyperstate/coherence.hpp"
#include "hyperstate/hypergraph.hpp"
#include "hyperstate/moments.hpp"
#include "hyperstate/operators.hpp"
#include "hyperstate/plot.hpp"
#include "hyperstate/squeezing.hpp"
#include "hyperstate/state.hpp"
#include "hyperstate/sweep.hpp"

namespace hyperstate {

enum class Verdict { Pass, Fail, Discrepancy, Info };
enum class Relation { Equal, AtMost };  // computed == reference, or computed <= reference

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Discrepancy: return "discrepancy";
    case Verdict::Info: return "info";
  }
  return {};
}

struct Comparison {
  std::string section;
  std::string quantity;
  std::optional<double> reference;
  std::optional<double> computed;
  double tolerance = 0.0;
  bool relative = false;
  bool graded = true;
  Relation relation = Relation::Equal;
  Verdict verdict = Verdict::Info;
  std::string note;
};

inline Verdict grade(const Comparison& c) {
  if (!c.reference) return Verdict::Info;
  bool ok = false;
  if (c.computed) {
    const double slack = c.tolerance * (c.relative ? std::abs(*c.reference) : 1.0);
    ok = c.relation == Relation::Equal ? std::abs(*c.computed - *c.reference) <= slack
                                       : *c.computed <= *c.reference + slack;
  }
  if (ok) return Verdict::Pass;
  return c.graded ? Verdict::Fail : Verdict::Discrepancy;
}

struct ReproduceOptions {
  unsigned threads = 1;
  bool extended = false;  // larger sweeps with no graded rows
};

struct ReproductionReport {
  std::vector<Comparison> rows;
  std::vector<PlotSeries> series;

  std::size_t count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [v](const Comparison& c) { return c.verdict == v; }));
  }
  bool graded_ok() const { return count(Verdict::Fail) == 0; }
};

namespace reference {

inline constexpr std::array<int, 16> kExampleSigns{1, 1, 1, 1, 1, 1, 1, -1, 1, -1, 1, 1, 1, -1, 1, -1};
inline constexpr const char* kExampleEdges = "0,3;0,2,3;1,2,3";
inline constexpr double kExampleVarP = 3.4312;
inline constexpr double kExampleVarN = 21.25;
inline constexpr double kExampleHalfComm = 1.8624;

// S_P of the single full edge, d = 4..13
inline constexpr std::array<double, 10> kSingleFullSp{-0.2238, -0.6817, -0.8686, -0.9449, -0.9764,
                                                      -0.9898, -0.9955, -0.998,  -0.9991, -0.9996};

struct ExtremaRow {
  int d;
  double max;
  const char* argmax;
  double min;
  const char* argmin;
};

// (d-1)-graphs, extrema of S_P over connected squeezed configurations
inline constexpr std::array<ExtremaRow, 8> kDMinus1Sp{{
    {5, -0.0265, "0,1,2,3;0,1,2,4;0,1,3,4;0,2,3,4", -0.4968, "0,1,2,3;0,1,2,4;0,1,3,4"},
    {6, -0.0066, "0,1,2,3,4;0,1,3,4,5;0,2,3,4,5;1,2,3,4,5", -0.7862, "0,1,2,3,4;0,1,2,3,5;0,1,2,4,5"},
    {7, -0.1013, "0,1,2,3,5,6;0,1,3,4,5,6;0,2,3,4,5,6;1,2,3,4,5,6", -0.9113, "0,1,2,3,4,5;0,1,2,3,4,6;0,1,2,3,5,6"},
    {8, -0.1273, "0,1,2,4,5,6,7;1,2,3,4,5,6,7", -0.9633, "0,1,2,3,4,5,6;0,1,2,3,4,6,7"},
    {9, -0.5749, "0,1,2,4,5,6,7,8;1,2,3,4,5,6,7,8", -0.9851, "0,1,2,3,4,5,6,7;0,1,2,3,4,5,7,8"},
    {10, -0.3705, "0,1,3,4,5,6,7,8,9;0,2,3,4,5,6,7,8,9", -0.9937, "0,1,2,3,4,5,6,7,8;0,1,2,3,4,5,6,8,9"},
    {11, -0.6754, "0,1,3,4,5,6,7,8,9,10;0,2,3,4,5,6,7,8,9,10", -0.9973, "0,1,2,3,4,5,6,7,8,9;0,1,2,3,4,5,6,7,9,10"},
    {12, -0.8281, "0,1,3,4,5,6,7,8,9,10,11;0,2,3,4,5,6,7,8,9,10,11", -0.9988,
     "0,1,2,3,4,5,6,7,8,9,11;0,1,2,3,4,5,6,7,8,10,11;0,1,2,3,4,5,6,7,9,10,11"},
}};

struct Cell {
  int d;
  int k;
  double s_p;
};

// complete k-graphs; cells not listed are blank in the reference
inline constexpr std::array<Cell, 40> kCompleteKSp{{
    {5, 4, -0.401},    {5, 5, -0.6817},  {6, 3, -0.5061},   {6, 4, -0.664},   {6, 5, -0.5307},  {6, 6, -0.8686},
    {7, 3, -0.2925},   {7, 4, -0.8166},  {7, 5, -0.6357},   {7, 6, -0.8636},  {7, 7, -0.9449},  {8, 4, -0.873},
    {8, 5, -0.6821},   {8, 6, -0.8753},  {8, 7, -0.9253},   {8, 8, -0.9764},  {9, 3, -0.6502},  {9, 4, -0.9085},
    {9, 5, -0.4676},   {9, 6, -0.8921},  {9, 7, -0.9178},   {9, 8, -0.9736},  {9, 9, -0.9898},  {10, 3, -0.8093},
    {10, 4, -0.9366},  {10, 5, -0.8181}, {10, 6, -0.8715},  {10, 7, -0.8964}, {10, 8, -0.9769}, {10, 9, -0.9868},
    {10, 10, -0.9955}, {11, 2, -0.1274}, {11, 3, -0.8312},  {11, 4, -0.959},  {11, 5, -0.9602}, {11, 6, -0.712},
    {11, 8, -0.9832},  {11, 9, -0.988},  {11, 10, -0.9949}, {11, 11, -0.998},
}};

/// One row of an Agarwal-Tara block: the two highest factorial moments, the two
/// highest number moments, both determinants and A_n.
struct AgarwalTaraRow {
  int d;
  int n;
  double m_lo, m_hi, mu_lo, mu_hi, det_m, det_mu, a_n;
};

inline constexpr std::array<AgarwalTaraRow, 8> kAgarwalTara{{
    {2, 2, 1.5, 2, 1.5, 3.5, -0.25, 1.25, -0.166},
    {3, 2, 3.5, 14, 3.5, 17.5, 1.75, 5.25, 0.5},
    {3, 3, 52.5, 168, 98, 584.5, -61.2499, 110.25, -0.3571},
    {4, 3, 682.5, 6552, 760, 11144.5, -2091.25, 7586.25, -0.2160},
    {5, 3, 6742.5, 151032, 7068, 526984.5, 77600.749, 494194.25, 0.1862},
    {3, 4, 420, 720, 3526, 23102.5, 12405393, 187211.06, -1.0153},
    {4, 4, 60060, 514800, 190792.5, 2028032.5, 3.01293e11, 1.5322e11, -2.0348},
    {5, 4, 3398220, 75731760, 5081768, 1.371e18, -2.6151e18, -6.6556e16, -1.0261},
}};

// number-basis coherence, d = 4..10
inline constexpr std::array<double, 7> kNumberL1{15, 31, 63, 127, 255, 511, 1023};
inline constexpr std::array<double, 7> kNumberEntropy{2.772, 3.465, 4.158, 4.852, 5.545, 6.238, 6.931};

struct CoherenceRow {
  int d;
  double rel_max, rel_min, l1_max, l1_min;
};

// phase-basis coherence of (d-1)-graphs; maxima at the complete (d-1)-graph,
// minima at two-edge configurations
inline constexpr std::array<CoherenceRow, 5> kPhaseCoherence{{
    {4, 2.4889, 1.709, 12.8646, 7.4926},
    {5, 2.5315, 1.2645, 19.4148, 9.0122},
    {6, 1.9539, 0.8317, 25.6414, 10.8189},
    {7, 1.579, 0.496, 31.4497, 10.234},
    {8, 0.9944, 0.2513, 35.805, 11.4444},
}};

inline constexpr std::array<std::size_t, 5> kStructureDims{4, 8, 16, 64, 256};

}  // namespace reference

namespace detail {

inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

inline Comparison row(std::string section, std::string quantity, std::optional<double> ref,
                      std::optional<double> computed, double tol, bool graded = true, bool relative = false,
                      std::string note = {}) {
  Comparison c{std::move(section), std::move(quantity), ref, computed, tol, relative, graded, Relation::Equal,
               Verdict::Info,      std::move(note)};
  return c;
}

inline std::vector<Hypergraph> all_hypergraphs(int d) {
  std::vector<Edge> candidates;
  for (int k = 2; k <= d; ++k) {
    auto sub = k_subsets(d, k);
    candidates.insert(candidates.end(), sub.begin(), sub.end());
  }
  std::vector<Hypergraph> out;
  const std::uint64_t total = std::uint64_t{1} << candidates.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (mask >> i & 1) edges.push_back(candidates[i]);
    out.emplace_back(d, std::move(edges));
  }
  return out;
}

inline bool any_isomorphic(const std::vector<std::string>& found, int d, const char* ref) {
  const auto target = parse_edges(d, ref);
  return std::any_of(found.begin(), found.end(),
                     [&](const std::string& e) { return isomorphic(parse_edges(d, e), target); });
}

}  // namespace detail

inline void reproduce_example(ReproductionReport& r) {
  const std::string sec = "four-vertex example";
  const auto g = parse_edges(4, reference::kExampleEdges);
  const auto psi = hypergraph_state(g);
  int mismatches = 0;
  for (std::size_t n = 0; n < psi.dim(); ++n) {
    const double expected = reference::kExampleSigns[n] / 4.0;
    if (psi[n] != Amplitude(expected, 0.0)) ++mismatches;
  }
  r.rows.push_back(detail::row(sec, "amplitude mismatches", 0, mismatches, 0));
  const auto s = squeeze_report(psi, 4, format_edges(g));
  r.rows.push_back(detail::row(sec, "var_p", reference::kExampleVarP, s.var_p, 1e-3));
  r.rows.push_back(detail::row(sec, "var_n", reference::kExampleVarN, s.var_n, 1e-3));
  r.rows.push_back(detail::row(sec, "var_n closed form", number_stats(4).variance, s.var_n, 1e-9));
  r.rows.push_back(detail::row(sec, "half_comm", reference::kExampleHalfComm, s.half_comm, 1e-3));
  r.rows.push_back(detail::row(sec, "s_p", std::nullopt, s.s_p, 0, false, false, "positive: not phase squeezed"));
}

inline void reproduce_single_full(ReproductionReport& r) {
  PlotSeries series{"single_full_s_p", "d", "s_p", {}};
  for (int d = 4; d <= 13; ++d) {
    const auto s = squeeze_report(single_full_edge(d));
    r.rows.push_back(
        detail::row("single full edge", "s_p d=" + std::to_string(d), reference::kSingleFullSp[d - 4], s.s_p, 1e-3));
    if (s.s_p) series.points.emplace_back(d, *s.s_p);
  }
  r.series.push_back(std::move(series));
}

inline void reproduce_dminus1(ReproductionReport& r, const ReproduceOptions& o) {
  const std::string sec = "(d-1)-graph s_p extrema";
  PlotSeries hi{"dminus1_max_s_p", "d", "max s_p", {}}, lo{"dminus1_min_s_p", "d", "min s_p", {}};
  const int last = o.extended ? 12 : 8;
  for (const auto& ref : reference::kDMinus1Sp) {
    if (ref.d > last) break;
    const bool graded = ref.d <= 8;
    SweepOptions so;
    so.squeezed_only = true;
    so.threads = o.threads;
    const auto res = sweep_family(Family::d_minus_1(ref.d), {Metric::SP}, so);
    const auto& e = res.summary.at(Metric::SP);
    const std::string dd = "d=" + std::to_string(ref.d);
    r.rows.push_back(detail::row(sec, "max " + dd, ref.max, e.max, 1e-3, graded));
    r.rows.push_back(detail::row(sec, "min " + dd, ref.min, e.min, 1e-3, graded));
    const bool iso = ref.d <= kMaxIsomorphismVertices;
    if (iso) {
      r.rows.push_back(detail::row(sec, "argmax " + dd + " matches up to relabeling", 1,
                                   detail::any_isomorphic(e.argmax, ref.d, ref.argmax) ? 1 : 0, 0, graded, false,
                                   e.argmax.front()));
      r.rows.push_back(detail::row(sec, "argmin " + dd + " matches up to relabeling", 1,
                                   detail::any_isomorphic(e.argmin, ref.d, ref.argmin) ? 1 : 0, 0, graded, false,
                                   e.argmin.front()));
    }
    if (e.max) hi.points.emplace_back(ref.d, *e.max);
    if (e.min) lo.points.emplace_back(ref.d, *e.min);
  }
  r.series.push_back(std::move(hi));
  r.series.push_back(std::move(lo));
}

inline void reproduce_complete_k(ReproductionReport& r) {
  const std::string sec = "complete k-graph s_p";
  auto lookup = [](int d, int k) -> std::optional<double> {
    for (const auto& c : reference::kCompleteKSp)
      if (c.d == d && c.k == k) return c.s_p;
    return std::nullopt;
  };
  for (int d = 5; d <= 11; ++d) {
    for (int k = 2; k <= d; ++k) {
      const auto ref = lookup(d, k);
      if (!ref && d > 8) continue;
      const auto s = squeeze_report(complete_k_graph(d, k));
      std::string note;
      if (!ref) note = s.s_p && *s.s_p >= 0 ? "blank in reference; not squeezed" : "blank in reference";
      r.rows.push_back(detail::row(sec, "d=" + std::to_string(d) + " k=" + std::to_string(k), ref, s.s_p, 1e-3, d <= 8,
                                   false, note));
    }
  }
}

/// Comparisons against the reference block for (d, n); empty when there is none.
inline std::vector<Comparison> agarwal_tara_comparisons(int d, int n) {
  std::vector<Comparison> rows;
  const reference::AgarwalTaraRow* found = nullptr;
  for (const auto& ref : reference::kAgarwalTara)
    if (ref.d == d && ref.n == n) found = &ref;
  if (!found) return rows;
  const auto& ref = *found;
  const std::string sec = "Agarwal-Tara A" + std::to_string(n);
  const std::string dd = " d=" + std::to_string(d);
  const auto res = agarwal_tara(d, n);
  const auto set = moment_set(d, 2 * n - 2);
  const int lo = 2 * n - 3, hi = 2 * n - 2;
  const double top = std::ldexp(1.0, d) - 1.0;

  auto moment_row = [&](const std::string& name, int k, const Rational& exact, double printed) {
    std::string note = "exact " + to_fraction_string(exact);
    if (name == "mu" && printed > std::pow(top, k))
      note += "; reference exceeds (2^d-1)^" + std::to_string(k) + " = " + detail::fmt(std::pow(top, k)) +
              ", the largest value <N^k> can take";
    rows.push_back(
        detail::row(sec, name + "_" + std::to_string(k) + dd, printed, to_double(exact), 1e-4, false, true, note));
  };
  moment_row("m", lo, set.m[lo], ref.m_lo);
  moment_row("m", hi, set.m[hi], ref.m_hi);
  moment_row("mu", lo, set.mu[lo], ref.mu_lo);
  moment_row("mu", hi, set.mu[hi], ref.mu_hi);

  const bool graded = n <= 3;
  const bool det_graded = d == 3 && n == 3;
  rows.push_back(detail::row(sec, "det m" + dd, ref.det_m, to_double(res.det_m), 1e-4, det_graded, true,
                             "exact " + to_fraction_string(res.det_m)));
  rows.push_back(detail::row(sec, "det mu" + dd, ref.det_mu, to_double(res.det_mu), 1e-4, det_graded, true,
                             "exact " + to_fraction_string(res.det_mu)));
  rows.push_back(detail::row(sec, "A" + std::to_string(n) + dd, ref.a_n, to_double(res.a_n), n == 2 ? 1e-3 : 1e-4,
                             graded, false, "exact " + to_fraction_string(res.a_n)));
  rows.push_back(detail::row(sec, "A" + std::to_string(n) + dd + " float route", to_double(res.a_n),
                             agarwal_tara_float(d, n), 1e-9, true, true));
  for (auto& c : rows) c.verdict = grade(c);
  return rows;
}

inline void reproduce_agarwal_tara(ReproductionReport& r) {
  for (const auto& ref : reference::kAgarwalTara) {
    auto rows = agarwal_tara_comparisons(ref.d, ref.n);
    r.rows.insert(r.rows.end(), rows.begin(), rows.end());
  }
}

inline void reproduce_coherence(ReproductionReport& r, const ReproduceOptions& o) {
  for (int d = 4; d <= 10; ++d) {
    const auto c = coherence_report(complete_k_graph(d, d - 1), Basis::Number);
    const std::string dd = " d=" + std::to_string(d);
    r.rows.push_back(detail::row("number-basis coherence", "c_l1" + dd, reference::kNumberL1[d - 4], c.c_l1, 0));
    r.rows.push_back(
        detail::row("number-basis coherence", "c_rel_ent" + dd, reference::kNumberEntropy[d - 4], c.c_rel_ent, 1e-3));
  }

  const std::string sec = "phase-basis coherence of (d-1)-graphs";
  PlotSeries rel_hi{"phase_rel_ent_max", "d", "max c_rel_ent", {}},
      rel_lo{"phase_rel_ent_min", "d", "min c_rel_ent", {}}, l1_hi{"phase_l1_max", "d", "max c_l1", {}},
      l1_lo{"phase_l1_min", "d", "min c_l1", {}};
  const int last = o.extended ? 10 : 8;
  for (int d = 4; d <= last; ++d) {
    const reference::CoherenceRow* ref = nullptr;
    for (const auto& row : reference::kPhaseCoherence)
      if (row.d == d) ref = &row;
    SweepOptions so;
    so.threads = o.threads;
    const auto res = sweep_family(Family::d_minus_1(d), {Metric::CRelPhase, Metric::CL1Phase}, so);
    const auto& rel = res.summary.at(Metric::CRelPhase);
    const auto& l1 = res.summary.at(Metric::CL1Phase);
    const bool graded = d == 4;
    const std::string dd = " d=" + std::to_string(d);
    auto ref_of = [&](double v) { return ref ? std::optional<double>(v) : std::nullopt; };
    auto diff_note = [&](const std::optional<double>& got, double printed) {
      if (!ref || !got) return std::string();
      const double delta = printed - *got;
      return std::abs(std::abs(delta) - 1.0) < 1e-3 ? "reference exceeds computed by " + detail::fmt(delta)
                                                    : std::string();
    };
    r.rows.push_back(detail::row(sec, "max c_rel_ent" + dd, ref_of(ref ? ref->rel_max : 0), rel.max, 1e-3, graded));
    r.rows.push_back(detail::row(sec, "min c_rel_ent" + dd, ref_of(ref ? ref->rel_min : 0), rel.min, 1e-3, graded,
                                 false, rel.argmin.front()));
    r.rows.push_back(detail::row(sec, "max c_l1" + dd, ref_of(ref ? ref->l1_max : 0), l1.max, 1e-3, graded, false,
                                 diff_note(l1.max, ref ? ref->l1_max : 0)));
    r.rows.push_back(detail::row(sec, "min c_l1" + dd, ref_of(ref ? ref->l1_min : 0), l1.min, 1e-3, graded, false,
                                 diff_note(l1.min, ref ? ref->l1_min : 0)));
    const auto full = format_edges(complete_k_graph(d, d - 1));
    r.rows.push_back(detail::row(sec, "argmax c_rel_ent" + dd + " is the complete (d-1)-graph", 1,
                                 std::count(rel.argmax.begin(), rel.argmax.end(), full) ? 1 : 0, 0, graded));
    r.rows.push_back(detail::row(sec, "argmin c_rel_ent" + dd + " has two edges", 1,
                                 parse_edges(d, rel.argmin.front()).edge_count() == 2 ? 1 : 0, 0, graded));
    if (rel.max) rel_hi.points.emplace_back(d, *rel.max);
    if (rel.min) rel_lo.points.emplace_back(d, *rel.min);
    if (l1.max) l1_hi.points.emplace_back(d, *l1.max);
    if (l1.min) l1_lo.points.emplace_back(d, *l1.min);
  }
  for (auto* s : {&rel_hi, &rel_lo, &l1_hi, &l1_lo}) r.series.push_back(std::move(*s));
}

inline void reproduce_claims(ReproductionReport& r, const ReproduceOptions& o) {
  // number squeezing never occurs
  {
    std::size_t configs = 0, violations = 0;
    double min_sn = INFINITY;
    auto visit = [&](const SweepRecord& rec) {
      ++configs;
      if (!rec.s_n) return;
      min_sn = std::min(min_sn, *rec.s_n);
      if (*rec.s_n < 0) ++violations;
    };
    for (int d = 2; d <= 8; ++d) {
      SweepOptions so;
      so.connected_only = false;
      so.threads = o.threads;
      for (const auto& rec : sweep_records(Family::d_minus_1(d), so)) visit(rec);
      for (int k = 2; k <= d; ++k) visit(evaluate_configuration(complete_k_graph(d, k)));
    }
    r.rows.push_back(detail::row("claims", "configurations with s_n < 0 (d <= 8)", 0, static_cast<double>(violations),
                                 0, true, false,
                                 std::to_string(configs) + " configurations, min s_n " + detail::fmt(min_sn)));
  }

  // eigenvalue bound for i[N, P]
  for (auto dim : reference::kStructureDims) {
    const auto rep = spectral_bound_check(StateVector::basis(dim, 0));
    Comparison c = detail::row("claims", "spectral radius of i[N,P] D=" + std::to_string(dim), rep.closed_form_bound,
                               rep.spectral_radius, 1e-10, false, false,
                               "bound 2pi(D-1)^2/(4D^2); row-sum reach " + detail::fmt(rep.disc_reach));
    c.relation = Relation::AtMost;
    r.rows.push_back(std::move(c));
  }

  // <[X^k, M^k]> on every hypergraph state with d <= 4
  for (int k = 1; k <= 4; ++k) {
    for (int d = 1; d <= 4; ++d) {
      double worst = 0.0;
      for (const auto& g : detail::all_hypergraphs(d))
        worst = std::max(worst, std::abs(quadrature_commutator_expectation(hypergraph_state(g), k)));
      r.rows.push_back(detail::row(
          "claims", "max |<[X^" + std::to_string(k) + ",M^" + std::to_string(k) + "]>| d=" + std::to_string(d), 0,
          worst, 1e-10, k <= 2));
    }
  }
}

inline ReproductionReport reproduce(const ReproduceOptions& o = {}) {
  ReproductionReport r;
  reproduce_example(r);
  reproduce_single_full(r);
  reproduce_dminus1(r, o);
  reproduce_complete_k(r);
  reproduce_agarwal_tara(r);
  reproduce_coherence(r, o);
  reproduce_claims(r, o);
  for (auto& c : r.rows) c.verdict = grade(c);
  return r;
}

inline Json to_json(const Comparison& c) {
  return Json{{"section", c.section},
              {"quantity", c.quantity},
              {"reference", optional_to_json(c.reference)},
              {"computed", optional_to_json(c.computed)},
              {"tolerance", c.tolerance},
              {"relative", c.relative},
              {"relation", c.relation == Relation::Equal ? "equal" : "at_most"},
              {"graded", c.graded},
              {"verdict", to_string(c.verdict)},
              {"note", c.note}};
}

inline Json to_json(const ReproductionReport& r) {
  auto rows = Json::array();
  for (const auto& c : r.rows) rows.push_back(to_json(c));
  return Json{{"pass", r.count(Verdict::Pass)},
              {"fail", r.count(Verdict::Fail)},
              {"discrepancy", r.count(Verdict::Discrepancy)},
              {"info", r.count(Verdict::Info)},
              {"rows", rows}};
}

}  // namespace hyperstate
