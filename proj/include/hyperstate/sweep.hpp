#pragma once

// Exhaustive evaluation of hypergraph families, extremal search with ties,
// and byte-stable CSV/JSON persistence.

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <openssl/evp.h>

#include "hyperstate/coherence.hpp"
#include "hyperstate/hypergraph.hpp"
#include "hyperstate/squeezing.hpp"

#ifndef HYPERSTATE_VERSION
#define HYPERSTATE_VERSION "0.1.0"
#endif

namespace hyperstate {

// ---------------------------------------------------------------------------
// families

enum class FamilyKind { DMinus1, KUniform, CompleteK, SingleFull };

struct Family {
  FamilyKind kind = FamilyKind::DMinus1;
  int d = 0;
  int k = 0;  // edge size; implied for DMinus1 and SingleFull

  static Family d_minus_1(int d) { return {FamilyKind::DMinus1, d, d - 1}; }
  static Family k_uniform(int d, int k) { return {FamilyKind::KUniform, d, k}; }
  static Family complete_k(int d, int k) { return {FamilyKind::CompleteK, d, k}; }
  static Family single_full(int d) { return {FamilyKind::SingleFull, d, d}; }

  std::string descriptor() const {
    switch (kind) {
      case FamilyKind::DMinus1: return "dminus1(d=" + std::to_string(d) + ")";
      case FamilyKind::KUniform: return "k-uniform(d=" + std::to_string(d) + ",k=" + std::to_string(k) + ")";
      case FamilyKind::CompleteK: return "complete-k(d=" + std::to_string(d) + ",k=" + std::to_string(k) + ")";
      case FamilyKind::SingleFull: return "single-full(d=" + std::to_string(d) + ")";
    }
    return {};
  }
};

inline Family parse_family(std::string_view name, int d, int k) {
  if (name == "dminus1") {
    if (d < 2) detail::fail_input("dminus1 family needs d >= 2");
    return Family::d_minus_1(d);
  }
  if (name == "k-uniform") return Family::k_uniform(d, k);
  if (name == "complete-k") return Family::complete_k(d, k);
  if (name == "single-full") return Family::single_full(d);
  detail::fail_input("unknown family '" + std::string(name) + "' (expected dminus1|k-uniform|complete-k|single-full)");
}

/// Connectivity filtering is on for enumerated families, off for single configurations.
inline bool default_connectivity_filter(const Family& f) {
  return f.kind == FamilyKind::DMinus1 || f.kind == FamilyKind::KUniform;
}

/// Random access over a family's members in generator order.
class FamilyView {
 public:
  explicit FamilyView(const Family& f) : family_(f) {
    switch (f.kind) {
      case FamilyKind::DMinus1:
      case FamilyKind::KUniform: uniform_.emplace(f.d, f.k); break;
      case FamilyKind::CompleteK: single_ = complete_k_graph(f.d, f.k); break;
      case FamilyKind::SingleFull: single_ = single_full_edge(f.d); break;
    }
  }

  std::uint64_t size() const { return uniform_ ? uniform_->size() : 1; }
  Hypergraph at(std::uint64_t i) const {
    if (uniform_) return uniform_->at(i);
    if (i != 0) detail::fail_input("family index out of range");
    return single_;
  }

 private:
  Family family_;
  std::optional<KUniformFamily> uniform_;
  Hypergraph single_;
};

// ---------------------------------------------------------------------------
// records and metrics

enum class Metric { SP, SN, VarP, VarN, HalfComm, CL1Phase, CRelPhase };

inline constexpr std::array kAllMetrics{Metric::SP,       Metric::SN,       Metric::VarP,     Metric::VarN,
                                        Metric::HalfComm, Metric::CL1Phase, Metric::CRelPhase};

inline std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::SP: return "s_p";
    case Metric::SN: return "s_n";
    case Metric::VarP: return "var_p";
    case Metric::VarN: return "var_n";
    case Metric::HalfComm: return "half_comm";
    case Metric::CL1Phase: return "c_l1_phase";
    case Metric::CRelPhase: return "c_rel_phase";
  }
  return {};
}

inline Metric parse_metric(std::string_view s) {
  for (auto m : kAllMetrics)
    if (to_string(m) == s) return m;
  detail::fail_input("unknown metric '" + std::string(s) + "'");
}

struct SweepRecord {
  int d = 0;
  std::string edges;
  std::optional<double> s_p;
  std::optional<double> s_n;
  double var_p = 0.0;
  double var_n = 0.0;
  double half_comm = 0.0;
  double c_l1_phase = 0.0;
  double c_rel_phase = 0.0;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

inline std::optional<double> metric_value(const SweepRecord& r, Metric m) {
  switch (m) {
    case Metric::SP: return r.s_p;
    case Metric::SN: return r.s_n;
    case Metric::VarP: return r.var_p;
    case Metric::VarN: return r.var_n;
    case Metric::HalfComm: return r.half_comm;
    case Metric::CL1Phase: return r.c_l1_phase;
    case Metric::CRelPhase: return r.c_rel_phase;
  }
  return std::nullopt;
}

inline SweepRecord evaluate_configuration(const Hypergraph& g) {
  const auto psi = hypergraph_state(g);
  const auto sq = squeeze_report(psi, g.vertex_count(), format_edges(g));
  const auto phase = to_phase_basis(psi);
  return {g.vertex_count(),
          sq.edges,
          sq.s_p,
          sq.s_n,
          sq.var_p,
          sq.var_n,
          sq.half_comm,
          l1_coherence(phase),
          rel_entropy_coherence(phase)};
}

// ---------------------------------------------------------------------------
// summary

/// Values within this distance of an extremum count as ties.
inline constexpr double kTieTolerance = 1e-12;

struct Extremum {
  Metric metric = Metric::SP;
  std::size_t defined = 0;  // records with a defined value
  std::optional<double> min;
  std::optional<double> max;
  std::vector<std::string> argmin;  // canonical edge lists, sorted
  std::vector<std::string> argmax;
};

struct SweepSummary {
  std::string family;
  std::size_t count = 0;
  std::vector<Extremum> metrics;

  const Extremum& at(Metric m) const {
    for (const auto& e : metrics)
      if (e.metric == m) return e;
    detail::fail_input("metric '" + std::string(to_string(m)) + "' not in summary");
  }
};

inline SweepSummary summarize(std::string family, const std::vector<SweepRecord>& records,
                              const std::vector<Metric>& metrics) {
  SweepSummary s{std::move(family), records.size(), {}};
  for (auto m : metrics) {
    Extremum e{m, 0, std::nullopt, std::nullopt, {}, {}};
    for (const auto& r : records) {
      const auto v = metric_value(r, m);
      if (!v) continue;
      ++e.defined;
      if (!e.min || *v < *e.min) e.min = *v;
      if (!e.max || *v > *e.max) e.max = *v;
    }
    for (const auto& r : records) {
      const auto v = metric_value(r, m);
      if (!v) continue;
      if (std::abs(*v - *e.min) <= kTieTolerance) e.argmin.push_back(r.edges);
      if (std::abs(*v - *e.max) <= kTieTolerance) e.argmax.push_back(r.edges);
    }
    auto canonical_less = [d = records.empty() ? 1 : records.front().d](const std::string& a, const std::string& b) {
      const auto ga = parse_edges(d, a), gb = parse_edges(d, b);
      return std::lexicographical_compare(ga.edges().begin(), ga.edges().end(), gb.edges().begin(), gb.edges().end(),
                                          Hypergraph::edge_less);
    };
    std::sort(e.argmin.begin(), e.argmin.end(), canonical_less);
    std::sort(e.argmax.begin(), e.argmax.end(), canonical_less);
    s.metrics.push_back(std::move(e));
  }
  return s;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
  std::optional<bool> connected_only;  // unset: family default
  bool squeezed_only = false;          // keep only configurations with s_p < 0
  unsigned threads = 1;                // 0: hardware concurrency
};

struct SweepResult {
  std::vector<SweepRecord> records;
  SweepSummary summary;
};

inline std::string sweep_descriptor(const Family& f, const SweepOptions& o) {
  std::string s = f.descriptor();
  if (o.connected_only.value_or(default_connectivity_filter(f))) s += "+connected";
  if (o.squeezed_only) s += "+squeezed";
  return s;
}

/// Evaluates every member in generator order. The worker count changes only
/// wall time: each slot is written by exactly one worker and merged in order.
inline std::vector<SweepRecord> sweep_records(const Family& family, const SweepOptions& options) {
  const FamilyView view(family);
  const bool connected = options.connected_only.value_or(default_connectivity_filter(family));
  const std::uint64_t n = view.size();
  std::vector<std::optional<SweepRecord>> slots(n);

  auto work = [&](std::uint64_t i) {
    const auto g = view.at(i);
    if (connected && !is_connected(g)) return;
    auto rec = evaluate_configuration(g);
    if (options.squeezed_only && !(rec.s_p && *rec.s_p < 0.0)) return;
    slots[i] = std::move(rec);
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n));
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) work(i);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (auto i = next.fetch_add(1); i < n; i = next.fetch_add(1)) work(i);
        } catch (...) {
          errors[t] = std::current_exception();
          next = n;
        }
      });
    }
    pool.clear();  // joins
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<SweepRecord> records;
  for (auto& s : slots)
    if (s) records.push_back(std::move(*s));
  return records;
}

inline SweepResult sweep_family(const Family& family, const std::vector<Metric>& metrics,
                                const SweepOptions& options = {}) {
  auto records = sweep_records(family, options);
  if (records.empty()) detail::fail_input("family " + sweep_descriptor(family, options) + " is empty after filtering");
  auto summary = summarize(sweep_descriptor(family, options), records, metrics);
  return {std::move(records), std::move(summary)};
}

// ---------------------------------------------------------------------------
// persistence

enum class ResultFormat { Csv, Json };

inline constexpr std::string_view kCsvHeader = "d,edges,s_p,s_n,var_p,var_n,half_comm,c_l1_phase,c_rel_phase";

/// Shortest decimal that parses back to the same double.
inline std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

inline double parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    detail::fail_input("malformed number '" + std::string(s) + "'");
  return v;
}

inline std::string format_csv(const std::vector<SweepRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : "undefined"; };
  for (const auto& r : records) {
    out += std::to_string(r.d) + ",\"" + r.edges + "\"," + opt(r.s_p) + ',' + opt(r.s_n) + ',' +
           format_double(r.var_p) + ',' + format_double(r.var_n) + ',' + format_double(r.half_comm) + ',' +
           format_double(r.c_l1_phase) + ',' + format_double(r.c_rel_phase) + '\n';
  }
  return out;
}

inline Json record_to_json(const SweepRecord& r) {
  return Json{{"d", r.d},
              {"edges", r.edges},
              {"s_p", optional_to_json(r.s_p)},
              {"s_n", optional_to_json(r.s_n)},
              {"var_p", r.var_p},
              {"var_n", r.var_n},
              {"half_comm", r.half_comm},
              {"c_l1_phase", r.c_l1_phase},
              {"c_rel_phase", r.c_rel_phase}};
}

inline std::string format_json(const std::vector<SweepRecord>& records) {
  auto arr = Json::array();
  for (const auto& r : records) arr.push_back(record_to_json(r));
  return arr.dump(2) + '\n';
}

namespace detail {

inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) fail_input("unterminated quote in CSV line");
  fields.push_back(std::move(cur));
  return fields;
}

inline std::optional<double> parse_optional(std::string_view s) {
  if (s == "undefined") return std::nullopt;
  return parse_double(s);
}

inline SweepRecord validated(SweepRecord r) {
  r.edges = format_edges(parse_edges(r.d, r.edges));  // canonical or throws
  return r;
}

}  // namespace detail

inline std::vector<SweepRecord> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    detail::fail_input("CSV header does not match schema '" + std::string(kCsvHeader) + "'");
  std::vector<SweepRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = detail::split_csv_line(line);
    if (f.size() != 9) detail::fail_input("CSV row has " + std::to_string(f.size()) + " fields, expected 9");
    SweepRecord r;
    r.d = detail::parse_int(f[0], "d");
    r.edges = f[1];
    r.s_p = detail::parse_optional(f[2]);
    r.s_n = detail::parse_optional(f[3]);
    r.var_p = parse_double(f[4]);
    r.var_n = parse_double(f[5]);
    r.half_comm = parse_double(f[6]);
    r.c_l1_phase = parse_double(f[7]);
    r.c_rel_phase = parse_double(f[8]);
    records.push_back(detail::validated(std::move(r)));
  }
  return records;
}

inline std::vector<SweepRecord> parse_json(std::string_view text) {
  Json arr;
  try {
    arr = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    detail::fail_input(std::string("malformed JSON: ") + e.what());
  }
  if (!arr.is_array()) detail::fail_input("results JSON must be an array");
  static constexpr std::array<std::string_view, 9> kKeys{"d",     "edges",     "s_p",        "s_n",        "var_p",
                                                         "var_n", "half_comm", "c_l1_phase", "c_rel_phase"};
  std::vector<SweepRecord> records;
  for (const auto& o : arr) {
    if (!o.is_object() || o.size() != kKeys.size()) detail::fail_input("results JSON record does not match schema");
    for (auto k : kKeys)
      if (!o.contains(std::string(k))) detail::fail_input("results JSON record lacks '" + std::string(k) + "'");
    auto opt = [&](const char* key) -> std::optional<double> {
      if (o[key].is_null()) return std::nullopt;
      return o[key].get<double>();
    };
    try {
      SweepRecord r;
      r.d = o["d"].get<int>();
      r.edges = o["edges"].get<std::string>();
      r.s_p = opt("s_p");
      r.s_n = opt("s_n");
      r.var_p = o["var_p"].get<double>();
      r.var_n = o["var_n"].get<double>();
      r.half_comm = o["half_comm"].get<double>();
      r.c_l1_phase = o["c_l1_phase"].get<double>();
      r.c_rel_phase = o["c_rel_phase"].get<double>();
      records.push_back(detail::validated(std::move(r)));
    } catch (const nlohmann::json::exception& e) {
      detail::fail_input(std::string("results JSON type mismatch: ") + e.what());
    }
  }
  return records;
}

inline std::string format_results(const std::vector<SweepRecord>& records, ResultFormat format) {
  return format == ResultFormat::Csv ? format_csv(records) : format_json(records);
}

inline void write_results(const std::vector<SweepRecord>& records, const std::filesystem::path& path,
                          ResultFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << format_results(records, format);
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

/// Reads either format; JSON is recognized by a leading '['.
inline std::vector<SweepRecord> read_results(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') return parse_json(text);
  return parse_csv(text);
}

// ---------------------------------------------------------------------------
// cache

/// SHA-256 (hex) of the library version, the sweep descriptor and the metric list.
inline std::string cache_key(const Family& family, const std::vector<Metric>& metrics,
                             const SweepOptions& options = {}) {
  std::string material =
      std::string("hyperstate/") + HYPERSTATE_VERSION + '|' + sweep_descriptor(family, options) + '|';
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    if (i) material += ',';
    material += to_string(metrics[i]);
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(material.data(), material.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 0xF];
  }
  return hex;
}

/// Explicit directory if given, else $HYPERSTATE_CACHE, else none.
inline std::optional<std::filesystem::path> resolve_cache_dir(std::optional<std::filesystem::path> override_dir) {
  if (override_dir && !override_dir->empty()) return override_dir;
  if (const char* env = std::getenv("HYPERSTATE_CACHE"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

/// sweep_family with records stored under <cache_dir>/<cache_key>.csv.
inline SweepResult sweep_family_cached(const Family& family, const std::vector<Metric>& metrics,
                                       const SweepOptions& options,
                                       const std::optional<std::filesystem::path>& cache_dir,
                                       bool* cache_hit = nullptr) {
  if (cache_hit) *cache_hit = false;
  if (!cache_dir) return sweep_family(family, metrics, options);
  const auto file = *cache_dir / (cache_key(family, metrics, options) + ".csv");
  if (std::filesystem::exists(file)) {
    auto records = read_results(file);
    if (cache_hit) *cache_hit = true;
    auto summary = summarize(sweep_descriptor(family, options), records, metrics);
    return {std::move(records), std::move(summary)};
  }
  auto result = sweep_family(family, metrics, options);
  std::filesystem::create_directories(*cache_dir);
  write_results(result.records, file, ResultFormat::Csv);
  return result;
}

inline Json to_json(const Extremum& e) {
  return Json{{"metric", to_string(e.metric)},  {"defined", e.defined},
              {"min", optional_to_json(e.min)}, {"argmin", e.argmin},
              {"max", optional_to_json(e.max)}, {"argmax", e.argmax}};
}

inline Json to_json(const SweepSummary& s) {
  auto metrics = Json::array();
  for (const auto& e : s.metrics) metrics.push_back(to_json(e));
  return Json{{"family", s.family}, {"count", s.count}, {"metrics", metrics}};
}

}  // namespace hyperstate
