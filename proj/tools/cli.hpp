#pragma once

// Command-line front end. `run` never exits the process: it returns
//   0  success
//   1  user error (flags, edge lists, I/O)
//   2  computation guard exceeded
// and on failure writes a single line `error[<kind>]: <reason>` to err.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperstate/hyperstate.hpp"

namespace hyperstate::cli {

enum class Format { Table, Csv, Json };

struct Flags {
  int d = 0;
  std::string edges;
  int k = 0;
  std::string family;
  std::vector<std::string> metrics;
  std::string basis = "number";
  int n = 0;
  bool exact = false;
  std::string out;
  std::string format = "table";
  unsigned threads = 1;
  std::string cache_dir;
  bool check_all = false;
  bool squeezed_only = false;
  bool no_connected_filter = false;
  bool connected_filter = false;
  bool extended = false;
  std::string plot_dir;
};

namespace detail {

inline std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

inline std::string num(const std::optional<double>& v) {
  return v ? num(*v) : "undefined";
}

/// Left-aligned columns separated by two spaces.
inline std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out += line + '\n';
  }
  return out;
}

inline std::string one_line(std::string s) {
  for (auto& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return Format::Table;
}

inline Hypergraph graph_of(const Flags& f) {
  return parse_edges(f.d, f.edges);
}

inline std::string render_state(const Flags& f) {
  const auto g = graph_of(f);
  const auto psi = hypergraph_state(g);
  switch (parse_format(f.format)) {
    case Format::Json: {
      Json j{{"d", f.d}, {"edges", format_edges(g)}, {"amplitudes", state_to_json(psi)}};
      return j.dump(2) + '\n';
    }
    case Format::Csv: {
      std::string s = "n,re,im\n";
      for (std::size_t i = 0; i < psi.dim(); ++i)
        s += std::to_string(i) + ',' + format_double(psi[i].real()) + ',' + format_double(psi[i].imag()) + '\n';
      return s;
    }
    case Format::Table: break;
  }
  std::vector<std::vector<std::string>> rows{{"n", "bits", "amplitude"}};
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    std::string bits;
    for (int v = 0; v < f.d; ++v) bits += (i >> (f.d - 1 - v) & 1) ? '1' : '0';
    rows.push_back({std::to_string(i), bits, num(psi[i].real())});
  }
  return table(rows);
}

inline std::string render_circuit(const Flags& f) {
  const auto c = emit_circuit(graph_of(f));
  if (parse_format(f.format) == Format::Json) {
    auto gates = Json::array();
    for (const auto& g : c.gates)
      gates.push_back(Json{{"gate", g.kind == GateKind::H ? "H" : "CZ"}, {"targets", g.targets}});
    return Json{{"qubits", c.qubits}, {"gates", gates}}.dump(2) + '\n';
  }
  return format_circuit(c);
}

inline std::string render_operators(const Flags& f) {
  const auto psi = hypergraph_state(graph_of(f));
  const std::size_t dim = psi.dim();
  const auto fmt = parse_format(f.format);
  if (!f.check_all) {
    if (dim > kMaxDenseDim)
      hyperstate::detail::fail_guard("dense structure checks limited to dim <= " + std::to_string(kMaxDenseDim));
    const auto p = verify_structure(phase_operator_dense(dim));
    const auto c = verify_structure(np_commutator_dense(dim));
    if (fmt == Format::Json) return Json{{"phase_operator", to_json(p)}, {"np_commutator", to_json(c)}}.dump(2) + '\n';
    std::vector<std::vector<std::string>> rows{{"operator", "property", "holds", "max_deviation"}};
    auto add = [&](const char* op, const char* name, const PropertyCheck& pc) {
      rows.push_back({op, name, pc.holds ? "yes" : "no", num(pc.max_deviation)});
    };
    add("P", "hermitian", p.hermitian);
    add("P", "circulant", p.circulant);
    add("[N,P]", "skew_hermitian", c.skew_hermitian);
    add("[N,P]", "toeplitz", c.toeplitz);
    add("[N,P]", "zero_diagonal", c.zero_diagonal);
    return table(rows);
  }
  if (dim > kMaxDenseDim)
    hyperstate::detail::fail_guard("dense structure checks limited to dim <= " + std::to_string(kMaxDenseDim));
  const auto r = operator_suite(psi);
  if (fmt == Format::Json) return to_json(r).dump(2) + '\n';
  std::vector<std::vector<std::string>> rows{{"check", "holds", "value"}};
  auto add = [&](std::string name, const PropertyCheck& pc) {
    rows.push_back({std::move(name), pc.holds ? "yes" : "no", num(pc.max_deviation)});
  };
  add("P hermitian", r.phase.hermitian);
  add("P circulant", r.phase.circulant);
  add("P equals sum theta_m |theta_m><theta_m|", r.spectral_form);
  add("[N,P] skew_hermitian", r.commutator.skew_hermitian);
  add("[N,P] toeplitz", r.commutator.toeplitz);
  add("[N,P] zero_diagonal", r.commutator.zero_diagonal);
  add("transform agrees with dense P", r.transform);
  if (r.bounds) {
    const auto& b = *r.bounds;
    rows.push_back({"|<[N,P]>| <= spectral radius", b.within_spectral_radius ? "yes" : "no",
                    num(b.abs_expectation) + " <= " + num(b.spectral_radius)});
    rows.push_back({"spectrum within row-sum disc reach", b.spectrum_within_disc_reach ? "yes" : "no",
                    num(b.spectral_radius) + " <= " + num(b.disc_reach)});
    rows.push_back({"spectrum within 2pi(D-1)^2/(4D^2)", b.spectrum_within_closed_form ? "yes" : "no",
                    num(b.spectral_radius) + " <= " + num(b.closed_form_bound)});
  }
  return table(rows);
}

inline const std::vector<std::string>& squeeze_fields() {
  static const std::vector<std::string> f{"d",     "edges",     "mean_n", "var_n", "mean_p",
                                          "var_p", "half_comm", "s_n",    "s_p"};
  return f;
}

inline std::string render_squeeze(const Flags& f) {
  const auto r = squeeze_report(graph_of(f));
  switch (parse_format(f.format)) {
    case Format::Json: return to_json(r).dump(2) + '\n';
    case Format::Csv: {
      std::string s;
      for (std::size_t i = 0; i < squeeze_fields().size(); ++i) s += (i ? "," : "") + squeeze_fields()[i];
      auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string("undefined"); };
      s += '\n' + std::to_string(r.d) + ",\"" + r.edges + "\"," + format_double(r.mean_n) + ',' +
           format_double(r.var_n) + ',' + format_double(r.mean_p) + ',' + format_double(r.var_p) + ',' +
           format_double(r.half_comm) + ',' + opt(r.s_n) + ',' + opt(r.s_p) + '\n';
      return s;
    }
    case Format::Table: break;
  }
  return table({{"d", std::to_string(r.d)},
                {"edges", r.edges},
                {"mean_n", num(r.mean_n)},
                {"var_n", num(r.var_n)},
                {"mean_p", num(r.mean_p)},
                {"var_p", num(r.var_p)},
                {"half_comm", num(r.half_comm)},
                {"s_n", num(r.s_n)},
                {"s_p", num(r.s_p)}});
}

inline std::string render_sweep(const Flags& f) {
  const auto family = parse_family(f.family, f.d, f.k);
  std::vector<Metric> metrics;
  for (const auto& m : f.metrics) metrics.push_back(parse_metric(m));
  if (metrics.empty()) metrics.push_back(Metric::SP);
  SweepOptions o;
  if (f.no_connected_filter) o.connected_only = false;
  if (f.connected_filter) o.connected_only = true;
  o.squeezed_only = f.squeezed_only;
  o.threads = f.threads;
  const auto dir =
      resolve_cache_dir(f.cache_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(f.cache_dir));
  const auto res = sweep_family_cached(family, metrics, o, dir);
  switch (parse_format(f.format)) {
    case Format::Csv: return format_csv(res.records);
    case Format::Json: return format_json(res.records);
    case Format::Table: break;
  }
  std::string s = "family  " + res.summary.family + "\ncount   " + std::to_string(res.summary.count) + "\n\n";
  std::vector<std::vector<std::string>> rows{{"metric", "min", "argmin", "max", "argmax"}};
  for (const auto& e : res.summary.metrics) {
    auto join = [](const std::vector<std::string>& v) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " | " : "") + v[i];
      return out;
    };
    rows.push_back({std::string(to_string(e.metric)), num(e.min), join(e.argmin), num(e.max), join(e.argmax)});
  }
  return s + table(rows);
}

inline std::string render_agarwal_tara(const Flags& f) {
  const auto r = agarwal_tara(f.d, f.n);
  const auto comparisons = agarwal_tara_comparisons(f.d, f.n);
  if (parse_format(f.format) == Format::Json) {
    auto value = [&](const Rational& q) {
      return f.exact ? Json{{"exact", to_fraction_string(q)}, {"value", to_double(q)}} : Json(to_double(q));
    };
    auto discrepancies = Json::array();
    for (const auto& c : comparisons)
      if (c.verdict == Verdict::Discrepancy || c.verdict == Verdict::Fail) discrepancies.push_back(to_json(c));
    return Json{{"d", r.d},
                {"n", r.n},
                {"det_m", value(r.det_m)},
                {"det_mu", value(r.det_mu)},
                {"a_n", value(r.a_n)},
                {"paper_discrepancies", discrepancies}}
               .dump(2) +
           '\n';
  }
  std::vector<std::vector<std::string>> rows;
  auto add = [&](const char* name, const Rational& q) {
    if (f.exact)
      rows.push_back({name, to_fraction_string(q), num(to_double(q))});
    else
      rows.push_back({name, num(to_double(q))});
  };
  rows.push_back({"d", std::to_string(r.d)});
  rows.push_back({"n", std::to_string(r.n)});
  add("det_m", r.det_m);
  add("det_mu", r.det_mu);
  add("a_n", r.a_n);
  std::string s = table(rows);
  for (const auto& c : comparisons)
    if (c.verdict == Verdict::Discrepancy || c.verdict == Verdict::Fail)
      s += "discrepancy  " + c.quantity + ": reference " + num(c.reference) + ", computed " + num(c.computed) +
           (c.note.empty() ? "" : " (" + c.note + ")") + '\n';
  return s;
}

inline std::string render_coherence(const Flags& f) {
  const auto r = coherence_report(graph_of(f), parse_basis(f.basis));
  switch (parse_format(f.format)) {
    case Format::Json: return to_json(r).dump(2) + '\n';
    case Format::Csv:
      return "d,edges,basis,c_l1,c_rel_ent\n" + std::to_string(r.d) + ",\"" + r.edges + "\"," +
             std::string(to_string(r.basis)) + ',' + format_double(r.c_l1) + ',' + format_double(r.c_rel_ent) + '\n';
    case Format::Table: break;
  }
  return table({{"d", std::to_string(r.d)},
                {"edges", r.edges},
                {"basis", std::string(to_string(r.basis))},
                {"c_l1", num(r.c_l1)},
                {"c_rel_ent", num(r.c_rel_ent)}});
}

inline std::string render_reproduce(const Flags& f) {
  ReproduceOptions o;
  o.threads = f.threads;
  o.extended = f.extended;
  const auto r = reproduce(o);
  if (!f.plot_dir.empty()) emit_plot_data(r.series, f.plot_dir);
  const auto fmt = parse_format(f.format);
  if (fmt == Format::Json) return to_json(r).dump(2) + '\n';
  if (fmt == Format::Csv) {
    std::string s = "section,quantity,reference,computed,verdict,note\n";
    for (const auto& c : r.rows)
      s += '"' + c.section + "\",\"" + c.quantity + "\"," + (c.reference ? format_double(*c.reference) : "") + ',' +
           (c.computed ? format_double(*c.computed) : "undefined") + ',' + std::string(to_string(c.verdict)) + ",\"" +
           c.note + "\"\n";
    return s;
  }
  std::vector<std::vector<std::string>> rows{{"verdict", "section", "quantity", "reference", "computed", "note"}};
  for (const auto& c : r.rows)
    rows.push_back({std::string(to_string(c.verdict)), c.section, c.quantity, c.reference ? num(*c.reference) : "-",
                    num(c.computed), c.note});
  return table(rows) + "\npass " + std::to_string(r.count(Verdict::Pass)) + "  fail " +
         std::to_string(r.count(Verdict::Fail)) + "  discrepancy " + std::to_string(r.count(Verdict::Discrepancy)) +
         "  info " + std::to_string(r.count(Verdict::Info)) + '\n';
}

inline void emit(const Flags& f, const std::string& payload, std::ostream& out) {
  if (f.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(f.out, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + f.out + "' for writing");
  file << payload;
  if (!file) throw std::runtime_error("write to '" + f.out + "' failed");
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonclassicality of quantum hypergraph states", "hyperstate"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", HYPERSTATE_VERSION);
  Flags f;

  const auto formats = CLI::IsMember({"table", "csv", "json"});
  auto add_d = [&](CLI::App* sub, int max_d) {
    sub->add_option("--d", f.d, "number of vertices")->required()->check(CLI::Range(1, max_d));
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", f.out, "write output to this file instead of stdout");
    sub->add_option("--format", f.format, "table|csv|json")->check(formats);
  };
  auto add_edges = [&](CLI::App* sub) {
    sub->add_option("--edges", f.edges, "edge list such as \"0,3;0,2,3\" (empty: no edges)");
  };

  auto* state = app.add_subcommand("state", "amplitudes of a hypergraph state");
  add_d(state, kMaxStateVertices);
  add_edges(state);
  add_common(state);

  auto* circuit = app.add_subcommand("circuit", "H / multi-controlled-Z circuit preparing the state");
  add_d(circuit, kMaxVertices);
  add_edges(circuit);
  add_common(circuit);

  auto* operators = app.add_subcommand("operators", "structural checks on P and [N,P] in dimension 2^d");
  add_d(operators, kMaxStateVertices);
  add_edges(operators);
  operators->add_flag("--check-all", f.check_all, "add spectral form, transform agreement and eigenvalue bounds");
  add_common(operators);

  auto* squeeze = app.add_subcommand("squeeze", "number and phase squeezing of one state");
  add_d(squeeze, kMaxStateVertices);
  add_edges(squeeze);
  add_common(squeeze);

  auto* sweep = app.add_subcommand("sweep", "evaluate every member of a hypergraph family");
  add_d(sweep, kMaxStateVertices);
  sweep->add_option("--family", f.family, "dminus1|k-uniform|complete-k|single-full")
      ->required()
      ->check(CLI::IsMember({"dminus1", "k-uniform", "complete-k", "single-full"}));
  sweep->add_option("--k", f.k, "edge size for k-uniform and complete-k")->check(CLI::Range(1, kMaxVertices));
  sweep->add_option("--metric", f.metrics, "s_p|s_n|var_p|var_n|half_comm|c_l1_phase|c_rel_phase (repeatable)")
      ->delimiter(',')
      ->check(CLI::IsMember({"s_p", "s_n", "var_p", "var_n", "half_comm", "c_l1_phase", "c_rel_phase"}));
  sweep->add_option("--threads", f.threads, "worker threads (0: all cores)");
  sweep->add_option("--cache-dir", f.cache_dir, "result cache directory (default: $HYPERSTATE_CACHE)");
  sweep->add_flag("--squeezed-only", f.squeezed_only, "keep only configurations with s_p < 0");
  auto* noconn = sweep->add_flag("--no-connected-filter", f.no_connected_filter, "include disconnected configurations");
  sweep->add_flag("--connected-filter", f.connected_filter, "keep only connected configurations")->excludes(noconn);
  add_common(sweep);

  auto* at = app.add_subcommand("agarwal-tara", "Agarwal-Tara determinant ratio A_n");
  add_d(at, kMaxMomentVertices);
  at->add_option("--n", f.n, "order n")->required()->check(CLI::Range(1, 64));
  at->add_flag("--exact", f.exact, "print exact fractions");
  add_common(at);

  auto* coherence = app.add_subcommand("coherence", "l1 and relative-entropy coherence");
  add_d(coherence, kMaxStateVertices);
  add_edges(coherence);
  coherence->add_option("--basis", f.basis, "number|phase")->check(CLI::IsMember({"number", "phase"}));
  add_common(coherence);

  auto* repro = app.add_subcommand("reproduce", "recompute every reference value and grade it");
  repro->add_option("--threads", f.threads, "worker threads for the sweeps (0: all cores)");
  repro->add_flag("--extended", f.extended, "also run the larger ungraded sweeps");
  repro->add_option("--plot-dir", f.plot_dir, "write one two-column .dat file per series here");
  add_common(repro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << HYPERSTATE_VERSION << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << detail::one_line(e.what()) << '\n';
    return 1;
  }

  try {
    std::string payload;
    if (state->parsed())
      payload = detail::render_state(f);
    else if (circuit->parsed())
      payload = detail::render_circuit(f);
    else if (operators->parsed())
      payload = detail::render_operators(f);
    else if (squeeze->parsed())
      payload = detail::render_squeeze(f);
    else if (sweep->parsed())
      payload = detail::render_sweep(f);
    else if (at->parsed())
      payload = detail::render_agarwal_tara(f);
    else if (coherence->parsed())
      payload = detail::render_coherence(f);
    else if (repro->parsed())
      payload = detail::render_reproduce(f);
    detail::emit(f, payload, out);
  } catch (const guard_error& e) {
    err << "error[guard]: " << detail::one_line(e.what()) << '\n';
    return 2;
  } catch (const input_error& e) {
    err << "error[input]: " << detail::one_line(e.what()) << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error[io]: " << detail::one_line(e.what()) << '\n';
    return 1;
  }
  return 0;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hyperstate"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hyperstate::cli
