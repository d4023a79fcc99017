#pragma once

// Command implementations for the `valent` executable. Kept in a header so
// the test suite can drive every subcommand with in-memory streams.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "valent/valent.hpp"

namespace valent::cli {

// Exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitMalformed = 2;
inline constexpr int kExitResource = 3;

inline constexpr const char* kBudgetEnv = "VALENT_TIME_BUDGET_MS";

inline const char* kCsvHeader =
    "line,graph6,n,m,connected,bivalent,trivalent,bivalent_certificates,trivalent_certificates,"
    "structure_ok,elapsed_ms,error";

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedGraph6:
    case ErrorCode::LengthMismatch:
    case ErrorCode::InvalidSize:
    case ErrorCode::VertexOutOfRange:
    case ErrorCode::LoopEdge:
    case ErrorCode::DuplicateEdge:
      return kExitMalformed;
    case ErrorCode::TooLarge:
    case ErrorCode::UnsupportedSize:
    case ErrorCode::NoConvergence:
      return kExitResource;
    default:
      return kExitDomain;
  }
}

inline Json envelope() { return Json{{"schema", kSchema}}; }

inline int report_error(std::ostream& out, int code, std::string_view name, std::string_view message) {
  Json j = envelope();
  j["error"] = name;
  j["message"] = message;
  out << j.dump() << "\n";
  return code;
}

inline int report_error(std::ostream& out, const Error& e) {
  return report_error(out, exit_code_for(e.code()), to_string(e.code()), e.what());
}

inline std::optional<std::chrono::milliseconds> budget_from(std::optional<long long> flag) {
  if (flag) return std::chrono::milliseconds(*flag);
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      return std::chrono::milliseconds(std::stoll(env));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- check

inline int cmd_check(const std::string& g6, const std::string& vec, int lambda, std::ostream& out) {
  Graph g;
  Valuation v;
  try {
    g = parse_graph6(g6);
    v = parse_valuation(vec);
    detail::check_length(g, v.size());
  } catch (const Error& e) {
    return report_error(out, kExitMalformed, to_string(e.code()), e.what());
  } catch (const std::invalid_argument& e) {
    return report_error(out, kExitMalformed, "MalformedVector", e.what());
  }
  Json j = envelope();
  if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) {
    j["verified"] = false;
    j["error"] = "ZeroVector";
    out << j.dump() << "\n";
    return kExitDomain;
  }
  const auto bad = first_violation(g, v, lambda);
  j["verified"] = !bad.has_value();
  if (bad) {
    const Vertex i = *bad;
    long long rhs = 0;
    for (Vertex k : g.neighbors(i)) rhs += v[k];
    j["violation"] = Json{{"vertex", i},
                          {"degree", g.degree(i)},
                          {"lhs", static_cast<long long>(g.degree(i) - lambda) * v[i]},
                          {"rhs", rhs}};
  } else {
    j["valence"] = to_string(valence_of(v));
  }
  out << j.dump() << "\n";
  return bad ? kExitDomain : kExitOk;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  std::string graph6;
  int alphabet = 3;
  std::optional<int> lambda;
  bool all = false;
  bool brute = false;
  std::string zero = "auto";
  std::optional<long long> budget_ms;
};

inline SearchOptions to_options(const SearchArgs& a) {
  SearchOptions opt;
  opt.alphabet = a.alphabet == 2 ? Alphabet::Bivalent : Alphabet::Trivalent;
  if (a.lambda) opt.lambda_filter = std::vector<int>{*a.lambda};
  if (!a.all) opt.max_certificates = 1;
  opt.time_budget = budget_from(a.budget_ms);
  opt.zero_eigenvalue = a.zero == "include"   ? ZeroEigenvalue::Include
                        : a.zero == "exclude" ? ZeroEigenvalue::Exclude
                                              : ZeroEigenvalue::Auto;
  return opt;
}

inline int cmd_search(const SearchArgs& a, std::ostream& out) {
  Graph g;
  try {
    g = parse_graph6(a.graph6);
  } catch (const Error& e) {
    return report_error(out, e);
  }
  try {
    const auto opt = to_options(a);
    const auto outcome = a.brute ? brute_force_valent(g, opt) : search_valent(g, opt);
    Json j = envelope();
    j["graph6"] = write_graph6(g);
    j["connected"] = is_connected(g);
    const Json body = to_json(outcome, opt.alphabet);
    for (const auto& [k, val] : body.items()) j[k] = val;
    out << j.dump() << "\n";
    return kExitOk;
  } catch (const Error& e) {
    return report_error(out, e);
  }
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string format = "csv";
  int threads = 0;
  bool first_only = false;
  std::optional<long long> budget_ms;
};

struct ClassifyRecord {
  std::size_t line = 0;
  std::string graph6;
  int n = 0;
  std::size_t m = 0;
  bool connected = false;
  Verdict bivalent = Verdict::Unknown;
  Verdict trivalent = Verdict::Unknown;
  std::vector<Certificate> bivalent_certificates;
  std::vector<Certificate> trivalent_certificates;
  bool structure_ok = true;
  double elapsed_ms = 0.0;
  std::string error;
};

inline ClassifyRecord classify_line(std::size_t line_no, const std::string& line, const ClassifyArgs& a) {
  ClassifyRecord r;
  r.line = line_no;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Graph g = parse_graph6(line);
    r.graph6 = write_graph6(g);
    r.n = g.order();
    r.m = g.size();
    r.connected = is_connected(g);
    SearchOptions opt;
    opt.time_budget = budget_from(a.budget_ms);
    if (a.first_only) opt.max_certificates = 1;
    for (Alphabet alpha : {Alphabet::Bivalent, Alphabet::Trivalent}) {
      opt.alphabet = alpha;
      auto outcome = search_valent(g, opt);
      const Verdict v = !outcome.certificates.empty() ? Verdict::Yes
                        : outcome.exhausted           ? Verdict::No
                                                      : Verdict::Unknown;
      for (const auto& c : outcome.certificates) {
        if (!verify_eigenpair(g, c.valuation, c.lambda)) throw std::logic_error("unverified certificate");
        const bool ok = valence_of(c.valuation) == Valence::Bivalent
                            ? bivalent_structure_check(g, c.valuation).verdict
                            : trivalent_structure_check(g, c.valuation).verdict;
        r.structure_ok = r.structure_ok && ok;
      }
      if (alpha == Alphabet::Bivalent) {
        r.bivalent = v;
        r.bivalent_certificates = std::move(outcome.certificates);
      } else {
        r.trivalent = v;
        r.trivalent_certificates = std::move(outcome.certificates);
      }
    }
  } catch (const Error& e) {
    r.error = e.what();
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::string certificate_list(const std::vector<Certificate>& cs) {
  std::string s;
  for (const auto& c : cs) {
    if (!s.empty()) s += ';';
    s += format_valuation(c.valuation) + "@" + std::to_string(c.lambda);
  }
  return s;
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\";\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

inline void write_record(const ClassifyRecord& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json j = envelope();
    j["line"] = r.line;
    if (!r.error.empty()) {
      j["error"] = r.error;
      out << j.dump() << "\n";
      return;
    }
    Json bc = Json::array(), tc = Json::array();
    for (const auto& c : r.bivalent_certificates) bc.push_back(to_json(c));
    for (const auto& c : r.trivalent_certificates) tc.push_back(to_json(c));
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["m"] = r.m;
    j["connected"] = r.connected;
    j["bivalent"] = to_string(r.bivalent);
    j["trivalent"] = to_string(r.trivalent);
    j["bivalent_certificates"] = bc;
    j["trivalent_certificates"] = tc;
    j["structure_ok"] = r.structure_ok;
    j["elapsed_ms"] = r.elapsed_ms;
    out << j.dump() << "\n";
    return;
  }
  if (!r.error.empty()) {
    out << r.line << ",,,,,,,,,," << "," << csv_quote(r.error) << "\n";
    return;
  }
  std::ostringstream ms;
  ms.setf(std::ios::fixed);
  ms.precision(3);
  ms << r.elapsed_ms;
  out << r.line << ',' << csv_quote(r.graph6) << ',' << r.n << ',' << r.m << ','
      << (r.connected ? "true" : "false") << ',' << to_string(r.bivalent) << ',' << to_string(r.trivalent)
      << ',' << csv_quote(certificate_list(r.bivalent_certificates)) << ','
      << csv_quote(certificate_list(r.trivalent_certificates)) << ',' << (r.structure_ok ? "true" : "false")
      << ',' << ms.str() << ",\n";
}

/// Streams graph6 lines from `in`, classifying them in batches on a pool
/// of worker threads; records are written in input order.
inline int cmd_classify(const ClassifyArgs& a, std::istream& in, std::ostream& out) {
  if (a.format != "csv" && a.format != "json") {
    return report_error(out, kExitMalformed, "InvalidFormat", "format must be csv or json");
  }
  const unsigned workers =
      a.threads > 0 ? static_cast<unsigned>(a.threads) : std::max(1u, std::thread::hardware_concurrency());
  const std::size_t batch = 8 * static_cast<std::size_t>(workers);
  if (a.format == "csv") out << kCsvHeader << "\n";

  std::size_t line_no = 0, records = 0, failures = 0;
  std::vector<std::pair<std::size_t, std::string>> pending;
  auto flush = [&] {
    std::vector<ClassifyRecord> results(pending.size());
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < std::min<std::size_t>(workers, pending.size()); ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < pending.size(); k = next++) {
          results[k] = classify_line(pending[k].first, pending[k].second, a);
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& r : results) {
      write_record(r, a.format, out);
      ++records;
      if (!r.error.empty()) ++failures;
    }
    out.flush();
    pending.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    pending.emplace_back(line_no, line);
    if (pending.size() >= batch) flush();
  }
  if (!pending.empty()) flush();
  return records > 0 && failures == records ? kExitMalformed : kExitOk;
}

// ---------------------------------------------------------------- transform

struct TransformArgs {
  std::string graph6;
  std::string vector;
  int lambda = 0;
  std::string op;
  std::string args;
  std::string dot_path;
};

inline int cmd_transform(const TransformArgs& a, std::ostream& out) {
  EigenGraph in;
  try {
    in.graph = parse_graph6(a.graph6);
    in.values = parse_valuation(a.vector);
    in.lambda = a.lambda;
    detail::check_length(in.graph, in.values.size());
  } catch (const Error& e) {
    return report_error(out, kExitMalformed, to_string(e.code()), e.what());
  } catch (const std::invalid_argument& e) {
    return report_error(out, kExitMalformed, "MalformedVector", e.what());
  }

  std::vector<TransformRecord> records;
  EigenGraph result;
  try {
    auto pair_arg = [&]() {
      const auto p = parse_valuation(a.args);
      if (p.size() != 2) throw std::invalid_argument("expected two vertex ids");
      return std::pair<Vertex, Vertex>{p[0], p[1]};
    };
    auto single = [&](TransformStep step) {
      records.push_back(std::move(step.record));
      result = std::move(step.result);
    };
    if (a.op == "toggle-edge") {
      auto [i, j] = pair_arg();
      single(toggle_equal_edge(in, i, j));
    } else if (a.op == "extend-soft") {
      // "<count>;<u-v,...>"
      const auto semi = a.args.find(';');
      const int count = parse_valuation(a.args.substr(0, semi)).at(0);
      const auto edges = semi == std::string::npos ? EdgeList{} : parse_pairs(a.args.substr(semi + 1));
      single(extend_with_soft(in, count, edges));
    } else if (a.op == "reduce") {
      single(reduce_to_support(in));
    } else if (a.op == "edge-to-soft-square") {
      auto [i, j] = pair_arg();
      single(edge_to_soft_square(in, i, j));
    } else if (a.op == "soft-square-to-edge") {
      auto [k, l] = pair_arg();
      single(soft_square_to_edge(in, k, l));
    } else if (a.op == "add-matching" || a.op == "delete-matching") {
      const bool add = a.op == "add-matching";
      Matching m;
      if (!a.args.empty()) {
        m = parse_pairs(a.args);
      } else {
        auto found = find_alternate_perfect_matching(
            in.graph, in.values, add ? MatchingMode::WithinNonEdges : MatchingMode::WithinEdges);
        if (!found) fail(ErrorCode::MatchingUnavailable, "no alternate perfect matching");
        m = *found;
      }
      single(add ? add_alternate_matching(in, m) : delete_alternate_matching(in, m));
    } else if (a.op == "delete-equal-edges") {
      std::tie(result, records) = delete_all_equal_edges(in);
    } else if (a.op == "to-soft-regular") {
      std::tie(result, records) = to_soft_regular(in);
    } else {
      return report_error(out, kExitMalformed, "UnknownOperation", a.op);
    }
  } catch (const Error& e) {
    return report_error(out, kExitDomain, to_string(e.code()), e.what());
  } catch (const std::invalid_argument& e) {
    return report_error(out, kExitMalformed, "MalformedArguments", e.what());
  } catch (const std::out_of_range& e) {
    return report_error(out, kExitMalformed, "MalformedArguments", e.what());
  }

  if (!verify_eigenpair(result.graph, result.values, result.lambda)) {
    return report_error(out, kExitDomain, "NotACertificate", "transformed triple failed verification");
  }
  if (!a.dot_path.empty()) {
    std::ofstream(a.dot_path) << to_dot(result.graph, result.values, a.op);
  }
  Json recs = Json::array();
  for (const auto& r : records) recs.push_back(to_json(r));
  Json j = envelope();
  j["graph6"] = write_graph6(result.graph);
  j["vector"] = format_valuation(result.values);
  j["lambda"] = result.lambda;
  j["records"] = recs;
  out << j.dump() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::string family;
  std::string params;
  std::string dot_path;
};

inline int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  std::vector<CatalogEntry> entries;
  try {
    const auto p = parse_valuation(a.params);
    auto need = [&](std::size_t k) {
      if (p.size() != k) throw std::invalid_argument("expected " + std::to_string(k) + " parameter(s)");
    };
    if (a.family == "soft-star") {
      need(1);
      entries.push_back(soft_star(p[0]));
    } else if (a.family == "pair") {
      need(2);
      entries.push_back(opposite_pair_family(p[0], p[1]));
    } else if (a.family == "regular-bivalent") {
      need(1);
      entries.push_back(regular_bivalent(p[0]));
    } else if (a.family == "catalog") {
      need(1);
      entries = smallest_trivalent_catalog(p[0]);
    } else {
      return report_error(out, kExitMalformed, "UnknownFamily", a.family);
    }
  } catch (const Error& e) {
    return report_error(out, kExitMalformed, to_string(e.code()), e.what());
  } catch (const std::invalid_argument& e) {
    return report_error(out, kExitMalformed, "MalformedParameters", e.what());
  }
  Json list = Json::array();
  for (const auto& e : entries) list.push_back(to_json(e));
  Json j = envelope();
  j["family"] = a.family;
  j["entries"] = list;
  out << j.dump() << "\n";
  if (!a.dot_path.empty()) {
    std::ofstream dot(a.dot_path);
    for (const auto& e : entries) dot << to_dot(e.graph, e.certificate.valuation, e.name);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- misc

inline int cmd_spectrum(const std::string& g6, std::ostream& out) {
  try {
    const Graph g = parse_graph6(g6);
    const auto s = jacobi_spectrum(laplacian_matrix(g));
    Json j = envelope();
    j["graph6"] = write_graph6(g);
    j["eigenvalues"] = s.eigenvalues;
    j["sweeps"] = s.sweeps;
    out << j.dump() << "\n";
    return kExitOk;
  } catch (const Error& e) {
    return report_error(out, e);
  }
}

inline int cmd_dot(const std::string& g6, const std::string& vec, std::ostream& out) {
  try {
    const Graph g = parse_graph6(g6);
    if (vec.empty()) {
      out << to_dot(g);
    } else {
      out << to_dot(g, parse_valuation(vec));
    }
    return kExitOk;
  } catch (const Error& e) {
    return report_error(out, kExitMalformed, to_string(e.code()), e.what());
  } catch (const std::invalid_argument& e) {
    return report_error(out, kExitMalformed, "MalformedVector", e.what());
  }
}

/// Entry point shared by main() and the tests. `args[0]` is the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bivalent and trivalent Laplacian eigenvector toolkit", "valent"};
  app.require_subcommand(1);

  std::string g6, vec;
  int lambda = 0;
  auto* check = app.add_subcommand("check", "Verify that a vector affords an eigenvalue");
  check->add_option("graph6", g6)->required();
  check->add_option("vector", vec, "comma-separated integers, e.g. 1,0,-1")->required();
  check->add_option("lambda", lambda)->required();

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Search bivalent or trivalent certificates");
  search->add_option("graph6", sa.graph6)->required();
  search->add_option("--alphabet", sa.alphabet, "2 = {-1,+1}, 3 = {-1,0,+1}")->check(CLI::IsMember({2, 3}));
  search->add_option("--lambda", sa.lambda, "restrict to one eigenvalue");
  search->add_flag("--all", sa.all, "report every certificate instead of the first");
  search->add_flag("--brute-force", sa.brute, "use the exhaustive oracle");
  search->add_option("--zero", sa.zero, "lambda = 0 policy")->check(CLI::IsMember({"auto", "include", "exclude"}));
  search->add_option("--budget-ms", sa.budget_ms, std::string("time budget; default from ") + kBudgetEnv);

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Classify graph6 lines read from standard input");
  classify->add_option("--format", ca.format)->check(CLI::IsMember({"csv", "json"}));
  classify->add_option("--threads", ca.threads, "worker threads (default: hardware)");
  classify->add_flag("--first", ca.first_only, "stop each search at the first certificate");
  classify->add_option("--budget-ms", ca.budget_ms, "per-search time budget");

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Apply an eigenvector transformation");
  transform->add_option("graph6", ta.graph6)->required();
  transform->add_option("vector", ta.vector)->required();
  transform->add_option("lambda", ta.lambda)->required();
  transform->add_option("--op", ta.op,
                        "toggle-edge | extend-soft | reduce | edge-to-soft-square | soft-square-to-edge | "
                        "add-matching | delete-matching | delete-equal-edges | to-soft-regular")
      ->required();
  transform->add_option("--args", ta.args, "operation arguments, e.g. 0,1 or 1-4,2-5 or 1;3-1");
  transform->add_option("--dot", ta.dot_path, "write the result as DOT");

  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "Generate catalog witness graphs");
  generate->add_option("--family", ga.family)
      ->required()
      ->check(CLI::IsMember({"soft-star", "pair", "regular-bivalent", "catalog"}));
  generate->add_option("--params", ga.params, "family parameters, e.g. 3 or 2,1")->required();
  generate->add_option("--dot", ga.dot_path, "write the entries as DOT");

  std::string sg6;
  auto* spectrum = app.add_subcommand("spectrum", "Laplacian eigenvalues by Jacobi iteration");
  spectrum->add_option("graph6", sg6)->required();

  std::string dg6, dvec;
  auto* dot = app.add_subcommand("dot", "Render a graph (and optional vector) as DOT");
  dot->add_option("graph6", dg6)->required();
  dot->add_option("vector", dvec);

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  if (*check) return cmd_check(g6, vec, lambda, out);
  if (*search) return cmd_search(sa, out);
  if (*classify) return cmd_classify(ca, in, out);
  if (*transform) return cmd_transform(ta, out);
  if (*generate) return cmd_generate(ga, out);
  if (*spectrum) return cmd_spectrum(sg6, out);
  if (*dot) return cmd_dot(dg6, dvec, out);
  return kExitMalformed;
}

}  // namespace valent::cli
