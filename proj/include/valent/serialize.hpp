#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "valent/catalog.hpp"
#include "valent/characterize.hpp"
#include "valent/graph6.hpp"
#include "valent/search.hpp"
#include "valent/transforms.hpp"

namespace valent {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "valent/1";

/// Parses "1,0,-1". Whitespace around entries is allowed; empty entries are
/// not. Throws std::invalid_argument on malformed text.
inline Valuation parse_valuation(std::string_view text) {
  Valuation out;
  if (text.empty()) throw std::invalid_argument("empty vector literal");
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("bad vector entry '" + std::string(item) + "'");
    }
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

/// "i-j,k-l" pairs, e.g. a matching.
inline std::vector<Edge> parse_pairs(std::string_view text) {
  std::vector<Edge> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(start, end - start);
    const auto dash = item.find('-', 1);
    if (dash == std::string_view::npos) throw std::invalid_argument("bad pair '" + std::string(item) + "'");
    const auto a = parse_valuation(item.substr(0, dash));
    const auto b = parse_valuation(item.substr(dash + 1));
    out.emplace_back(a.at(0), b.at(0));
    start = end + 1;
  }
  return out;
}

inline Json to_json(Edge e) { return Json::array({e.u, e.v}); }

inline Json to_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (Edge e : edges) a.push_back(to_json(e));
  return a;
}

inline Json to_json(const Certificate& c) {
  return Json{{"vector", format_valuation(c.valuation)}, {"lambda", c.lambda}};
}

inline Json to_json(const TransformRecord& r) {
  Json p = Json::object();
  switch (r.kind) {
    case TransformKind::ToggleEqualEdge:
      p["edge"] = to_json(r.edges.at(0));
      p["action"] = r.added ? "added" : "deleted";
      break;
    case TransformKind::SoftExtension:
      p["new_vertices"] = r.new_vertices;
      p["edges"] = to_json(r.edges);
      break;
    case TransformKind::SoftReduction:
      p["kept"] = r.vertices;
      break;
    case TransformKind::EdgeToSoftSquare:
    case TransformKind::SoftSquareToEdge:
      p["edge"] = to_json(r.edges.at(0));
      p["soft"] = r.vertices;
      break;
    case TransformKind::AddAlternateMatching:
    case TransformKind::DeleteAlternateMatching:
      p["matching"] = to_json(r.edges);
      break;
  }
  return Json{{"kind", to_string(r.kind)},
              {"parameters", p},
              {"lambda_before", r.lambda_before},
              {"lambda_after", r.lambda_after}};
}

inline Json to_json(const SearchOutcome& o, Alphabet alphabet) {
  Json certs = Json::array();
  for (const auto& c : o.certificates) certs.push_back(to_json(c));
  return Json{{"alphabet", to_string(alphabet)},
              {"exhausted", o.exhausted},
              {"certificates", certs},
              {"stats", {{"nodes", o.stats.nodes}, {"prunes", o.stats.prunes}, {"elapsed_ms", o.stats.elapsed_ms}}}};
}

inline Json to_json(const StructureReport& r) {
  Json narrative = Json::array();
  for (const auto& c : r.narrative) {
    narrative.push_back(Json{{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return Json{{"verdict", r.verdict},
              {"reduced_graph6", write_graph6(r.reduced_graph)},
              {"reduced_vector", format_valuation(r.reduced_valuation)},
              {"k_partite_ok", r.is_k_partite_ok},
              {"regularity", r.regularity ? Json(*r.regularity) : Json(nullptr)},
              {"soft_balance_ok", r.soft_balance_ok},
              {"eigenvalue_formula_ok", r.eigenvalue_formula_ok},
              {"lambda", r.lambda ? Json(*r.lambda) : Json(nullptr)},
              {"narrative", narrative}};
}

inline Json to_json(const CatalogEntry& e) {
  Json params{{"d", e.split.d}, {"d_tilde", e.split.d_tilde}, {"s", e.split.s}};
  if (e.copies) params["copies"] = *e.copies;
  if (e.matchings) params["matchings"] = *e.matchings;
  Json history = Json::array();
  for (const auto& r : e.history) history.push_back(to_json(r));
  return Json{{"name", e.name},
              {"graph6", write_graph6(e.graph)},
              {"n", e.graph.order()},
              {"vector", format_valuation(e.certificate.valuation)},
              {"lambda", e.certificate.lambda},
              {"parameters", params},
              {"history", history}};
}

}  // namespace valent
