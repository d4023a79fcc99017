#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "valent/graph.hpp"
#include "valent/laplacian.hpp"
#include "valent/transforms.hpp"

namespace valent {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of checking a (graph, vector) pair against the bivalent or
/// trivalent structure conditions. `narrative` lists the sub-checks in the order they ran.
struct StructureReport {
  Graph reduced_graph;
  Valuation reduced_valuation;
  bool is_k_partite_ok = false;
  std::optional<int> regularity;
  bool soft_balance_ok = true;
  bool eigenvalue_formula_ok = false;
  std::optional<int> lambda;
  bool verdict = false;
  std::vector<CheckResult> narrative;
};

/// Common degree of the support vertices, if they all share one.
inline std::optional<int> is_soft_regular(const Graph& g, std::span<const int> v) {
  detail::check_length(g, v.size());
  if (detail::all_zero(v)) fail(ErrorCode::ZeroVector, "soft regularity needs a nonzero support");
  std::optional<int> d;
  for (Vertex i = 0; i < g.order(); ++i) {
    if (v[i] == 0) continue;
    if (!d) {
      d = g.degree(i);
    } else if (*d != g.degree(i)) {
      return std::nullopt;
    }
  }
  return d;
}

/// Edges of `g` joining equal values.
inline EdgeList equal_edges(const Graph& g, std::span<const int> v) {
  detail::check_length(g, v.size());
  EdgeList out;
  for (Edge e : g.edges()) {
    if (v[e.u] == v[e.v]) out.push_back(e);
  }
  return out;
}

/// `g` without its equal-valued edges.
inline Graph delete_all_equal_edges(const Graph& g, std::span<const int> v) {
  if (!in_trivalent_alphabet(v)) fail(ErrorCode::NotTrivalentAlphabet, format_valuation(v));
  const auto eq = equal_edges(g, v);
  return edit(g, 0, {}, eq);
}

/// Certificate-carrying form: one toggle record per deleted edge.
inline std::pair<EigenGraph, std::vector<TransformRecord>> delete_all_equal_edges(const EigenGraph& in) {
  if (!in_trivalent_alphabet(in.values)) fail(ErrorCode::NotTrivalentAlphabet, format_valuation(in.values));
  EigenGraph cur = in;
  std::vector<TransformRecord> records;
  for (Edge e : equal_edges(in.graph, in.values)) {
    auto step = toggle_equal_edge(cur, e.u, e.v);
    cur = std::move(step.result);
    records.push_back(std::move(step.record));
  }
  return {std::move(cur), std::move(records)};
}

/// Bivalent structure: after deleting equal edges the graph must be
/// d-regular and bipartite between the +1 and -1 classes; then v affords
/// lambda = 2d.
inline StructureReport bivalent_structure_check(const Graph& g, std::span<const int> v) {
  detail::check_length(g, v.size());
  if (v.empty() || !in_bivalent_alphabet(v)) fail(ErrorCode::NotBivalentAlphabet, format_valuation(v));
  StructureReport rep;
  rep.reduced_graph = delete_all_equal_edges(g, v);
  rep.reduced_valuation.assign(v.begin(), v.end());
  rep.narrative.push_back({"delete_equal_edges", true,
                           std::to_string(g.size() - rep.reduced_graph.size()) + " edges removed"});

  const Graph& r = rep.reduced_graph;
  const auto reduced_edges = r.edges();
  rep.is_k_partite_ok = std::all_of(reduced_edges.begin(), reduced_edges.end(),
                                    [&](Edge e) { return v[e.u] == -v[e.v]; });
  rep.narrative.push_back({"bipartite_by_value", rep.is_k_partite_ok, "parts {v=+1}, {v=-1}"});

  if (is_regular(r)) rep.regularity = r.max_degree();
  rep.narrative.push_back({"regular", rep.regularity.has_value(),
                           rep.regularity ? "d=" + std::to_string(*rep.regularity)
                                          : "degrees " + std::to_string(r.min_degree()) + ".." +
                                                std::to_string(r.max_degree())});

  if (rep.is_k_partite_ok && rep.regularity) {
    rep.lambda = 2 * *rep.regularity;
    const auto inferred = infer_eigenvalue(g, v);
    rep.eigenvalue_formula_ok = inferred == rep.lambda;
    rep.narrative.push_back({"eigenvalue_2d", rep.eigenvalue_formula_ok,
                             "lambda=2d=" + std::to_string(*rep.lambda) + ", inferred " +
                                 (inferred ? std::to_string(*inferred) : std::string("none"))});
  } else {
    rep.narrative.push_back({"eigenvalue_2d", false, "skipped: reduction not regular bipartite"});
  }
  rep.verdict = rep.is_k_partite_ok && rep.regularity.has_value() && rep.eigenvalue_formula_ok;
  return rep;
}

/// Trivalent structure: delete equal edges, drop soft vertices with no
/// support neighbor, then check (a) the value classes are independent,
/// (b) every soft vertex sees as many +1 as -1 neighbors, and (c)
/// lambda = 2 d_j - s_j takes one common value over the support.
inline StructureReport trivalent_structure_check(const Graph& g, std::span<const int> v) {
  detail::check_length(g, v.size());
  if (!in_trivalent_alphabet(v)) fail(ErrorCode::NotTrivalentAlphabet, format_valuation(v));
  if (detail::all_zero(v)) fail(ErrorCode::ZeroVector, "trivalent check needs a nonzero support");
  StructureReport rep;
  const Graph stripped = delete_all_equal_edges(g, v);
  rep.narrative.push_back(
      {"delete_equal_edges", true, std::to_string(g.size() - stripped.size()) + " edges removed"});
  auto red = reduce_to_support(stripped, v);
  rep.narrative.push_back({"drop_detached_soft", true,
                           std::to_string(g.order() - red.graph.order()) + " vertices removed"});
  rep.reduced_graph = std::move(red.graph);
  rep.reduced_valuation = std::move(red.values);
  const Graph& r = rep.reduced_graph;
  const Valuation& w = rep.reduced_valuation;

  rep.is_k_partite_ok = true;
  for (Edge e : r.edges()) rep.is_k_partite_ok = rep.is_k_partite_ok && w[e.u] != w[e.v];
  rep.narrative.push_back({"tripartite_by_value", rep.is_k_partite_ok, "parts {+1}, {-1}, {0}"});

  std::string unbalanced;
  for (Vertex j = 0; j < r.order(); ++j) {
    if (w[j] != 0) continue;
    int balance = 0;
    for (Vertex i : r.neighbors(j)) balance += w[i];
    if (balance != 0) {
      rep.soft_balance_ok = false;
      if (unbalanced.empty()) unbalanced = "soft vertex " + std::to_string(red.kept[j]) + " unbalanced";
    }
  }
  rep.narrative.push_back({"soft_balance", rep.soft_balance_ok, unbalanced});

  std::set<int> lambdas;
  for (Vertex j = 0; j < r.order(); ++j) {
    if (w[j] == 0) continue;
    const auto p = soft_profile(r, w, j);
    lambdas.insert(2 * p.d - p.s);
  }
  rep.eigenvalue_formula_ok = lambdas.size() == 1;
  if (rep.eigenvalue_formula_ok) rep.lambda = *lambdas.begin();
  std::string seen;
  for (int x : lambdas) seen += (seen.empty() ? "" : ",") + std::to_string(x);
  rep.narrative.push_back({"common_lambda", rep.eigenvalue_formula_ok, "2d_j - s_j in {" + seen + "}"});

  rep.regularity = is_soft_regular(r, w);
  rep.verdict = rep.is_k_partite_ok && rep.soft_balance_ok && rep.eigenvalue_formula_ok;
  return rep;
}

/// Normalizes a trivalent certificate to a soft regular one with common
/// degree lambda: equal edges between support vertices are deleted, then
/// every edge between opposite values is replaced by a soft square.
inline std::pair<EigenGraph, std::vector<TransformRecord>> to_soft_regular(const EigenGraph& in) {
  if (!in_trivalent_alphabet(in.values)) fail(ErrorCode::NotTrivalentAlphabet, format_valuation(in.values));
  detail::require_certificate(in);
  EigenGraph cur = in;
  std::vector<TransformRecord> records;
  for (Edge e : in.graph.edges()) {
    if (in.values[e.u] != 0 && in.values[e.u] == in.values[e.v]) {
      auto step = toggle_equal_edge(cur, e.u, e.v);
      cur = std::move(step.result);
      records.push_back(std::move(step.record));
    }
  }
  for (Edge e : in.graph.edges()) {
    if (in.values[e.u] != 0 && in.values[e.u] == -in.values[e.v]) {
      auto step = edge_to_soft_square(cur, e.u, e.v);
      cur = std::move(step.result);
      records.push_back(std::move(step.record));
    }
  }
  if (is_soft_regular(cur.graph, cur.values) != cur.lambda) {
    throw std::logic_error("to_soft_regular did not reach common degree lambda");
  }
  return {std::move(cur), std::move(records)};
}

/// Perfect matching of a tree by forced leaf moves: a leaf can only be
/// matched to its one neighbor, so take that edge, delete both ends and
/// repeat. Fails when a vertex is left without partners.
inline std::optional<Matching> tree_perfect_matching(const Graph& t) {
  if (!is_tree(t)) fail(ErrorCode::NotATree, "input is not a tree");
  const int n = t.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  std::set<Vertex> leaves;
  for (Vertex i = 0; i < n; ++i) {
    deg[i] = t.degree(i);
    if (deg[i] == 1) leaves.insert(i);
  }
  Matching m;
  int removed = 0;
  while (removed < n) {
    if (leaves.empty()) return std::nullopt;  // isolated vertex remains
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    if (gone[leaf]) continue;
    Vertex partner = -1;
    for (Vertex y : t.neighbors(leaf)) {
      if (!gone[y]) partner = y;
    }
    if (partner < 0) return std::nullopt;
    m.emplace_back(leaf, partner);
    gone[leaf] = gone[partner] = 1;
    removed += 2;
    leaves.erase(partner);
    for (Vertex x : {leaf, partner}) {
      for (Vertex y : t.neighbors(x)) {
        if (gone[y]) continue;
        if (--deg[y] == 1) leaves.insert(y);
        if (deg[y] == 0) return std::nullopt;
      }
    }
  }
  std::sort(m.begin(), m.end());
  return m;
}

/// Bivalent certificate of a tree from a perfect matching: +1 at vertex 0,
/// sign flipped across matching edges and kept across the others.
inline Certificate bivalent_from_matching(const Graph& t, const Matching& m) {
  if (!is_tree(t)) fail(ErrorCode::NotATree, "input is not a tree");
  const int n = t.order();
  std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
  for (Edge e : m) {
    if (e.u < 0 || e.v >= n || !t.adjacent(e.u, e.v) || mate[e.u] >= 0 || mate[e.v] >= 0) {
      fail(ErrorCode::NotPerfectMatching, detail::pair_text(e.u, e.v));
    }
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  if (std::find(mate.begin(), mate.end(), -1) != mate.end()) {
    fail(ErrorCode::NotPerfectMatching, "matching leaves a vertex uncovered");
  }
  Valuation v(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  v[0] = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : t.neighbors(x)) {
      if (v[y] != 0) continue;
      v[y] = mate[x] == y ? -v[x] : v[x];
      stack.push_back(y);
    }
  }
  if (!verify_eigenpair(t, v, 2)) throw std::logic_error("matching construction is not a certificate");
  return Certificate{normalize_sign(std::move(v)), 2};
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline constexpr int kGeneralMatchingBound = 16;

/// Perfect matching of a small general graph by exhaustive branching on the
/// lowest unmatched vertex. Intended for n <= 16.
inline std::optional<Matching> perfect_matching(const Graph& g) {
  if (g.order() > kGeneralMatchingBound) {
    fail(ErrorCode::TooLarge, "general perfect matching supports n <= " +
                                  std::to_string(kGeneralMatchingBound));
  }
  if (g.order() % 2 != 0) return std::nullopt;
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  Matching m;
  auto rec = [&](auto&& self) -> bool {
    auto it = std::find(used.begin(), used.end(), 0);
    if (it == used.end()) return true;
    const auto x = static_cast<Vertex>(it - used.begin());
    used[x] = 1;
    for (Vertex y : g.neighbors(x)) {
      if (used[y]) continue;
      used[y] = 1;
      m.emplace_back(x, y);
      if (self(self)) return true;
      m.pop_back();
      used[y] = 0;
    }
    used[x] = 0;
    return false;
  };
  if (!rec(rec)) return std::nullopt;
  return m;
}

}  // namespace valent
