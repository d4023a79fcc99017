#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "valent/graph.hpp"
#include "valent/laplacian.hpp"

namespace valent {

/// A graph together with a vector and the eigenvalue it is claimed to
/// afford. Transforms verify the claim on entry and on exit.
struct EigenGraph {
  Graph graph;
  Valuation values;
  int lambda = 0;

  friend bool operator==(const EigenGraph&, const EigenGraph&) = default;
};

enum class TransformKind {
  ToggleEqualEdge,
  SoftExtension,
  SoftReduction,
  EdgeToSoftSquare,
  SoftSquareToEdge,
  AddAlternateMatching,
  DeleteAlternateMatching,
};

constexpr std::string_view to_string(TransformKind k) {
  switch (k) {
    case TransformKind::ToggleEqualEdge: return "toggle_equal_edge";
    case TransformKind::SoftExtension: return "soft_extension";
    case TransformKind::SoftReduction: return "soft_reduction";
    case TransformKind::EdgeToSoftSquare: return "edge_to_soft_square";
    case TransformKind::SoftSquareToEdge: return "soft_square_to_edge";
    case TransformKind::AddAlternateMatching: return "add_alternate_matching";
    case TransformKind::DeleteAlternateMatching: return "delete_alternate_matching";
  }
  return "unknown";
}

/// Disjoint vertex pairs.
using Matching = std::vector<Edge>;

/// What one transformation did, in enough detail to replay it.
///
///   toggle_equal_edge          edges = {e}, added = whether e was inserted
///   soft_extension             new_vertices, edges = the inserted edges
///   soft_reduction             vertices = old ids kept, in new-id order
///   edge_to_soft_square        edges = {(i,j)}, vertices = {k, l}
///   soft_square_to_edge        vertices = {k, l}, edges = {(i,j)}
///   add/delete_alternate_matching   edges = the matching
struct TransformRecord {
  TransformKind kind = TransformKind::ToggleEqualEdge;
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;
  int new_vertices = 0;
  bool added = false;
  int lambda_before = 0;
  int lambda_after = 0;

  friend bool operator==(const TransformRecord&, const TransformRecord&) = default;
};

struct TransformStep {
  EigenGraph result;
  TransformRecord record;
};

enum class MatchingMode { WithinEdges, WithinNonEdges };

namespace detail {

inline void require_certificate(const EigenGraph& x) {
  check_length(x.graph, x.values.size());
  if (!verify_eigenpair(x.graph, x.values, x.lambda)) {
    fail(ErrorCode::NotACertificate, "input does not afford lambda=" + std::to_string(x.lambda));
  }
}

// Every transformation provably maps certificates to certificates; a failure here
// is a library bug, not bad input.
inline void ensure_certificate(const EigenGraph& x, TransformKind kind) {
  if (!verify_eigenpair(x.graph, x.values, x.lambda)) {
    throw std::logic_error(std::string(to_string(kind)) + " produced an invalid certificate");
  }
}

inline std::string pair_text(Vertex i, Vertex j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace detail

/// Adds edge (i,j) if absent, deletes it otherwise. Requires v_i = v_j, in
/// which case both endpoint conditions are unchanged.
inline TransformStep toggle_equal_edge(const EigenGraph& in, Vertex i, Vertex j) {
  in.graph.check_vertex(i);
  in.graph.check_vertex(j);
  if (i == j) fail(ErrorCode::SameVertex, "vertex " + std::to_string(i));
  detail::require_certificate(in);
  if (in.values[i] != in.values[j]) {
    fail(ErrorCode::UnequalValues, detail::pair_text(i, j));
  }
  const Edge e(i, j);
  const bool present = in.graph.adjacent(i, j);
  TransformStep out;
  out.result = {present ? edit(in.graph, 0, {}, std::span(&e, 1)) : edit(in.graph, 0, std::span(&e, 1), {}),
                in.values, in.lambda};
  out.record = {TransformKind::ToggleEqualEdge, {e}, {}, 0, !present, in.lambda, in.lambda};
  detail::ensure_certificate(out.result, out.record.kind);
  return out;
}

/// Appends `new_vertex_count` soft vertices and the given edges. Every new
/// edge must avoid the support: its endpoints are new vertices or existing
/// soft vertices. The zero-extended vector keeps the eigenvalue.
inline TransformStep extend_with_soft(const EigenGraph& in, int new_vertex_count,
                                      std::span<const Edge> new_edges) {
  if (new_vertex_count < 0) fail(ErrorCode::InvalidSize, "negative vertex count");
  detail::require_certificate(in);
  const int n = in.graph.order();
  for (Edge e : new_edges) {
    for (Vertex x : {e.u, e.v}) {
      if (x < 0 || x >= n + new_vertex_count) {
        fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(x));
      }
      if (x < n && in.values[x] != 0) fail(ErrorCode::EdgeTouchesSupport, detail::pair_text(e.u, e.v));
    }
  }
  TransformStep out;
  out.result.graph = edit(in.graph, new_vertex_count, new_edges, {});
  out.result.values = in.values;
  out.result.values.resize(static_cast<std::size_t>(n + new_vertex_count), 0);
  out.result.lambda = in.lambda;
  out.record.kind = TransformKind::SoftExtension;
  out.record.edges.assign(new_edges.begin(), new_edges.end());
  std::sort(out.record.edges.begin(), out.record.edges.end());
  out.record.new_vertices = new_vertex_count;
  out.record.lambda_before = out.record.lambda_after = in.lambda;
  detail::ensure_certificate(out.result, out.record.kind);
  return out;
}

struct Reduction {
  Graph graph;
  Valuation values;
  /// old id -> new id, -1 for dropped vertices.
  std::vector<Vertex> vertex_map;
  /// new id -> old id.
  std::vector<Vertex> kept;
};

/// Keeps the support W and every vertex adjacent to W, and only the edges
/// with at least one endpoint in W. Vertices keep their relative order.
inline Reduction reduce_to_support(const Graph& g, std::span<const int> v) {
  detail::check_length(g, v.size());
  if (detail::all_zero(v)) fail(ErrorCode::ZeroVector, "reduction needs a nonzero support");
  const int n = g.order();
  Reduction r;
  r.vertex_map.assign(static_cast<std::size_t>(n), -1);
  for (Vertex i = 0; i < n; ++i) {
    bool keep = v[i] != 0;
    for (Vertex j : g.neighbors(i)) keep = keep || v[j] != 0;
    if (keep) {
      r.vertex_map[i] = static_cast<Vertex>(r.kept.size());
      r.kept.push_back(i);
    }
  }
  EdgeList edges;
  for (Edge e : g.edges()) {
    if (v[e.u] != 0 || v[e.v] != 0) edges.emplace_back(r.vertex_map[e.u], r.vertex_map[e.v]);
  }
  r.graph = Graph::from_edges(static_cast<int>(r.kept.size()), edges);
  for (Vertex old : r.kept) r.values.push_back(v[old]);
  return r;
}

inline TransformStep reduce_to_support(const EigenGraph& in) {
  detail::require_certificate(in);
  auto r = reduce_to_support(in.graph, in.values);
  TransformStep out;
  out.result = {std::move(r.graph), std::move(r.values), in.lambda};
  out.record.kind = TransformKind::SoftReduction;
  out.record.vertices = std::move(r.kept);
  out.record.lambda_before = out.record.lambda_after = in.lambda;
  detail::ensure_certificate(out.result, out.record.kind);
  return out;
}

/// Replaces an edge between opposite values by a 4-cycle i-k-j-l through
/// two new soft vertices k = n, l = n+1. Each endpoint loses the opposite
/// neighbor and gains two zeros, which leaves its condition intact.
inline TransformStep edge_to_soft_square(const EigenGraph& in, Vertex i, Vertex j) {
  in.graph.check_vertex(i);
  in.graph.check_vertex(j);
  detail::require_certificate(in);
  if (i == j || !in.graph.adjacent(i, j)) fail(ErrorCode::NotAnEdge, detail::pair_text(i, j));
  if (in.values[i] == 0 || in.values[j] == 0) fail(ErrorCode::ZeroEndpoint, detail::pair_text(i, j));
  if (in.values[i] != -in.values[j]) fail(ErrorCode::NotOppositeValues, detail::pair_text(i, j));

  const int n = in.graph.order();
  const Vertex k = n, l = n + 1;
  const Edge removed(i, j);
  const EdgeList added{{i, k}, {k, j}, {i, l}, {l, j}};
  TransformStep out;
  out.result.graph = edit(in.graph, 2, added, std::span(&removed, 1));
  out.result.values = in.values;
  out.result.values.push_back(0);
  out.result.values.push_back(0);
  out.result.lambda = in.lambda;
  out.record = {TransformKind::EdgeToSoftSquare, {removed}, {k, l}, 2, false, in.lambda, in.lambda};
  detail::ensure_certificate(out.result, out.record.kind);
  return out;
}

/// Inverse of edge_to_soft_square: k and l must be soft, of degree 2, with
/// the same neighbors {i, j}, v_i = -v_j != 0 and i, j non-adjacent. The
/// two vertices are removed and the remaining ids shift down.
inline TransformStep soft_square_to_edge(const EigenGraph& in, Vertex k, Vertex l) {
  const Graph& g = in.graph;
  g.check_vertex(k);
  g.check_vertex(l);
  detail::require_certificate(in);
  const auto& v = in.values;
  auto nk = g.neighbors(k);
  auto nl = g.neighbors(l);
  if (k == l || v[k] != 0 || v[l] != 0 || nk.size() != 2 || nl.size() != 2 ||
      !std::equal(nk.begin(), nk.end(), nl.begin(), nl.end())) {
    fail(ErrorCode::NotASoftSquare, detail::pair_text(k, l));
  }
  const Vertex i = nk[0], j = nk[1];
  if (v[i] == 0 || v[i] != -v[j]) fail(ErrorCode::NotASoftSquare, detail::pair_text(k, l));
  if (g.adjacent(i, j)) fail(ErrorCode::EdgeAlreadyPresent, detail::pair_text(i, j));

  std::vector<Vertex> remap(static_cast<std::size_t>(g.order()), -1);
  Vertex next = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (x != k && x != l) remap[x] = next++;
  }
  EdgeList edges;
  for (Edge e : g.edges()) {
    if (remap[e.u] >= 0 && remap[e.v] >= 0) edges.emplace_back(remap[e.u], remap[e.v]);
  }
  edges.emplace_back(remap[i], remap[j]);

  TransformStep out;
  out.result.graph = Graph::from_edges(next, edges);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (remap[x] >= 0) out.result.values.push_back(v[x]);
  }
  out.result.lambda = in.lambda;
  out.record = {TransformKind::SoftSquareToEdge, {Edge(i, j)}, {std::min(k, l), std::max(k, l)}, 0,
                false, in.lambda, in.lambda};
  detail::ensure_certificate(out.result, out.record.kind);
  return out;
}

/// Checks that `m` pairs every support vertex exactly once with an
/// opposite-valued partner and touches no soft vertex.
inline bool is_alternate_perfect_matching(std::span<const int> v, const Matching& m) {
  std::vector<int> hits(v.size(), 0);
  for (Edge e : m) {
    if (e.u < 0 || e.v >= static_cast<Vertex>(v.size()) || e.u == e.v) return false;
    if (v[e.u] == 0 || v[e.u] != -v[e.v]) return false;
    ++hits[e.u];
    ++hits[e.v];
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (hits[i] != (v[i] != 0 ? 1 : 0)) return false;
  }
  return true;
}

/// Bipartite matching of the +1 vertices against the -1 vertices, over
/// existing edges or over non-adjacent pairs. Each +1 vertex, in ascending
/// order, first takes the smallest free partner and otherwise searches for
/// an augmenting path (partners also scanned in ascending order).
inline std::optional<Matching> find_alternate_perfect_matching(const Graph& g, std::span<const int> v,
                                                               MatchingMode mode) {
  detail::check_length(g, v.size());
  if (!in_trivalent_alphabet(v)) fail(ErrorCode::NotTrivalentAlphabet, format_valuation(v));
  std::vector<Vertex> plus, minus;
  for (Vertex i = 0; i < g.order(); ++i) {
    if (v[i] == 1) plus.push_back(i);
    if (v[i] == -1) minus.push_back(i);
  }
  if (plus.empty() && minus.empty()) fail(ErrorCode::ZeroVector, "empty support");
  if (plus.size() != minus.size()) {
    fail(ErrorCode::UnbalancedSupport,
         std::to_string(plus.size()) + " vs " + std::to_string(minus.size()));
  }

  std::vector<std::vector<Vertex>> cand(plus.size());
  for (std::size_t a = 0; a < plus.size(); ++a) {
    for (Vertex b : minus) {
      if (g.adjacent(plus[a], b) == (mode == MatchingMode::WithinEdges)) cand[a].push_back(b);
    }
  }

  std::vector<Vertex> owner(static_cast<std::size_t>(g.order()), -1);  // minus vertex -> plus index
  std::vector<Vertex> mate(plus.size(), -1);
  std::vector<char> visited;
  auto augment = [&](auto&& self, std::size_t a) -> bool {
    for (Vertex b : cand[a]) {
      if (visited[b]) continue;
      visited[b] = 1;
      if (owner[b] < 0 || self(self, static_cast<std::size_t>(owner[b]))) {
        owner[b] = static_cast<Vertex>(a);
        mate[a] = b;
        return true;
      }
    }
    return false;
  };
  for (std::size_t a = 0; a < plus.size(); ++a) {
    auto free_b = std::find_if(cand[a].begin(), cand[a].end(), [&](Vertex b) { return owner[b] < 0; });
    if (free_b != cand[a].end()) {
      owner[*free_b] = static_cast<Vertex>(a);
      mate[a] = *free_b;
      continue;
    }
    visited.assign(static_cast<std::size_t>(g.order()), 0);
    if (!augment(augment, a)) return std::nullopt;
  }

  Matching m;
  for (std::size_t a = 0; a < plus.size(); ++a) m.emplace_back(plus[a], mate[a]);
  std::sort(m.begin(), m.end());
  return m;
}

/// Adds an alternate perfect matching: every support vertex gains one
/// opposite neighbor and the eigenvalue rises by 2.
inline TransformStep add_alternate_matching(const EigenGraph& in, const Matching& m) {
  detail::require_certificate(in);
  if (!is_alternate_perfect_matching(in.values, m)) {
    fail(ErrorCode::NotAlternatePerfect, "matching does not pair the support by opposite values");
  }
  for (Edge e : m) {
    if (in.graph.adjacent(e.u, e.v)) fail(ErrorCode::EdgeCollision, detail::pair_text(e.u, e.v));
  }
  Matching sorted = m;
  std::sort(sorted.begin(), sorted.end());
  TransformStep out;
  out.result = {edit(in.graph, 0, sorted, {}), in.values, in.lambda + 2};
  out.record = {TransformKind::AddAlternateMatching, sorted, {}, 0, true, in.lambda, in.lambda + 2};
  detail::ensure_certificate(out.result, out.record.kind);
  return out;
}

inline TransformStep delete_alternate_matching(const EigenGraph& in, const Matching& m) {
  detail::require_certificate(in);
  if (!is_alternate_perfect_matching(in.values, m)) {
    fail(ErrorCode::NotAlternatePerfect, "matching does not pair the support by opposite values");
  }
  for (Edge e : m) {
    if (!in.graph.adjacent(e.u, e.v)) fail(ErrorCode::MissingEdge, detail::pair_text(e.u, e.v));
  }
  Matching sorted = m;
  std::sort(sorted.begin(), sorted.end());
  TransformStep out;
  out.result = {edit(in.graph, 0, {}, sorted), in.values, in.lambda - 2};
  out.record = {TransformKind::DeleteAlternateMatching, sorted, {}, 0, false, in.lambda, in.lambda - 2};
  detail::ensure_certificate(out.result, out.record.kind);
  return out;
}

/// Re-applies a recorded transformation to a (possibly different) input.
inline TransformStep replay(const EigenGraph& in, const TransformRecord& r) {
  switch (r.kind) {
    case TransformKind::ToggleEqualEdge:
      return toggle_equal_edge(in, r.edges.at(0).u, r.edges.at(0).v);
    case TransformKind::SoftExtension:
      return extend_with_soft(in, r.new_vertices, r.edges);
    case TransformKind::SoftReduction:
      return reduce_to_support(in);
    case TransformKind::EdgeToSoftSquare:
      return edge_to_soft_square(in, r.edges.at(0).u, r.edges.at(0).v);
    case TransformKind::SoftSquareToEdge:
      return soft_square_to_edge(in, r.vertices.at(0), r.vertices.at(1));
    case TransformKind::AddAlternateMatching:
      return add_alternate_matching(in, r.edges);
    case TransformKind::DeleteAlternateMatching:
      return delete_alternate_matching(in, r.edges);
  }
  throw std::logic_error("unknown transform kind");
}

/// Undoes a step given its output. Reductions and extensions drop or add
/// vertices in ways the record alone cannot reverse, so they have no
/// inverse here.
inline std::optional<TransformStep> invert(const TransformStep& step) {
  const auto& r = step.record;
  const auto& out = step.result;
  switch (r.kind) {
    case TransformKind::ToggleEqualEdge:
      return toggle_equal_edge(out, r.edges.at(0).u, r.edges.at(0).v);
    case TransformKind::EdgeToSoftSquare:
      return soft_square_to_edge(out, r.vertices.at(0), r.vertices.at(1));
    case TransformKind::AddAlternateMatching:
      return delete_alternate_matching(out, r.edges);
    case TransformKind::DeleteAlternateMatching:
      return add_alternate_matching(out, r.edges);
    default:
      return std::nullopt;
  }
}

}  // namespace valent
