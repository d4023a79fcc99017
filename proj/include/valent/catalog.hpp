#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valent/graph.hpp"
#include "valent/laplacian.hpp"
#include "valent/transforms.hpp"

namespace valent {

/// Degree split shared by every support vertex: d = d_tilde + s and
/// lambda = d + d_tilde = 2d - s.
struct SplitParams {
  int d = 0;
  int d_tilde = 0;
  int s = 0;

  friend bool operator==(const SplitParams&, const SplitParams&) = default;
};

struct CatalogEntry {
  std::string name;
  Graph graph;
  Certificate certificate;
  SplitParams split;
  /// Set for regular_bivalent: number of K2 copies and matchings added.
  std::optional<int> copies;
  std::optional<int> matchings;
  std::vector<TransformRecord> history;
};

inline constexpr int kMaxCatalogLambda = 8;

/// K_{2,d}: one +1 and one -1 vertex, both joined to d soft vertices.
/// Lambda = d.
inline CatalogEntry soft_star(int d) {
  if (d < 1) fail(ErrorCode::InvalidSize, "soft_star needs d >= 1");
  CatalogEntry e;
  e.name = "soft_star(" + std::to_string(d) + ")";
  e.graph = complete_bipartite(2, d);
  Valuation v(static_cast<std::size_t>(d + 2), 0);
  v[0] = 1;
  v[1] = -1;
  e.certificate = make_certificate(e.graph, std::move(v), d);
  e.split = {d, 0, d};
  return e;
}

/// K_{d_tilde,d_tilde} between the +1 and -1 vertices plus s soft vertices
/// joined to every support vertex. Lambda = 2 d_tilde + s.
inline CatalogEntry opposite_pair_family(int d_tilde, int s) {
  if (d_tilde < 1 || s < 0) fail(ErrorCode::InvalidSize, "opposite_pair_family needs d_tilde >= 1, s >= 0");
  const int n = 2 * d_tilde + s;
  EdgeList edges;
  for (Vertex i = 0; i < d_tilde; ++i) {
    for (Vertex j = d_tilde; j < 2 * d_tilde; ++j) edges.emplace_back(i, j);
  }
  for (Vertex k = 2 * d_tilde; k < n; ++k) {
    for (Vertex i = 0; i < 2 * d_tilde; ++i) edges.emplace_back(i, k);
  }
  Valuation v(static_cast<std::size_t>(n), 0);
  for (Vertex i = 0; i < d_tilde; ++i) {
    v[i] = 1;
    v[i + d_tilde] = -1;
  }
  CatalogEntry e;
  e.name = "opposite_pair_family(" + std::to_string(d_tilde) + "," + std::to_string(s) + ")";
  e.graph = Graph::from_edges(n, edges);
  e.certificate = make_certificate(e.graph, std::move(v), 2 * d_tilde + s);
  e.split = {d_tilde + s, d_tilde, s};
  return e;
}

/// d-regular bivalent graph with lambda = 2d, grown from d disjoint K2
/// (copy c is vertices 2c = +1, 2c+1 = -1). Step t = 1..d-1 adds the
/// alternate matching {(2c, 2((c+t) mod d) + 1)}. The result is K_{d,d}.
inline CatalogEntry regular_bivalent(int d) {
  if (d < 1) fail(ErrorCode::InvalidSize, "regular_bivalent needs d >= 1");
  EdgeList edges;
  Valuation v(static_cast<std::size_t>(2 * d));
  for (Vertex c = 0; c < d; ++c) {
    edges.emplace_back(2 * c, 2 * c + 1);
    v[2 * c] = 1;
    v[2 * c + 1] = -1;
  }
  EigenGraph cur{Graph::from_edges(2 * d, edges), v, 2};
  CatalogEntry e;
  for (int t = 1; t < d; ++t) {
    Matching m;
    for (Vertex c = 0; c < d; ++c) {
      const Edge pair(2 * c, 2 * ((c + t) % d) + 1);
      if (!cur.graph.adjacent(pair.u, pair.v)) m.push_back(pair);
    }
    if (!is_alternate_perfect_matching(cur.values, m)) {
      fail(ErrorCode::MatchingUnavailable, "step " + std::to_string(t));
    }
    auto step = add_alternate_matching(cur, m);
    cur = std::move(step.result);
    e.history.push_back(std::move(step.record));
  }
  e.name = "regular_bivalent(" + std::to_string(d) + ")";
  e.graph = cur.graph;
  e.certificate = make_certificate(cur.graph, cur.values, cur.lambda);
  e.split = {d, d, 0};
  e.copies = d;
  e.matchings = d - 1;
  return e;
}

/// One canonical representative per split (d, d_tilde) with
/// d + d_tilde = lambda, for lambda = 1..lambda_max, ordered by lambda and
/// then by decreasing d.
inline std::vector<CatalogEntry> smallest_trivalent_catalog(int lambda_max) {
  if (lambda_max < 1 || lambda_max > kMaxCatalogLambda) {
    fail(ErrorCode::InvalidSize, "lambda_max must be in 1.." + std::to_string(kMaxCatalogLambda));
  }
  std::vector<CatalogEntry> out;
  for (int lambda = 1; lambda <= lambda_max; ++lambda) {
    out.push_back(soft_star(lambda));
    for (int dt = 1; 2 * dt <= lambda; ++dt) {
      const int s = lambda - 2 * dt;
      out.push_back(s == 0 ? regular_bivalent(dt) : opposite_pair_family(dt, s));
    }
  }
  return out;
}

}  // namespace valent
