#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "valent/error.hpp"

namespace valent {

using Vertex = int;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable once built: every transformation in the library constructs a
/// new Graph. Neighbor lists are kept sorted so adjacency tests are a
/// binary search and equality is structural.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an explicit edge list. Rejects loops, endpoints
  /// outside 0..n-1 and repeated pairs (in either orientation).
  static Graph from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) fail(ErrorCode::InvalidSize, "negative vertex count");
    Graph g;
    g.adj_.resize(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
      if (e.u == e.v) fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
      for (Vertex x : {e.u, e.v}) {
        if (x < 0 || x >= n) {
          fail(ErrorCode::VertexOutOfRange,
               "vertex " + std::to_string(x) + " not in 0.." + std::to_string(n - 1));
        }
      }
      g.adj_[e.u].push_back(e.v);
      g.adj_[e.v].push_back(e.u);
    }
    for (std::size_t i = 0; i < g.adj_.size(); ++i) {
      auto& nb = g.adj_[i];
      std::sort(nb.begin(), nb.end());
      auto dup = std::adjacent_find(nb.begin(), nb.end());
      if (dup != nb.end()) {
        fail(ErrorCode::DuplicateEdge,
             "(" + std::to_string(std::min<Vertex>(static_cast<Vertex>(i), *dup)) + "," +
                 std::to_string(std::max<Vertex>(static_cast<Vertex>(i), *dup)) + ")");
      }
    }
    g.edge_count_ = edges.size();
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex i) const {
    check_vertex(i);
    return adj_[i];
  }

  int degree(Vertex i) const { return static_cast<int>(neighbors(i).size()); }

  bool adjacent(Vertex i, Vertex j) const {
    check_vertex(j);
    auto nb = neighbors(i);
    return std::binary_search(nb.begin(), nb.end(), j);
  }

  int max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
  }

  int min_degree() const {
    if (adj_.empty()) return 0;
    int d = order();
    for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
    return d;
  }

  /// Edges in lexicographic order.
  EdgeList edges() const {
    EdgeList out;
    out.reserve(edge_count_);
    for (Vertex i = 0; i < order(); ++i) {
      for (Vertex j : adj_[i]) {
        if (i < j) out.emplace_back(i, j);
      }
    }
    return out;
  }

  void check_vertex(Vertex i) const {
    if (i < 0 || i >= order()) {
      fail(ErrorCode::VertexOutOfRange,
           "vertex " + std::to_string(i) + " with n=" + std::to_string(order()));
    }
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

inline Graph new_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

inline Graph path(int n) {
  if (n < 1) fail(ErrorCode::InvalidSize, "path needs n >= 1");
  EdgeList e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(int n) {
  if (n < 3) fail(ErrorCode::InvalidSize, "cycle needs n >= 3");
  EdgeList e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 0);
  return Graph::from_edges(n, e);
}

/// Parts are {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) fail(ErrorCode::InvalidSize, "complete_bipartite needs a, b >= 1");
  EdgeList e;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = a; j < a + b; ++j) e.emplace_back(i, j);
  }
  return Graph::from_edges(a + b, e);
}

inline Graph complete(int n) {
  if (n < 1) fail(ErrorCode::InvalidSize, "complete graph needs n >= 1");
  EdgeList e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph::from_edges(n, e);
}

/// Vertices of `b` are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  EdgeList e = a.edges();
  for (Edge x : b.edges()) e.emplace_back(x.u + a.order(), x.v + a.order());
  return Graph::from_edges(a.order() + b.order(), e);
}

/// Component label per vertex, labels assigned 0,1,... in order of the
/// smallest vertex of each component.
inline std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != -1) continue;
    std::queue<Vertex> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        if (label[y] == -1) {
          label[y] = next;
          q.push(y);
        }
      }
    }
    ++next;
  }
  return label;
}

inline int component_count(const Graph& g) {
  auto label = component_labels(g);
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

inline bool is_connected(const Graph& g) { return component_count(g) == 1; }

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == static_cast<std::size_t>(g.order() - 1) && is_connected(g);
}

inline bool is_regular(const Graph& g) { return g.order() == 0 || g.min_degree() == g.max_degree(); }

/// Graph with `extra` isolated vertices appended and `add` / `remove` edge
/// edits applied. Throws if an added edge exists or a removed one does not.
inline Graph edit(const Graph& g, int extra, std::span<const Edge> add, std::span<const Edge> remove) {
  EdgeList e = g.edges();
  for (Edge r : remove) {
    auto it = std::lower_bound(e.begin(), e.end(), r);
    if (it == e.end() || *it != r) {
      fail(ErrorCode::MissingEdge, "(" + std::to_string(r.u) + "," + std::to_string(r.v) + ")");
    }
    e.erase(it);
  }
  e.insert(e.end(), add.begin(), add.end());
  return Graph::from_edges(g.order() + extra, e);
}

}  // namespace valent
