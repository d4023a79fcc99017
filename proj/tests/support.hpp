#pragma once

#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "valent/valent.hpp"

namespace valent::testing {

inline std::string data_path(const std::string& name) { return std::string(VALENT_DATA_DIR) + "/" + name; }

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

inline std::vector<Graph> load_g6(const std::string& name) {
  std::vector<Graph> out;
  for (const auto& line : read_lines(data_path(name))) out.push_back(parse_graph6(line));
  return out;
}

/// Every connected graph on n vertices, one per isomorphism class.
inline std::vector<Graph> connected_graphs(int n) { return load_g6("connected_n" + std::to_string(n) + ".g6"); }

inline std::vector<Graph> connected_graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    auto part = connected_graphs(k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline std::vector<Graph> trees(int n) { return load_g6("trees_n" + std::to_string(n) + ".g6"); }

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  EdgeList e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(rng)) e.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, e);
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> pd(0.15, 0.85);
  for (;;) {
    Graph g = random_graph(rng, n, pd(rng));
    if (is_connected(g)) return g;
  }
}

}  // namespace valent::testing
