#pragma once

#include <optional>
#include <span>
#include <sstream>
#include <string>

#include "valent/graph.hpp"
#include "valent/laplacian.hpp"

namespace valent {

// Fill colors by vertex value:
//   +1 -> "#e41a1c" (red), -1 -> "#377eb8" (blue), 0 -> "#ffffff" (white, dashed outline).
// Any other value is drawn light gray.
inline constexpr const char* kDotPlusColor = "#e41a1c";
inline constexpr const char* kDotMinusColor = "#377eb8";
inline constexpr const char* kDotSoftColor = "#ffffff";
inline constexpr const char* kDotOtherColor = "#cccccc";

inline std::string to_dot(const Graph& g, std::optional<std::span<const int>> values = std::nullopt,
                          const std::string& name = "G") {
  if (values) detail::check_length(g, values->size());
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  os << "  node [shape=circle, style=filled, fillcolor=\"" << kDotOtherColor << "\"];\n";
  for (Vertex i = 0; i < g.order(); ++i) {
    os << "  " << i;
    if (!values) {
      os << " [label=\"\"];\n";
      continue;
    }
    const int x = (*values)[i];
    const std::string label = x > 0 ? "+" + std::to_string(x) : std::to_string(x);
    os << " [label=\"" << label << "\"";
    if (x == 1) {
      os << ", fillcolor=\"" << kDotPlusColor << "\", class=\"plus\"";
    } else if (x == -1) {
      os << ", fillcolor=\"" << kDotMinusColor << "\", class=\"minus\"";
    } else if (x == 0) {
      os << ", fillcolor=\"" << kDotSoftColor << "\", style=\"filled,dashed\", class=\"soft\"";
    }
    os << "];\n";
  }
  for (Edge e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const Graph& g, const Valuation& values, const std::string& name = "G") {
  return to_dot(g, std::optional<std::span<const int>>(std::span<const int>(values)), name);
}

}  // namespace valent
