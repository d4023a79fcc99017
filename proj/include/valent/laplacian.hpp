#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "valent/graph.hpp"

namespace valent {

/// Vertex-indexed integer vector; entries are usually in {-1, 0, +1}.
using Valuation = std::vector<int>;

/// A valuation together with the integer eigenvalue it affords. Stored with
/// the first nonzero entry equal to +1.
struct Certificate {
  Valuation valuation;
  int lambda = 0;

  friend auto operator<=>(const Certificate& a, const Certificate& b) {
    if (auto c = a.lambda <=> b.lambda; c != 0) return c;
    return a.valuation <=> b.valuation;
  }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class Valence { Monovalent, Bivalent, Trivalent, Other };

constexpr std::string_view to_string(Valence v) {
  switch (v) {
    case Valence::Monovalent: return "monovalent";
    case Valence::Bivalent: return "bivalent";
    case Valence::Trivalent: return "trivalent";
    case Valence::Other: return "other";
  }
  return "other";
}

/// Degree, nonzero-neighbor count and soft-neighbor count of one vertex.
struct SoftProfile {
  int d = 0;
  int d_tilde = 0;
  int s = 0;

  friend bool operator==(const SoftProfile&, const SoftProfile&) = default;
};

namespace detail {

inline void check_length(const Graph& g, std::size_t len) {
  if (len != static_cast<std::size_t>(g.order())) {
    fail(ErrorCode::LengthMismatch,
         "vector of length " + std::to_string(len) + " for n=" + std::to_string(g.order()));
  }
}

inline bool all_zero(std::span<const int> v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

}  // namespace detail

inline bool in_trivalent_alphabet(std::span<const int> v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= -1 && x <= 1; });
}

inline bool in_bivalent_alphabet(std::span<const int> v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == -1 || x == 1; });
}

/// w = (D - A) v in exact 64-bit integer arithmetic.
inline std::vector<std::int64_t> apply_laplacian(const Graph& g, std::span<const int> v) {
  detail::check_length(g, v.size());
  std::vector<std::int64_t> w(v.size());
  for (Vertex i = 0; i < g.order(); ++i) {
    std::int64_t acc = static_cast<std::int64_t>(g.degree(i)) * v[i];
    for (Vertex j : g.neighbors(i)) acc -= v[j];
    w[i] = acc;
  }
  return w;
}

/// First vertex i where (d_i - lambda) v_i != sum_{j~i} v_j, if any.
inline std::optional<Vertex> first_violation(const Graph& g, std::span<const int> v, int lambda) {
  detail::check_length(g, v.size());
  const auto w = apply_laplacian(g, v);
  for (Vertex i = 0; i < g.order(); ++i) {
    if (w[i] != static_cast<std::int64_t>(lambda) * v[i]) return i;
  }
  return std::nullopt;
}

inline bool verify_eigenpair(const Graph& g, std::span<const int> v, int lambda) {
  detail::check_length(g, v.size());
  if (detail::all_zero(v)) fail(ErrorCode::ZeroVector, "eigenvector candidate is all zero");
  return !first_violation(g, v, lambda).has_value();
}

/// The integer lambda with Lv = lambda v, if one exists. Read off at the
/// first nonzero vertex and then confirmed at every vertex.
inline std::optional<int> infer_eigenvalue(const Graph& g, std::span<const int> v) {
  detail::check_length(g, v.size());
  auto nz = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
  if (nz == v.end()) fail(ErrorCode::ZeroVector, "eigenvector candidate is all zero");
  const auto i = static_cast<Vertex>(nz - v.begin());
  std::int64_t sum = 0;
  for (Vertex j : g.neighbors(i)) sum += v[j];
  if (sum % v[i] != 0) return std::nullopt;
  const std::int64_t lambda = g.degree(i) - sum / v[i];
  if (first_violation(g, v, static_cast<int>(lambda))) return std::nullopt;
  return static_cast<int>(lambda);
}

inline Valence valence_of(std::span<const int> v) {
  if (v.empty()) fail(ErrorCode::EmptyVector, "valence of an empty vector");
  bool plus = false, minus = false, zero = false;
  for (int x : v) {
    if (x == 1) {
      plus = true;
    } else if (x == -1) {
      minus = true;
    } else if (x == 0) {
      zero = true;
    } else {
      return Valence::Other;
    }
  }
  if (zero) return (plus || minus) ? Valence::Trivalent : Valence::Other;
  if (plus && minus) return Valence::Bivalent;
  return plus ? Valence::Monovalent : Valence::Other;
}

inline std::vector<Vertex> soft_nodes(std::span<const int> v) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

inline std::vector<Vertex> support(std::span<const int> v) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

inline SoftProfile soft_profile(const Graph& g, std::span<const int> v, Vertex j) {
  detail::check_length(g, v.size());
  g.check_vertex(j);
  SoftProfile p;
  p.d = g.degree(j);
  for (Vertex i : g.neighbors(j)) {
    if (v[i] == 0) {
      ++p.s;
    } else {
      ++p.d_tilde;
    }
  }
  return p;
}

/// Flips the sign of `v` if needed so that its first nonzero entry is
/// positive.
inline Valuation normalize_sign(Valuation v) {
  auto nz = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
  if (nz != v.end() && *nz < 0) {
    for (int& x : v) x = -x;
  }
  return v;
}

/// Verifies (v, lambda) on `g` and returns it as a sign-normalized
/// certificate; NotACertificate otherwise.
inline Certificate make_certificate(const Graph& g, Valuation v, int lambda) {
  if (!verify_eigenpair(g, v, lambda)) {
    fail(ErrorCode::NotACertificate, "vector does not afford lambda=" + std::to_string(lambda));
  }
  return Certificate{normalize_sign(std::move(v)), lambda};
}

/// Comma-separated integer literal, e.g. "1,0,-1".
inline std::string format_valuation(std::span<const int> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace valent
