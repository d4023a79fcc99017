#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <queue>
#include <string_view>
#include <vector>

#include "valent/graph.hpp"
#include "valent/laplacian.hpp"

namespace valent {

enum class Alphabet { Bivalent, Trivalent };

constexpr std::string_view to_string(Alphabet a) {
  return a == Alphabet::Bivalent ? "bivalent" : "trivalent";
}

/// How lambda = 0 is treated. On a connected graph the only vector
/// affording 0 is the constant one, so Auto skips it there and searches it
/// on disconnected graphs (componentwise constant vectors).
enum class ZeroEigenvalue { Auto, Include, Exclude };

struct SearchOptions {
  Alphabet alphabet = Alphabet::Trivalent;
  std::optional<std::vector<int>> lambda_filter;
  std::optional<std::size_t> max_certificates;
  std::optional<std::chrono::milliseconds> time_budget;
  ZeroEigenvalue zero_eigenvalue = ZeroEigenvalue::Auto;
  int max_order = 64;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  double elapsed_ms = 0.0;
};

struct SearchOutcome {
  /// Sorted by (lambda, valuation), one representative per sign pair.
  std::vector<Certificate> certificates;
  /// True iff the whole space was explored, so an empty list proves
  /// non-existence.
  bool exhausted = true;
  SearchStats stats;
};

enum class Verdict { Yes, No, Unknown };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "true";
    case Verdict::No: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

inline constexpr int kBruteForceBivalentBound = 14;
inline constexpr int kBruteForceTrivalentBound = 12;

namespace detail {

inline bool lambda_allowed(const Graph& g, const SearchOptions& opt, int lambda) {
  if (lambda == 0) {
    if (opt.zero_eigenvalue == ZeroEigenvalue::Exclude) return false;
    if (opt.zero_eigenvalue == ZeroEigenvalue::Auto && is_connected(g)) return false;
  }
  if (opt.lambda_filter) {
    const auto& f = *opt.lambda_filter;
    return std::find(f.begin(), f.end(), lambda) != f.end();
  }
  return true;
}

inline void finish(SearchOutcome& out) {
  std::sort(out.certificates.begin(), out.certificates.end());
  out.certificates.erase(std::unique(out.certificates.begin(), out.certificates.end()),
                         out.certificates.end());
}

/// Candidate eigenvalues 0..2*d_max. For entries in {-1,0,+1} and any
/// vertex j with v_j = +-1, the vertex condition gives
/// lambda = d_j - v_j * sum_{i~j} v_i, and |sum| <= d_j, so
/// 0 <= lambda <= 2 d_j <= 2 d_max.
inline std::vector<int> candidate_lambdas(const Graph& g, const SearchOptions& opt) {
  std::vector<int> out;
  for (int lambda = 0; lambda <= 2 * g.max_degree(); ++lambda) {
    if (lambda_allowed(g, opt, lambda)) out.push_back(lambda);
  }
  return out;
}

/// BFS from the unvisited vertex of maximum degree (smallest id on ties),
/// restarted per component.
inline std::vector<Vertex> search_order(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(order.size()) < n) {
    Vertex start = -1;
    for (Vertex i = 0; i < n; ++i) {
      if (!seen[i] && (start < 0 || g.degree(i) > g.degree(start))) start = i;
    }
    std::queue<Vertex> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      order.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
      }
    }
  }
  return order;
}

/// Depth-first assignment for one fixed lambda. The vertex condition
/// (d_i - lambda) v_i = sum_{j~i} v_j is linear once lambda is fixed, so
/// each vertex keeps a running neighbor sum and a count of unassigned
/// neighbors, and the search prunes as soon as the remaining neighbors can
/// no longer close the gap.
class Backtracker {
 public:
  Backtracker(const Graph& g, const SearchOptions& opt, int lambda, std::vector<Vertex> order,
              SearchOutcome& out, std::chrono::steady_clock::time_point deadline, bool has_deadline)
      : g_(g),
        opt_(opt),
        lambda_(lambda),
        order_(std::move(order)),
        out_(out),
        deadline_(deadline),
        has_deadline_(has_deadline),
        value_(static_cast<std::size_t>(g.order()), 0),
        assigned_(static_cast<std::size_t>(g.order()), 0),
        partial_(static_cast<std::size_t>(g.order()), 0),
        open_(static_cast<std::size_t>(g.order()), 0) {
    for (Vertex i = 0; i < g.order(); ++i) open_[i] = g.degree(i);
    if (opt.alphabet == Alphabet::Bivalent) {
      alphabet_ = {1, -1};
    } else {
      alphabet_ = {1, 0, -1};
    }
  }

  /// Returns false when the search stopped early (budget or cap).
  bool run() {
    dfs(0);
    return !stopped_;
  }

 private:
  // Some value in the alphabet can still satisfy vertex i.
  bool feasible(Vertex i) const {
    const int coef = g_.degree(i) - lambda_;
    const int slack = open_[i];
    if (assigned_[i]) return std::abs(coef * value_[i] - partial_[i]) <= slack;
    for (int a : alphabet_) {
      if (std::abs(coef * a - partial_[i]) <= slack) return true;
    }
    return false;
  }

  void assign(Vertex x, int a) {
    value_[x] = a;
    assigned_[x] = 1;
    sum_ += a;
    for (Vertex y : g_.neighbors(x)) {
      partial_[y] += a;
      --open_[y];
    }
  }

  void unassign(Vertex x) {
    const int a = value_[x];
    for (Vertex y : g_.neighbors(x)) {
      partial_[y] -= a;
      ++open_[y];
    }
    sum_ -= a;
    assigned_[x] = 0;
    value_[x] = 0;
  }

  bool consistent(Vertex x, int remaining) const {
    if (!feasible(x)) return false;
    for (Vertex y : g_.neighbors(x)) {
      if (!feasible(y)) return false;
    }
    if (lambda_ > 0) {
      // Orthogonality to the constant vector: the entries must sum to zero.
      if (std::abs(sum_) > remaining) return false;
      if (opt_.alphabet == Alphabet::Bivalent && (sum_ + remaining) % 2 != 0) return false;
    }
    return true;
  }

  bool out_of_time() {
    if (!has_deadline_ || (out_.stats.nodes & 0x3ff) != 1) return false;
    return std::chrono::steady_clock::now() >= deadline_;
  }

  void dfs(std::size_t depth) {
    if (stopped_) return;
    ++out_.stats.nodes;
    if (out_of_time()) {
      stopped_ = true;
      return;
    }
    if (depth == order_.size()) {
      if (!seen_nonzero_) return;
      out_.certificates.push_back(Certificate{normalize_sign(value_), lambda_});
      if (opt_.max_certificates && out_.certificates.size() >= *opt_.max_certificates) stopped_ = true;
      return;
    }
    const Vertex x = order_[depth];
    const int remaining = static_cast<int>(order_.size() - depth - 1);
    for (int a : alphabet_) {
      // The first nonzero value is fixed to +1: one vector per sign pair.
      if (!seen_nonzero_ && a < 0) continue;
      const bool first = !seen_nonzero_ && a != 0;
      assign(x, a);
      if (first) seen_nonzero_ = true;
      if (consistent(x, remaining)) {
        dfs(depth + 1);
      } else {
        ++out_.stats.prunes;
      }
      if (first) seen_nonzero_ = false;
      unassign(x);
      if (stopped_) return;
    }
  }

  const Graph& g_;
  const SearchOptions& opt_;
  int lambda_;
  std::vector<Vertex> order_;
  SearchOutcome& out_;
  std::chrono::steady_clock::time_point deadline_;
  bool has_deadline_;
  std::vector<int> alphabet_;
  Valuation value_;
  std::vector<char> assigned_;
  std::vector<int> partial_;
  std::vector<int> open_;
  int sum_ = 0;
  bool seen_nonzero_ = false;
  bool stopped_ = false;
};

}  // namespace detail

/// Exhaustive oracle: every nonzero vector over the alphabet with first
/// nonzero entry +1 is tested with infer_eigenvalue. Ignores the
/// certificate cap and time budget, so `exhausted` is always true.
inline SearchOutcome brute_force_valent(const Graph& g, const SearchOptions& opt) {
  const int n = g.order();
  const bool bivalent = opt.alphabet == Alphabet::Bivalent;
  const int bound = bivalent ? kBruteForceBivalentBound : kBruteForceTrivalentBound;
  if (n > bound) {
    fail(ErrorCode::TooLarge, "brute force supports n <= " + std::to_string(bound) + ", got " +
                                  std::to_string(n));
  }
  const auto start = std::chrono::steady_clock::now();
  SearchOutcome out;
  if (n == 0) return out;

  const int base = bivalent ? 2 : 3;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(base);

  Valuation v(static_cast<std::size_t>(n));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      const int digit = static_cast<int>(c % base);
      c /= base;
      v[i] = bivalent ? (digit == 0 ? 1 : -1) : digit - 1;
    }
    ++out.stats.nodes;
    auto nz = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (nz == v.end() || *nz != 1) continue;
    if (auto lambda = infer_eigenvalue(g, v); lambda && detail::lambda_allowed(g, opt, *lambda)) {
      out.certificates.push_back(Certificate{v, *lambda});
    }
  }
  detail::finish(out);
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

/// Pruned backtracking search. The eigenvalue is fixed in an outer loop and
/// each subproblem assigns vertices in BFS order from a maximum-degree
/// vertex. If the time budget or certificate cap stops the search early,
/// `exhausted` is false and the certificates found so far are returned.
inline SearchOutcome search_valent(const Graph& g, const SearchOptions& opt) {
  if (g.order() > opt.max_order) {
    fail(ErrorCode::TooLarge, "search supports n <= " + std::to_string(opt.max_order) + ", got " +
                                  std::to_string(g.order()));
  }
  const auto start = std::chrono::steady_clock::now();
  SearchOutcome out;
  if (g.order() == 0) return out;

  const bool has_deadline = opt.time_budget.has_value();
  const auto deadline = has_deadline ? start + *opt.time_budget : start;
  const auto order = detail::search_order(g);
  for (int lambda : detail::candidate_lambdas(g, opt)) {
    detail::Backtracker bt(g, opt, lambda, order, out, deadline, has_deadline);
    if (!bt.run()) {
      out.exhausted = false;
      break;
    }
  }
  detail::finish(out);
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

inline Verdict decide(const Graph& g, Alphabet alphabet, SearchOptions opt = {}) {
  opt.alphabet = alphabet;
  opt.max_certificates = 1;
  const auto out = search_valent(g, opt);
  if (!out.certificates.empty()) return Verdict::Yes;
  return out.exhausted ? Verdict::No : Verdict::Unknown;
}

inline Verdict is_bivalent(const Graph& g, SearchOptions opt = {}) {
  return decide(g, Alphabet::Bivalent, std::move(opt));
}

inline Verdict is_trivalent(const Graph& g, SearchOptions opt = {}) {
  return decide(g, Alphabet::Trivalent, std::move(opt));
}

}  // namespace valent
