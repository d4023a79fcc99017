#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"
#include "valent/search.hpp"
#include "valent/spectrum.hpp"

namespace valent {
namespace {

SearchOptions with(Alphabet a) {
  SearchOptions opt;
  opt.alphabet = a;
  return opt;
}

bool contains(const SearchOutcome& o, const Valuation& v, int lambda) {
  return std::find(o.certificates.begin(), o.certificates.end(), Certificate{v, lambda}) !=
         o.certificates.end();
}

TEST(BruteForce, K2Bivalent) {
  const auto out = brute_force_valent(path(2), with(Alphabet::Bivalent));
  EXPECT_TRUE(out.exhausted);
  ASSERT_EQ(out.certificates.size(), 1u);
  EXPECT_EQ(out.certificates[0], (Certificate{{1, -1}, 2}));
}

TEST(BruteForce, OddCycleNotBivalent) {
  const auto out = brute_force_valent(cycle(5), with(Alphabet::Bivalent));
  EXPECT_TRUE(out.exhausted);
  EXPECT_TRUE(out.certificates.empty());
}

TEST(BruteForce, C4Trivalent) {
  const auto out = brute_force_valent(cycle(4), with(Alphabet::Trivalent));
  EXPECT_TRUE(contains(out, {1, 0, -1, 0}, 2));
}

TEST(BruteForce, SizeGuard) {
  EXPECT_THROW(brute_force_valent(path(15), with(Alphabet::Bivalent)), Error);
  EXPECT_THROW(brute_force_valent(path(13), with(Alphabet::Trivalent)), Error);
  EXPECT_NO_THROW(brute_force_valent(path(12), with(Alphabet::Trivalent)));
}

TEST(Search, C6Trivalent) {
  const auto out = search_valent(cycle(6), with(Alphabet::Trivalent));
  EXPECT_TRUE(out.exhausted);
  EXPECT_TRUE(contains(out, {0, 1, 1, 0, -1, -1}, 1));
}

TEST(Search, K33Bivalent) {
  const auto out = search_valent(complete_bipartite(3, 3), with(Alphabet::Bivalent));
  EXPECT_TRUE(contains(out, {1, 1, 1, -1, -1, -1}, 6));
  EXPECT_EQ(out.certificates, brute_force_valent(complete_bipartite(3, 3), with(Alphabet::Bivalent)).certificates);
}

TEST(Search, P4Bivalent) {
  const auto out = search_valent(path(4), with(Alphabet::Bivalent));
  EXPECT_TRUE(out.exhausted);
  ASSERT_EQ(out.certificates.size(), 1u);
  EXPECT_EQ(out.certificates[0], (Certificate{{1, -1, -1, 1}, 2}));
}

TEST(Search, Verdicts) {
  EXPECT_EQ(is_bivalent(cycle(4)), Verdict::Yes);
  EXPECT_EQ(is_bivalent(path(3)), Verdict::No);
  EXPECT_EQ(is_trivalent(path(3)), Verdict::Yes);
  EXPECT_EQ(is_trivalent(complete(1)), Verdict::No);
}

TEST(Search, LambdaFilter) {
  SearchOptions opt = with(Alphabet::Trivalent);
  opt.lambda_filter = std::vector<int>{4};
  const auto out = search_valent(cycle(4), opt);
  ASSERT_FALSE(out.certificates.empty());
  for (const auto& c : out.certificates) EXPECT_EQ(c.lambda, 4);
}

TEST(Search, ZeroEigenvalueOnDisconnectedGraphs) {
  const Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
  SearchOptions opt = with(Alphabet::Bivalent);
  const auto with_zero = search_valent(two_k2, opt);
  EXPECT_TRUE(contains(with_zero, {1, 1, -1, -1}, 0));
  opt.zero_eigenvalue = ZeroEigenvalue::Exclude;
  const auto without = search_valent(two_k2, opt);
  EXPECT_FALSE(contains(without, {1, 1, -1, -1}, 0));
  EXPECT_TRUE(contains(without, {1, -1, 1, -1}, 2));
  EXPECT_EQ(with_zero.certificates, brute_force_valent(two_k2, with(Alphabet::Bivalent)).certificates);

  // Connected graphs skip 0 unless asked.
  SearchOptions inc = with(Alphabet::Trivalent);
  inc.zero_eigenvalue = ZeroEigenvalue::Include;
  EXPECT_TRUE(contains(search_valent(path(3), inc), {1, 1, 1}, 0));
  EXPECT_FALSE(contains(search_valent(path(3), with(Alphabet::Trivalent)), {1, 1, 1}, 0));
}

TEST(Search, CapAndBudget) {
  SearchOptions opt = with(Alphabet::Trivalent);
  opt.max_certificates = 1;
  const auto capped = search_valent(complete(6), opt);
  EXPECT_EQ(capped.certificates.size(), 1u);
  EXPECT_FALSE(capped.exhausted);

  SearchOptions budget = with(Alphabet::Bivalent);
  budget.time_budget = std::chrono::milliseconds(0);
  std::mt19937_64 rng(1);
  const Graph big = testing::random_graph(rng, 60, 0.5);
  const auto partial = search_valent(big, budget);
  EXPECT_FALSE(partial.exhausted);
  EXPECT_EQ(is_bivalent(big, budget), Verdict::Unknown);

  SearchOptions small = with(Alphabet::Bivalent);
  small.max_order = 10;
  EXPECT_THROW(search_valent(path(11), small), Error);
}

TEST(Search, Deterministic) {
  std::mt19937_64 rng(17);
  const Graph g = testing::random_connected_graph(rng, 9);
  const auto a = search_valent(g, with(Alphabet::Trivalent));
  const auto b = search_valent(g, with(Alphabet::Trivalent));
  EXPECT_EQ(a.certificates, b.certificates);
  EXPECT_TRUE(std::is_sorted(a.certificates.begin(), a.certificates.end()));
}

// Oracle equivalence on every connected graph with n <= 6; the acceptance
// suite extends this to n <= 8 and random n = 9..10.
TEST(Search, MatchesBruteForceSmallCorpus) {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    for (Alphabet a : {Alphabet::Bivalent, Alphabet::Trivalent}) {
      const auto fast = search_valent(g, with(a));
      const auto slow = brute_force_valent(g, with(a));
      ASSERT_TRUE(fast.exhausted);
      ASSERT_EQ(fast.certificates, slow.certificates) << write_graph6(g) << " " << to_string(a);
      for (const auto& c : fast.certificates) {
        ASSERT_TRUE(verify_eigenpair(g, c.valuation, c.lambda));
        ASSERT_EQ(c.valuation, normalize_sign(c.valuation));
        if (c.lambda > 0) {
          ASSERT_EQ(std::accumulate(c.valuation.begin(), c.valuation.end(), 0), 0);
        }
      }
    }
  }
}

TEST(Search, MatchesBruteForceOnDisconnectedGraphs) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 150; ++t) {
    const Graph g = testing::random_graph(rng, 2 + t % 8, 0.25);
    for (Alphabet a : {Alphabet::Bivalent, Alphabet::Trivalent}) {
      ASSERT_EQ(search_valent(g, with(a)).certificates, brute_force_valent(g, with(a)).certificates)
          << write_graph6(g);
    }
  }
}

TEST(Search, CertificatesInSpectrum) {
  for (const Graph& g : testing::connected_graphs(6)) {
    const auto s = jacobi_spectrum(laplacian_matrix(g));
    for (const auto& c : search_valent(g, with(Alphabet::Trivalent)).certificates) {
      EXPECT_TRUE(contains_eigenvalue(s, c.lambda, 1e-8));
    }
  }
}

}  // namespace
}  // namespace valent
