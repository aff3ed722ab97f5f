#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "srgswitch/srgswitch.hpp"

using namespace srgsw;

namespace {

Graph prism(std::size_t k) {
  Graph g(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    g.set_edge(i, (i + 1) % k);
    g.set_edge(k + i, k + (i + 1) % k);
    g.set_edge(i, k + i);
  }
  return g;
}

}  // namespace

TEST(Canon, GroupOrdersMatchExhaustiveCount) {
  for (const Graph& g : {cycle_graph(5), complete_graph(4), petersen_graph(), triangular_graph(5), prism(5),
                         shrikhande_graph(), lattice_graph(4), cycle_graph(12), Graph(6)}) {
    const auto grp = automorphisms(g);
    EXPECT_EQ(grp.order, BigInt(oracle::all_automorphisms(g).size())) << graph6::encode(g);
    for (const auto& gamma : grp.generators) EXPECT_TRUE(is_isomorphism(g, g, gamma));
  }
}

TEST(Canon, KnownGroupOrders) {
  EXPECT_EQ(automorphisms(complement(clebsch_graph())).order, BigInt(1920));
  EXPECT_EQ(automorphisms(complement(triangular_graph(8))).order, BigInt(40320));
  EXPECT_EQ(automorphisms(chang_graph(1)).order, BigInt(384));
  EXPECT_EQ(automorphisms(chang_graph(2)).order, BigInt(96));
  EXPECT_EQ(automorphisms(chang_graph(3)).order, BigInt(360));
  EXPECT_EQ(automorphisms(paley_graph(29)).order, BigInt(29 * 14));
}

TEST(Canon, InvariantUnderRelabeling) {
  std::mt19937_64 rng(21);
  std::vector<Graph> graphs{complement(triangular_graph(8)), chang_graph(2), shrikhande_graph(), paley_graph(37)};
  for (int i = 0; i < 5; ++i) graphs.push_back(oracle::random_graph(40 + i, 0.3, rng));
  for (const auto& g : graphs) {
    const auto f = canonical_form(g);
    const auto cg = graph6::encode(canonical_graph(g, f));
    for (int t = 0; t < 20; ++t) {
      const auto perm = oracle::random_permutation(g.order(), rng);
      const Graph h = relabel(g, perm);
      const auto fh = canonical_form(h);
      ASSERT_EQ(fh.key, f.key);
      ASSERT_EQ(fh.digest, f.digest);
      ASSERT_EQ(graph6::encode(canonical_graph(h, fh)), cg);
    }
  }
}

// Equal keys exactly when the factorial brute-force forms agree.
TEST(Canon, AgreesWithFactorialBruteForce) {
  std::mt19937_64 rng(4);
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<Graph> gs;
    for (int i = 0; i < 25; ++i) gs.push_back(oracle::random_graph(n, 0.5, rng));
    std::map<std::string, std::set<std::vector<bits::Word>>> by_brute;
    std::map<std::vector<bits::Word>, std::set<std::string>> by_key;
    for (const auto& g : gs) {
      const auto b = oracle::brute_canon(g);
      const auto k = canonical_form(g).key.words;
      by_brute[b].insert(k);
      by_key[k].insert(b);
    }
    for (const auto& [b, keys] : by_brute) EXPECT_EQ(keys.size(), 1U) << n;
    for (const auto& [k, bs] : by_key) EXPECT_EQ(bs.size(), 1U) << n;
  }
}

TEST(Canon, CanonicalGraphIsIsomorphic) {
  const Graph g = chang_graph(3);
  const auto f = canonical_form(g);
  const Graph c = canonical_graph(g, f);
  Permutation map(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) map[f.ordering[i]] = static_cast<Vertex>(i);
  EXPECT_TRUE(is_isomorphism(g, c, map));
  EXPECT_EQ(canonical_form(c).key, f.key);
}

TEST(Iso, SameParameterNonIsomorphicPairs) {
  EXPECT_FALSE(are_isomorphic(lattice_graph(4), shrikhande_graph()));
  EXPECT_FALSE(oracle::find_isomorphism(lattice_graph(4), shrikhande_graph()));
  EXPECT_FALSE(are_isomorphic(petersen_graph(), prism(5)));
  EXPECT_FALSE(oracle::find_isomorphism(petersen_graph(), prism(5)));
  EXPECT_FALSE(are_isomorphic(chang_graph(1), chang_graph(2)));
  EXPECT_FALSE(are_isomorphic(cycle_graph(5), cycle_graph(6)));
}

TEST(Iso, FindsVerifiedMapping) {
  std::mt19937_64 rng(8);
  const Graph g = complement(clebsch_graph());
  const auto perm = oracle::random_permutation(16, rng);
  const Graph h = relabel(g, perm);
  const auto m = are_isomorphic(g, h);
  ASSERT_TRUE(m);
  EXPECT_TRUE(is_isomorphism(g, h, *m));
}

TEST(Digest, HexAndSensitivity) {
  const auto a = canonical_form(cycle_graph(5)).digest;
  const auto b = canonical_form(complete_graph(5)).digest;
  EXPECT_EQ(a.hex().size(), 32U);
  EXPECT_NE(a, b);
  // same bits, different order: keys and digests differ
  EXPECT_NE(canonical_form(Graph(3)).digest, canonical_form(Graph(4)).digest);
}

// Orbits of the thm1 switching sets of T(5) under the full automorphism group.
TEST(Orbits, MatchFullGroupAction) {
  const Graph g = triangular_graph(5);
  const auto s = spectrum_of(g);
  const auto sets = collect_sets(g, s, SetStrategy::brute(10));
  const auto orbits = orbit_reps(g, sets);
  const auto group = oracle::all_automorphisms(g);
  ASSERT_EQ(orbits.orbit_of.size(), sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) {
      bool related = false;
      for (const auto& gamma : group) {
        std::vector<Vertex> img;
        for (Vertex x : sets[i].vertices()) img.push_back(gamma[x]);
        if (SwitchingSet(img) == sets[j]) {
          related = true;
          break;
        }
      }
      ASSERT_EQ(related, orbits.orbit_of[i] == orbits.orbit_of[j]) << sets[i].str() << " " << sets[j].str();
    }
  std::set<std::size_t> distinct(orbits.orbit_of.begin(), orbits.orbit_of.end());
  EXPECT_EQ(distinct.size(), orbits.representatives.size());
}
