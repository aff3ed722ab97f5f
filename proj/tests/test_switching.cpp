#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "srgswitch/srgswitch.hpp"

using namespace srgsw;

namespace {

bits::Set mask_set(std::uint64_t m, std::size_t n) {
  bits::Set s(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((m >> i) & 1U) s.insert(i);
  return s;
}

}  // namespace

TEST(SwitchingSet, ParseAndFormat) {
  const auto h = SwitchingSet::parse("7, 3,5");
  EXPECT_EQ(h.str(), "3,5,7");
  EXPECT_TRUE(SwitchingSet::parse("").empty());
  EXPECT_THROW(SwitchingSet::parse("1,1"), ParseError);
  EXPECT_THROW(SwitchingSet::parse("1,x"), ParseError);
  EXPECT_THROW(SwitchingSet::parse("-1"), ParseError);
  EXPECT_THROW(h.mask(7), ParameterError);
  EXPECT_EQ(SwitchingSet::from_mask(0b1010), SwitchingSet::parse("1,3"));
}

TEST(Switching, InvolutionAndComplementCommute) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + trial % 40;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const auto h = SwitchingSet::from_mask(rng() & ((std::uint64_t{1} << n) - 1));
    EXPECT_EQ(switch_graph(switch_graph(g, h), h), g);
    EXPECT_EQ(switch_graph(complement(g), h), complement(switch_graph(g, h)));
    EXPECT_EQ(SeidelMatrix(switch_graph(g, h)), SeidelMatrix(g).conjugated(h));
    // switching on H or on its complement gives the same graph
    std::vector<Vertex> rest;
    const auto m = h.mask(n);
    for (std::size_t i = 0; i < n; ++i)
      if (!m.contains(i)) rest.push_back(static_cast<Vertex>(i));
    EXPECT_EQ(switch_graph(g, SwitchingSet(rest)), switch_graph(g, h));
  }
}

TEST(Thm1, EdgeCases) {
  const Graph g = triangular_graph(5);
  const auto s = spectrum_of(g);
  EXPECT_TRUE(check_thm1(g, s, bits::Set(10)));
  EXPECT_TRUE(check_thm1(g, s, mask_set(0x3FF, 10)));
  EXPECT_FALSE(check_thm1(g, s, mask_set(0b111, 10)));  // odd size, v even
  EXPECT_THROW(check_thm1(cycle_graph(5), SwitchingSet{}), UnsupportedSpectrum);
  EXPECT_THROW(check_thm1(petersen_graph(), SwitchingSet{}), PreconditionError);
  EXPECT_THROW(check_thm1(g, derive_spectrum({16, 10, 6, 6}), bits::Set(10)), PreconditionError);
}

// Parameters preserved, counted by matrix squaring, exactly on the predicate.
TEST(Thm1, ExhaustiveOnT5AgainstMatrixOracle) {
  const Graph g = triangular_graph(5);
  const auto s = spectrum_of(g);
  int hits = 0;
  for (std::uint64_t m = 0; m < 1024; ++m) {
    const auto h = mask_set(m, 10);
    const bool same = oracle::srg_params(g.switched(h)) == oracle::Params{10, 6, 3, 4};
    ASSERT_EQ(same, check_thm1(g, s, h)) << m;
    hits += same;
  }
  EXPECT_GT(hits, 2);
}

TEST(Thm2, T5GivesPetersen) {
  const Graph g = triangular_graph(5);
  const auto s = spectrum_of(g);
  EXPECT_EQ(thm2_target(s.params), (SrgParams{10, 3, 0, 1}));
  int found = 0;
  for (std::uint64_t m = 0; m < 1024; ++m) {
    const auto h = mask_set(m, 10);
    const auto c = check_thm2(g, s, h);
    const bool petersen = oracle::srg_params(g.switched(h)) == oracle::Params{10, 3, 0, 1};
    ASSERT_EQ(c.has_value(), petersen) << m;
    if (c) {
      EXPECT_EQ(*c, -3);
      EXPECT_TRUE(oracle::find_isomorphism(g.switched(h), petersen_graph()));
      ++found;
    }
  }
  EXPECT_GT(found, 0);
}

TEST(Thm2, DegreeRelationsAtHalf) {
  const SrgParams p{16, 10, 6, 6};
  const auto [w1, w2] = thm2_degree_relations(p, 8);
  EXPECT_EQ(w1, Rational(4));
  EXPECT_EQ(w2, Rational(4));
  const auto [a, b] = thm2_degree_relations(p, 6);
  EXPECT_EQ(a, Rational(3));
  EXPECT_EQ(b, Rational(5));
}

// The two-part regularity rule holds exactly when the switched graph is strongly
// regular with either parameter set; the half-adjacency rule exactly for the same set.
TEST(BoseShrikhande, ExhaustiveCrossCheck) {
  for (const Graph& g : {triangular_graph(5), complement(clebsch_graph())}) {
    const auto s = spectrum_of(g);
    const std::size_t n = g.order();
    int other = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const auto h = mask_set(m, n);
      const auto cls = verify_srg(g.switched(h));
      const bool same = cls.is_primitive_with(s.params);
      const bool any = same || cls.is_primitive_with(thm2_target(s.params));
      other += any && !same;
      ASSERT_EQ(bose_shrikhande_check(g, s.params, h), any) << m;
      ASSERT_EQ(half_adjacency_check(g, h), same) << m;
      ASSERT_EQ(check_thm1(g, s, h), same) << m;
    }
    EXPECT_GT(other, 0);
  }
}

TEST(BoseShrikhande, Precondition) {
  EXPECT_THROW(bose_shrikhande_check(lattice_graph(6), SwitchingSet{}), PreconditionError);
}

TEST(Quotient, EquitableOnSwitchingSets) {
  const Graph g = complement(triangular_graph(8));
  const auto s = spectrum_of(g);
  const auto sets = collect_sets(g, s, SetStrategy::brute(8));
  ASSERT_FALSE(sets.empty());
  for (const auto& h : sets) {
    const auto q = quotient_matrix(g, h);
    EXPECT_TRUE(q.equitable);
    const auto ev = q.eigenvalues();
    ASSERT_TRUE(ev);
    EXPECT_EQ(ev->first, Rational(s.params.k));
    EXPECT_EQ(ev->second, Rational(s.theta1));
  }
  EXPECT_THROW(quotient_matrix(g, SwitchingSet{}), ParameterError);
}

TEST(TwoGraph, TriplesFormTwoGraphAndAreSwitchingInvariant) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 5 + trial % 12;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const auto t = two_graph(g);
    EXPECT_TRUE(is_two_graph(n, t.triples));
    const auto h = SwitchingSet::from_mask(rng() & ((std::uint64_t{1} << n) - 1));
    EXPECT_EQ(two_graph(switch_graph(g, h)).triples, t.triples);
  }
  std::vector<std::array<Vertex, 3>> lone{{0, 1, 2}};
  EXPECT_FALSE(is_two_graph(4, lone));
  EXPECT_THROW(is_two_graph(41, lone), ResourceError);
}

// Triples through each pair counted directly.
TEST(TwoGraph, RegularityMatchesDirectCount) {
  for (const Graph& g : {triangular_graph(5), complement(clebsch_graph()), complement(triangular_graph(8))}) {
    const auto t = two_graph(g);
    ASSERT_TRUE(t.regular);
    const std::size_t n = g.order();
    std::vector<std::int64_t> through(n * n, 0);
    for (const auto& tr : t.triples) {
      ++through[tr[0] * n + tr[1]];
      ++through[tr[0] * n + tr[2]];
      ++through[tr[1] * n + tr[2]];
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) ASSERT_EQ(through[x * n + y], *t.regular);
  }
  EXPECT_FALSE(two_graph_regularity(cycle_graph(7)));
}

TEST(TwoGraph, SeidelEigenvalues) {
  EXPECT_EQ(seidel_spectrum_check(triangular_graph(5)), (std::pair<std::int64_t, std::int64_t>{3, -3}));
  EXPECT_EQ(seidel_spectrum_check(complement(clebsch_graph())), (std::pair<std::int64_t, std::int64_t>{3, -5}));
  EXPECT_EQ(seidel_spectrum_check(complement(triangular_graph(8))), (std::pair<std::int64_t, std::int64_t>{9, -3}));
  // a non-regular member of the class keeps the Seidel spectrum
  const Graph g = switch_graph(triangular_graph(5), SwitchingSet::parse("0,4,9"));
  EXPECT_FALSE(is_regular(g));
  EXPECT_EQ(seidel_spectrum_check(g), (std::pair<std::int64_t, std::int64_t>{3, -3}));
  EXPECT_FALSE(seidel_spectrum_check(cycle_graph(7)));
}
