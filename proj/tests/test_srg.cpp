#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "srgswitch/srgswitch.hpp"

using namespace srgsw;

namespace {

Graph disjoint_triangles() {
  Graph g(6);
  for (std::size_t b : {0, 3}) {
    g.set_edge(b, b + 1);
    g.set_edge(b + 1, b + 2);
    g.set_edge(b, b + 2);
  }
  return g;
}

}  // namespace

TEST(VerifySrg, Classification) {
  EXPECT_EQ(verify_srg(complete_graph(4)).kind, SrgKind::CompleteOrEmpty);
  EXPECT_EQ(verify_srg(Graph(4)).kind, SrgKind::CompleteOrEmpty);
  EXPECT_EQ(verify_srg(cycle_graph(6)).kind, SrgKind::RegularNotSrg);
  Graph path(3);
  path.set_edge(0, 1);
  path.set_edge(1, 2);
  EXPECT_EQ(verify_srg(path).kind, SrgKind::NotRegular);

  const auto tri = verify_srg(disjoint_triangles());
  EXPECT_EQ(tri.kind, SrgKind::ImprimitiveSrg);
  EXPECT_EQ(*tri.params, (SrgParams{6, 2, 1, 0}));
  const auto k33 = verify_srg(complement(disjoint_triangles()));
  EXPECT_EQ(k33.kind, SrgKind::ImprimitiveSrg);
  EXPECT_EQ(*k33.params, (SrgParams{6, 3, 0, 3}));

  const auto c5 = verify_srg(cycle_graph(5));
  EXPECT_TRUE(c5.is_primitive_with({5, 2, 0, 1}));
}

TEST(VerifySrg, AgreesWithMatrixOracleOnRandomRegularish) {
  std::mt19937_64 rng(3);
  int srgs = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 4 + trial % 9;
    Graph g = oracle::random_graph(n, 0.5, rng);
    if (trial % 3 == 0) g = triangular_graph(4 + trial % 4);
    const auto ours = verify_srg(g);
    const auto ref = oracle::srg_params(g);
    const bool ours_srg = ours.kind == SrgKind::PrimitiveSrg || ours.kind == SrgKind::ImprimitiveSrg;
    const bool ref_srg = ref && ref->k > 0 && ref->k < ref->v - 1;
    ASSERT_EQ(ours_srg, ref_srg);
    if (ours_srg) {
      ++srgs;
      EXPECT_EQ(ours.params->k, ref->k);
      EXPECT_EQ(ours.params->lambda, ref->lambda);
      EXPECT_EQ(ours.params->mu, ref->mu);
    }
  }
  EXPECT_GT(srgs, 50);
}

TEST(Spectrum, KnownValues) {
  const auto t5 = derive_spectrum({10, 6, 3, 4});
  EXPECT_EQ(t5.theta1, 1);
  EXPECT_EQ(t5.theta2, -2);
  EXPECT_EQ(t5.m1, 4);
  EXPECT_EQ(t5.m2, 5);
  EXPECT_TRUE(t5.switchable);
  EXPECT_EQ(t5.rho, 3);

  const auto cc = derive_spectrum({16, 10, 6, 6});
  EXPECT_EQ(cc.theta1, 2);
  EXPECT_EQ(cc.theta2, -2);
  EXPECT_EQ(cc.m2, 10);
  EXPECT_EQ(cc.rho, 5);

  const auto ct8 = derive_spectrum({28, 15, 6, 10});
  EXPECT_EQ(ct8.theta1, 1);
  EXPECT_EQ(ct8.theta2, -5);
  EXPECT_EQ(ct8.m2, 7);
  EXPECT_EQ(ct8.rho, 3);

  EXPECT_FALSE(derive_spectrum({10, 3, 0, 1}).switchable);
}

// (A - theta1 I)(A - theta2 I) = mu J holds for a primitive SRG; checked by plain matrix products.
TEST(Spectrum, EigenvaluesAnnihilateByMatrixProduct) {
  for (const Graph& g : {triangular_graph(5), complement(clebsch_graph()), complement(triangular_graph(8)),
                         chang_graph(1), complement(chang_graph(2))}) {
    const auto s = spectrum_of(g);
    auto a = oracle::adjacency(g);
    const std::size_t n = a.size();
    auto shift = [&](std::int64_t t) {
      auto m = a;
      for (std::size_t i = 0; i < n; ++i) m[i][i] -= static_cast<int>(t);
      return m;
    };
    const auto prod = oracle::multiply(shift(s.theta1), shift(s.theta2));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(prod[i][j], s.params.mu);
    EXPECT_EQ(1 + s.m1 + s.m2, s.params.v);
    EXPECT_EQ(s.params.k + s.m1 * s.theta1 + s.m2 * s.theta2, 0);  // trace of A
  }
}

TEST(Spectrum, Errors) {
  EXPECT_THROW(derive_spectrum({10, 3, 0, 2}), ParameterError);    // infeasible
  EXPECT_THROW(derive_spectrum({6, 2, 1, 0}), ParameterError);     // mu = 0
  EXPECT_THROW(derive_spectrum({6, 3, 0, 3}), ParameterError);     // mu = k
  EXPECT_THROW(derive_spectrum({5, 4, 3, 0}), ParameterError);     // complete
  EXPECT_THROW(derive_spectrum({5, 2, 0, 1}), UnsupportedSpectrum);
  EXPECT_THROW(derive_spectrum({13, 6, 2, 3}), UnsupportedSpectrum);
  EXPECT_THROW(require_switchable(derive_spectrum({10, 3, 0, 1})), PreconditionError);
  EXPECT_THROW(spectrum_of(cycle_graph(6)), PreconditionError);
}

TEST(Eigenmatrices, ProductIsVTimesIdentity) {
  for (const auto& p : kSwitchableCatalog) {
    const auto s = derive_spectrum(p);
    const auto e = eigenmatrices(s);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Rational sum(0);
        for (int l = 0; l < 3; ++l) sum = sum + Rational(e.P[i][l]) * e.Q[l][j];
        EXPECT_EQ(sum, Rational(i == j ? p.v : 0)) << p;
      }
  }
}

TEST(Catalog, EveryTupleIsSwitchable) {
  std::set<SrgParams> distinct(kSwitchableCatalog.begin(), kSwitchableCatalog.end());
  EXPECT_EQ(distinct.size(), kSwitchableCatalog.size());
  for (const auto& p : kSwitchableCatalog) {
    EXPECT_TRUE(p.feasible()) << p;
    const auto s = derive_spectrum(p);
    EXPECT_TRUE(s.switchable) << p;
    EXPECT_EQ(s.theta1, p.k - p.v / 2) << p;
    EXPECT_EQ(s.theta2, p.k - 2 * p.mu) << p;
  }
}
