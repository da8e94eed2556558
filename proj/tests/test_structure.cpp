#include <algorithm>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "mingen/mingen.hpp"
#include "oracle.hpp"

using namespace mingen;

namespace {

std::vector<std::size_t> orders(const std::vector<Subgroup>& hs) {
  std::vector<std::size_t> out;
  for (const auto& h : hs)
    out.push_back(h.order());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> elems(const Subgroup& H) { return {H.elements().begin(), H.elements().end()}; }

Element find(const Group& G, const Perm& p) { return *G.find_permutation(p); }

}  // namespace

TEST(NormalClosure, Examples) {
  auto S3 = enumerate_permutation_group(symmetric_perm(3));
  EXPECT_EQ(normal_closure(S3, {find(S3, from_cycles(3, {{0, 1}}))}).order(), 6u);
  EXPECT_EQ(normal_closure(S3, {find(S3, from_cycles(3, {{0, 1, 2}}))}).order(), 3u);
  EXPECT_EQ(normal_closure(S3, {0}).order(), 1u);
  auto H = normal_closure(S3, {find(S3, from_cycles(3, {{0, 1, 2}}))});
  EXPECT_EQ(H.is_normal(), true);
  EXPECT_TRUE(is_normal_subgroup(S3, H));
}

TEST(NormalClosure, MatchesOracle) {
  for (const char* spec : {"symmetric 4", "dihedral 8", "quaternion", "wreath (cyclic 3) (cyclic 2)"}) {
    auto G = corpus::group(spec);
    auto T = corpus::table(G);
    for (Element x = 0; x < G.order(); ++x)
      EXPECT_EQ(elems(normal_closure(G, {x})), oracle::normal_closure(T, {x})) << spec;
  }
}

TEST(MinimalNormal, Examples) {
  auto S3 = corpus::group("symmetric 3");
  auto m = minimal_normal_subgroups(S3);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].order(), 3u);

  EXPECT_EQ(orders(minimal_normal_subgroups(cyclic_table(6))), (std::vector<std::size_t>{2, 3}));

  auto A5 = corpus::group("alternating 5");
  auto a = minimal_normal_subgroups(A5);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].order(), 60u);

  try {
    minimal_normal_subgroups(Group());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::trivial_group);
  }
}

TEST(MinimalNormal, IncomparableAndMinimalAgainstOracle) {
  for (const auto& spec : corpus::small_groups()) {
    auto G = corpus::group(spec);
    if (G.is_trivial())
      continue;
    auto T = corpus::table(G);
    auto mine = minimal_normal_subgroups(G);
    for (std::size_t i = 0; i < mine.size(); ++i)
      for (std::size_t j = 0; j < mine.size(); ++j)
        if (i != j) {
          EXPECT_FALSE(mine[i].is_subset_of(mine[j])) << spec;
        }
    std::set<std::vector<std::uint32_t>> got, want;
    for (const auto& m : mine)
      got.insert(elems(m));
    for (const auto& m : oracle::minimal_normal_subgroups(T))
      want.insert(m);
    EXPECT_EQ(got, want) << spec;
  }
}

TEST(MinimalNormal, SolvableGroupsHaveAbelianMinimalNormals) {
  for (const auto& spec : corpus::small_groups()) {
    auto G = corpus::group(spec);
    if (G.is_trivial() || !is_solvable(G))
      continue;
    for (const auto& N : minimal_normal_subgroups(G))
      EXPECT_TRUE(is_abelian(G, N)) << spec;
  }
}

TEST(Lattice, Examples) {
  EXPECT_EQ(orders(normal_subgroup_lattice(cyclic_table(6))), (std::vector<std::size_t>{1, 2, 3, 6}));
  EXPECT_EQ(orders(normal_subgroup_lattice(corpus::group("symmetric 4"))), (std::vector<std::size_t>{1, 4, 12, 24}));
  EXPECT_EQ(orders(normal_subgroup_lattice(corpus::group("alternating 5"))), (std::vector<std::size_t>{1, 60}));
}

TEST(Lattice, MatchesOracle) {
  for (const char* spec : {"elementary_abelian 2 3", "dihedral 4", "quaternion", "direct_product (symmetric 3) (cyclic 2)",
                           "direct_product (cyclic 6) (cyclic 6)", "wreath (cyclic 2) (cyclic 2)"}) {
    auto G = corpus::group(spec);
    std::set<std::vector<std::uint32_t>> got;
    for (const auto& H : normal_subgroup_lattice(G))
      got.insert(elems(H));
    auto want = oracle::normal_subgroups(corpus::table(G));
    EXPECT_EQ(got, std::set<std::vector<std::uint32_t>>(want.begin(), want.end())) << spec;
  }
}

TEST(Lattice, CapIsEnforced) {
  try {
    normal_subgroup_lattice(elementary_abelian_table(2, 4), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::lattice_too_large);
  }
}

TEST(MaximalNormalIntersection, Examples) {
  EXPECT_EQ(maximal_normal_intersection(corpus::group("symmetric 3")).order(), 3u);
  EXPECT_EQ(maximal_normal_intersection(corpus::group("alternating 5")).order(), 1u);
  EXPECT_EQ(maximal_normal_intersection(cyclic_table(6)).order(), 1u);
  EXPECT_EQ(maximal_normal_intersection(cyclic_table(4)).order(), 2u);
  EXPECT_THROW(maximal_normal_intersection(Group()), Error);
}

TEST(ChiefSeries, Examples) {
  auto s4 = chief_series(corpus::group("symmetric 4"));
  EXPECT_EQ(s4.layer_orders(), (std::vector<std::size_t>{2, 3, 4}));
  auto s5 = chief_series(corpus::group("symmetric 5"));
  EXPECT_EQ(s5.layer_orders(), (std::vector<std::size_t>{2, 60}));
  EXPECT_FALSE(s5.layers[1].abelian);
  EXPECT_TRUE(s5.layers[0].abelian);
  auto triv = chief_series(Group());
  EXPECT_EQ(triv.length(), 0u);
  EXPECT_EQ(triv.groups.size(), 1u);
}

TEST(ChiefSeries, LayersAreMinimalNormalInQuotients) {
  for (const auto& spec : corpus::small_groups()) {
    auto G = corpus::group(spec);
    auto cs = chief_series(G);
    ASSERT_EQ(cs.groups.front().order(), G.order());
    ASSERT_EQ(cs.groups.back().order(), 1u);
    auto T = corpus::table(G);
    for (std::size_t i = 0; i + 1 < cs.groups.size(); ++i) {
      const auto& upper = cs.groups[i];
      const auto& lower = cs.groups[i + 1];
      EXPECT_TRUE(lower.is_subset_of(upper));
      EXPECT_LT(lower.order(), upper.order());
      EXPECT_TRUE(oracle::is_normal(T, elems(upper))) << spec;
      EXPECT_EQ(cs.layers[i].order, upper.order() / lower.order());
      // upper/lower is minimal normal in G/lower: no normal subgroup strictly between
      for (const auto& M : oracle::normal_subgroups(T)) {
        bool between = oracle::subset(elems(lower), M) && oracle::subset(M, elems(upper)) &&
                       M.size() != lower.order() && M.size() != upper.order();
        EXPECT_FALSE(between) << spec;
      }
      // layer generators together with lower generate upper
      std::vector<Element> gens(lower.generators().begin(), lower.generators().end());
      gens.insert(gens.end(), cs.layers[i].layer_generators.begin(), cs.layers[i].layer_generators.end());
      EXPECT_EQ(closure(G, gens).order(), upper.order());
    }
  }
}

TEST(ChiefSeries, LayerMultisetIndependentOfTieBreaking) {
  for (const char* spec : {"symmetric 4", "direct_product (cyclic 6) (cyclic 6)", "elementary_abelian 2 4",
                           "direct_product (alternating 4) (cyclic 2)"}) {
    auto G = corpus::group(spec);
    auto ref = chief_series(G).layer_orders();
    std::sort(ref.begin(), ref.end());
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      auto got = chief_series(G, TieBreak(seed)).layer_orders();
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, ref) << spec << " seed " << seed;
    }
  }
}

TEST(Classify, Examples) {
  auto s4 = classify(corpus::group("symmetric 4"));
  EXPECT_FALSE(s4.abelian);
  EXPECT_FALSE(s4.simple);
  EXPECT_TRUE(s4.solvable);
  auto a5 = classify(corpus::group("alternating 5"));
  EXPECT_FALSE(a5.abelian);
  EXPECT_TRUE(a5.simple);
  EXPECT_FALSE(a5.solvable);
  auto z6 = classify(cyclic_table(6));
  EXPECT_TRUE(z6.abelian);
  EXPECT_FALSE(z6.simple);
  EXPECT_TRUE(z6.solvable);
  EXPECT_TRUE(classify(cyclic_table(7)).simple);
  EXPECT_FALSE(classify(Group()).simple);
}

TEST(Classify, AbelianMatchesOracle) {
  for (const auto& spec : corpus::small_groups()) {
    auto G = corpus::group(spec);
    EXPECT_EQ(is_abelian(G), oracle::is_abelian(corpus::table(G))) << spec;
  }
}

TEST(CenterDerived, Examples) {
  auto S3 = corpus::group("symmetric 3");
  EXPECT_EQ(center(S3).order(), 1u);
  EXPECT_EQ(derived_subgroup(S3).order(), 3u);
  EXPECT_EQ(center(cyclic_table(6)).order(), 6u);
  EXPECT_EQ(derived_subgroup(cyclic_table(6)).order(), 1u);
  EXPECT_EQ(center(quaternion_table()).order(), 2u);
  EXPECT_EQ(derived_subgroup(quaternion_table()).order(), 2u);
  EXPECT_EQ(derived_subgroup(corpus::group("symmetric 4")).order(), 12u);
  EXPECT_EQ(derived_subgroup(corpus::group("alternating 4")).order(), 4u);
}

TEST(CenterDerived, MatchOracleScan) {
  for (const auto& spec : corpus::small_groups()) {
    auto G = corpus::group(spec);
    auto T = corpus::table(G);
    std::vector<std::uint32_t> z, comms;
    for (std::uint32_t x = 0; x < T.n; ++x) {
      bool central = true;
      for (std::uint32_t y = 0; y < T.n && central; ++y)
        central = T.mul(x, y) == T.mul(y, x);
      if (central)
        z.push_back(x);
    }
    for (std::uint32_t x = 0; x < T.n; ++x)
      for (std::uint32_t y = 0; y < T.n; ++y)
        comms.push_back(T.mul(T.mul(oracle::inverse(T, x), oracle::inverse(T, y)), T.mul(x, y)));
    EXPECT_EQ(elems(center(G)), z) << spec;
    EXPECT_EQ(elems(derived_subgroup(G)), oracle::closure(T, comms)) << spec;
  }
}

TEST(Socle, Examples) {
  EXPECT_EQ(socle(corpus::group("symmetric 4")).order(), 4u);
  EXPECT_EQ(socle(cyclic_table(6)).order(), 6u);
  EXPECT_EQ(socle(corpus::group("alternating 5")).order(), 60u);
  EXPECT_THROW(socle(Group()), Error);
}

TEST(Socle, IsJoinOfMinimalNormals) {
  for (const auto& spec : corpus::small_groups()) {
    auto G = corpus::group(spec);
    if (G.is_trivial())
      continue;
    auto T = corpus::table(G);
    std::vector<std::uint32_t> all;
    for (const auto& m : oracle::minimal_normal_subgroups(T))
      all.insert(all.end(), m.begin(), m.end());
    EXPECT_EQ(elems(socle(G)), oracle::closure(T, all)) << spec;
  }
}

TEST(AbelianBasis, Examples) {
  EXPECT_EQ(abelian_basis(elementary_abelian_table(2, 2)).size(), 2u);
  EXPECT_EQ(abelian_basis(cyclic_table(6)).size(), 1u);
  EXPECT_TRUE(abelian_basis(Group()).empty());
  try {
    abelian_basis(corpus::group("symmetric 3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_abelian);
  }
}

TEST(AbelianBasis, SizeIsMinimumGeneratingSetSize) {
  for (const auto& spec : corpus::small_groups()) {
    auto G = corpus::group(spec);
    if (!is_abelian(G))
      continue;
    auto b = abelian_basis(G);
    EXPECT_TRUE(is_generating_set(b, G)) << spec;
    EXPECT_EQ(b.size(), oracle::min_gen(corpus::table(G)).d) << spec;
  }
}

TEST(Decompose, ProductOfTwoA5) {
  auto G = corpus::group("direct_product (alternating 5) (alternating 5)");
  ASSERT_EQ(G.order(), 3600u);
  auto f = decompose_product_of_simples(G);
  EXPECT_EQ(orders(f.factors), (std::vector<std::size_t>{60, 60}));
  for (auto k : f.kinds)
    EXPECT_EQ(k, FactorKind::nonabelian_simple);
}

TEST(Decompose, AbelianFactorsSortedNonIncreasing) {
  auto G = to_group(direct_product_fixture(make_fixture("cyclic 6"), make_fixture("cyclic 2")));
  auto f = decompose_product_of_simples(G);
  std::vector<std::size_t> got;
  for (const auto& F : f.factors)
    got.push_back(F.order());
  EXPECT_EQ(got, (std::vector<std::size_t>{3, 2, 2}));
}

TEST(Decompose, RejectsNonProducts) {
  for (const char* spec : {"symmetric 4", "cyclic 4", "quaternion", "symmetric 3"}) {
    try {
      decompose_product_of_simples(corpus::group(spec));
      FAIL() << spec;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::not_product_of_simples) << spec;
    }
  }
}

TEST(Decompose, FactorsAreSimpleAndMultiplyOut) {
  for (const auto& spec : corpus::small_groups()) {
    auto G = corpus::group(spec);
    SimpleFactorization f;
    try {
      f = decompose_product_of_simples(G);
    } catch (const Error&) {
      continue;
    }
    std::uint64_t product = 1;
    for (const auto& F : f.factors) {
      product *= F.order();
      EXPECT_TRUE(is_simple(Group::from_subgroup(G, F.elements()))) << spec;
    }
    EXPECT_EQ(product, G.order()) << spec;
  }
}
