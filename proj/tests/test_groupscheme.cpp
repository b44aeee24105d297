#include <gtest/gtest.h>

#include <set>

#include "padic/groupscheme.hpp"

using namespace padic;

namespace {

ResidueVec rv(int level, std::vector<std::int64_t> c) { return {level, std::move(c)}; }

}  // namespace

TEST(Catalog, NamesAndValidation) {
  for (const std::string& name : catalog_names()) {
    const DatumPtr g = make_datum(name);
    EXPECT_EQ(g->name(), name);
    EXPECT_TRUE(validate_datum(*g, 30, 99).ok()) << name;
  }
  EXPECT_NO_THROW(make_datum("glnxgln:3"));
  EXPECT_THROW(make_datum("sl2"), Error);
}

TEST(Catalog, Dimensions) {
  EXPECT_EQ(make_datum("gl1")->dim(), 1);
  EXPECT_EQ(make_datum("glnxgln:2")->dim(), 4);
  EXPECT_EQ(make_datum("glnxgln:2")->h_dim(), 8);
  EXPECT_EQ(make_datum("glnxgln:2")->deg_nu_central(), 2);
  EXPECT_EQ(make_datum("scaled-adjoint-gl2")->h_dim(), 5);
  EXPECT_FALSE(make_datum("scaled-adjoint-gl2")->has_open_orbit());
  EXPECT_TRUE(make_datum("glnxgln:2")->has_open_orbit());
}

TEST(Catalog, QuasiInvarianceOnRandomElements) {
  std::mt19937_64 rng(2);
  for (const std::string& name : catalog_names()) {
    const DatumPtr g = make_datum(name);
    for (int i = 0; i < 20; ++i) {
      const RatElement h = random_rat_element(*g, rng, false, 3);
      const LatticeVector x = g->base_point();
      // P(h^{-1} X) = ν(h)^{-1} P(X)
      EXPECT_EQ(g->P(g->act_rational(rat_inverse(*g, h), x)) * g->nu(h), g->P(x)) << name;
      // <hX, θ(h)Y> = <X, Y>
      const LatticeVector y = g->act_rational(random_rat_element(*g, rng, false, 3), x);
      EXPECT_EQ(pairing(g->act_rational(h, x), g->gram(), g->act_rational(g->theta(h), y)),
                pairing(x, g->gram(), y))
          << name;
    }
  }
}

TEST(Enumeration, Orders) {
  const DatumPtr gl1 = make_datum("gl1");
  EXPECT_EQ(enumerate_group(*gl1, 2, 3, 1000).size(), 4u);
  EXPECT_EQ(group_order(*gl1, 3, 2), 6);
  const DatumPtr gl2 = make_datum("glnxgln:2");
  EXPECT_EQ(gl_order(2, 2, 2), 96);
  EXPECT_EQ(group_order(*gl2, 2, 2), 96 * 96);
  const DatumPtr sa = make_datum("scaled-adjoint-gl2");
  EXPECT_EQ(enumerate_group(*sa, 2, 1, 1000).size(), 6u);
}

TEST(Enumeration, ElementsAreDistinctAndInvertible) {
  const DatumPtr g = make_datum("glnxgln:2");
  const auto all = enumerate_group(*g, 2, 1, 1000);
  std::set<GroupElement> seen(all.begin(), all.end());
  EXPECT_EQ(seen.size(), 36u);
  for (const auto& h : all) {
    const GroupElement one = res_mul(*g, h, res_inverse(*g, h, 2), 2);
    EXPECT_EQ(one, reduce_element(*g, rat_identity(*g), 2));
  }
}

TEST(Enumeration, BudgetIsEnforced) {
  const DatumPtr g = make_datum("glnxgln:2");
  EXPECT_THROW(enumerate_group(*g, 2, 2, 1000), Error);
}

TEST(ReductionKernel, Orders) {
  EXPECT_EQ(reduction_kernel_order(*make_datum("gl1"), 3, 2, 1), 3);
  EXPECT_EQ(gl_order(2, 2, 2) / gl_order(2, 2, 1), 16);
  EXPECT_EQ(reduction_kernel_order(*make_datum("scaled-adjoint-gl2"), 2, 2, 1), 32);
  EXPECT_EQ(reduction_kernel_order(*make_datum("glnxgln:2"), 3, 3, 1), ipow(3, 16));
}

TEST(LieQuotient, CountsAndBijection) {
  const DatumPtr g = make_datum("glnxgln:2");
  EXPECT_EQ(lie_quotient_elements(*g, 2).size(), 256u);
  EXPECT_TRUE(lie_bijection_check(*g, 2, 2, default_budget()));
  EXPECT_TRUE(lie_bijection_check(*make_datum("gl1"), 3, 2, default_budget()));
  EXPECT_TRUE(lie_bijection_check(*make_datum("scaled-adjoint-gl2"), 2, 2, default_budget()));
}

TEST(LieQuotient, GL1KernelIsOnePlusPZ) {
  // Id + 3ξ for ξ ∈ F_3 gives {1, 4, 7} mod 9.
  const DatumPtr g = make_datum("gl1");
  std::set<std::int64_t> lifts;
  for (const auto& xi : lie_quotient_elements(*g, 3)) lifts.insert(1 + 3 * xi[0]);
  EXPECT_EQ(lifts, (std::set<std::int64_t>{1, 4, 7}));
}

TEST(Stabilizer, Examples) {
  const DatumPtr gl1 = make_datum("gl1");
  EXPECT_EQ(stabilizer_order(*gl1, rv(3, {5}), 2, 1000), 1);
  EXPECT_EQ(stabilizer_order(*gl1, rv(3, {0}), 2, 1000), 4);
  const DatumPtr gl2 = make_datum("glnxgln:2");
  EXPECT_EQ(stabilizer_order(*gl2, rv(2, {1, 0, 0, 1}), 2, default_budget()), 96);
}

TEST(Stabilizer, OrbitStabilizerCounting) {
  for (const std::string& name : catalog_names()) {
    const DatumPtr g = make_datum(name);
    for (int m : {1, 2}) {
      const std::int64_t order = static_cast<std::int64_t>(group_order(*g, 2, m).get_si());
      std::int64_t total = 0;
      for (const ShellOrbit& o : orbit_decompose_shell(*g, 2, m, default_budget())) {
        EXPECT_EQ(o.size * o.stabilizer, order) << name;
        total += o.size;
      }
      EXPECT_EQ(total, primitive_count(g->dim(), 2, m)) << name;
    }
  }
}

TEST(Orbits, GL2SquaredShellModTwo) {
  const auto orbits = orbit_decompose_shell(*make_datum("glnxgln:2"), 2, 1, default_budget());
  std::multiset<std::int64_t> sizes;
  for (const auto& o : orbits) sizes.insert(o.size);
  EXPECT_EQ(sizes, (std::multiset<std::int64_t>{6, 9}));
}

TEST(Orbits, GL1ShellIsOneOrbit) {
  for (long p : {2L, 3L, 5L})
    for (int m : {1, 2, 3}) EXPECT_EQ(orbit_decompose_shell(*make_datum("gl1"), p, m, default_budget()).size(), 1u);
}

TEST(Primitive, Counts) {
  EXPECT_EQ(primitive_count(4, 2, 1), 15);
  EXPECT_EQ(primitive_count(1, 3, 2), 6);
  std::int64_t n = 0;
  for_each_primitive(2, 3, 2, [&](const std::int64_t*) { ++n; });
  EXPECT_EQ(n, primitive_count(2, 3, 2));
}
