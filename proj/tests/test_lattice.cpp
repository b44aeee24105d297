#include <gtest/gtest.h>

#include <random>

#include "padic/lattice.hpp"

using namespace padic;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

GramMatrix diag(std::vector<long> d) {
  GramMatrix g(d.size(), std::vector<Rational>(d.size(), Rational(0)));
  for (std::size_t i = 0; i < d.size(); ++i) g[i][i] = d[i];
  return g;
}

GramMatrix random_gram(std::mt19937_64& rng, int d, long p) {
  const long bound = p * p;
  while (true) {
    GramMatrix g(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) g[i][j] = g[j][i] = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    const Rational det = determinant(g);
    if (det != 0 && val_p(det, p) <= 3) return g;
  }
}

// max over primitive integer v of ν(G v), the depth of the worst line.
long depth_over_lines(const GramMatrix& g, long p) {
  const int d = static_cast<int>(g.size());
  const int level = static_cast<int>(std::max<long>(2, val_p(determinant(g), p)));
  const std::int64_t m = ipow64(p, level);
  std::vector<std::int64_t> x(d, 0);
  long best = -kInfinity;
  while (true) {
    LatticeVector v(d);
    for (int i = 0; i < d; ++i) v[i] = static_cast<long>(x[i]);
    if (vec_valuation(v, p) == 0) best = std::max(best, vec_valuation(mat_vec(g, v), p));
    int i = d - 1;
    while (i >= 0 && ++x[i] == m) x[i--] = 0;
    if (i < 0) break;
  }
  return best;
}

}  // namespace

TEST(VecValuation, Examples) {
  EXPECT_EQ(vec_valuation({q(4), q(6)}, 2), 1);
  EXPECT_EQ(vec_valuation({q(0), q(0)}, 2), kInfinity);
  EXPECT_EQ(vec_norm({q(4), q(6)}, 2), q(1, 2));
  EXPECT_EQ(vec_norm({q(1, 3), q(1)}, 3), q(3));
  EXPECT_EQ(vec_norm({q(1), q(0)}, 5), q(1));
  EXPECT_EQ(vec_norm({q(0), q(0)}, 5), q(0));
}

TEST(VecValuation, InvariantUnderUnimodularChange) {
  std::mt19937_64 rng(23);
  for (long p : {2L, 3L}) {
    for (int trial = 0; trial < 20; ++trial) {
      // Products of elementary matrices are unimodular over Z.
      RatMatrix u = identity_matrix(3);
      for (int k = 0; k < 6; ++k) {
        RatMatrix e = identity_matrix(3);
        const int i = static_cast<int>(rng() % 3), j = static_cast<int>((i + 1 + rng() % 2) % 3);
        e[i][j] = static_cast<long>(rng() % 7) - 3;
        u = mat_mul(u, e);
      }
      ASSERT_EQ(abs(determinant(u)), 1);
      for (int s = 0; s < 10; ++s) {
        LatticeVector y(3);
        for (auto& c : y) c = q(static_cast<long>(rng() % 41) - 20, ipow64(p, static_cast<int>(rng() % 3)));
        EXPECT_EQ(vec_valuation(mat_vec(u, y), p), vec_valuation(y, p));
      }
    }
  }
}

TEST(DualMembership, Examples) {
  EXPECT_TRUE(dual_membership({q(3), q(-2)}, identity_matrix(2), 2));
  EXPECT_FALSE(dual_membership({q(1, 2), q(0)}, identity_matrix(2), 2));
  EXPECT_TRUE(dual_membership({q(0), q(1, 3)}, diag({1, 3}), 3));
}

TEST(SubspaceDepth, Examples) {
  EXPECT_EQ(subspace_depth({{q(1), q(0)}}, identity_matrix(2), 2), 0);
  EXPECT_EQ(subspace_depth({{q(0), q(1)}}, diag({1, 2}), 2), -1);
  EXPECT_EQ(line_depth_scan({q(0), q(1)}, diag({1, 2}), 2, 3), -1);
}

TEST(SubspaceDepth, LineThroughScaledAxis) {
  // Y = e_1/p pairs integrally against diag(p, 1), so the minimum is -1.
  for (long p : {2L, 3L}) {
    EXPECT_EQ(subspace_depth({{q(1), q(0)}}, diag({p, 1}), p), -1);
    EXPECT_EQ(line_depth_scan({q(1), q(0)}, diag({p, 1}), p, 4), -1);
  }
}

TEST(SubspaceDepth, ScanFailsWithoutCertificate) {
  EXPECT_THROW(line_depth_scan({q(1), q(0)}, diag({8, 1}), 2, 2), Error);
}

TEST(SubspaceDepth, AgreesWithScanOnRandomLines) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const long p = trial % 2 ? 3 : 2;
    const int d = 2 + trial % 2;
    const GramMatrix g = random_gram(rng, d, p);
    LatticeVector v(d);
    do {
      for (auto& c : v) c = static_cast<long>(rng() % 9);
    } while (vec_valuation(v, p) != 0);
    EXPECT_EQ(subspace_depth({v}, g, p), line_depth_scan(v, g, p, 2 * d + 2));
  }
}

TEST(SubspaceDepth, LargerSubspacesHaveSmallerDepth) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const GramMatrix g = random_gram(rng, 3, 2);
    const LatticeVector a{q(rng() % 4), q(1), q(rng() % 4)}, b{q(1), q(rng() % 4), q(0)};
    if (a[2] == 0 && a[0] * b[1] == 1) continue;
    const long plane = subspace_depth({a, b}, g, 2);
    EXPECT_LE(plane, subspace_depth({a}, g, 2));
    EXPECT_LE(plane, subspace_depth({b}, g, 2));
  }
}

TEST(PairingDepth, Examples) {
  EXPECT_EQ(pairing_depth(identity_matrix(3), 5), 0);
  EXPECT_EQ(pairing_depth(diag({1, 2}), 2), 1);
  GramMatrix trace(4, std::vector<Rational>(4, Rational(0)));
  trace[0][0] = trace[3][3] = trace[1][2] = trace[2][1] = 1;
  EXPECT_EQ(pairing_depth(trace, 2), 0);
  EXPECT_THROW(pairing_depth({{q(1, 2)}}, 2), Error);
}

TEST(PairingDepth, SnfMatchesLines) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const long p = std::vector<long>{2, 3}[trial % 2];
    const int d = 1 + trial % 3;
    const GramMatrix g = random_gram(rng, d, p);
    EXPECT_EQ(pairing_depth(g, p), depth_over_lines(g, p)) << "trial " << trial;
  }
}

TEST(PairingDepth, IntegralityLemma) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const long p = 2 + trial % 2;
    const GramMatrix g = random_gram(rng, 3, p);
    const long depth = pairing_depth(g, p);
    for (int s = 0; s < 10; ++s) {
      LatticeVector y(3);
      do {
        for (auto& c : y) c = static_cast<long>(rng() % 9);
      } while (vec_valuation(y, p) != 0);
      EXPECT_TRUE(dual_membership(scale(y, rpow(p, depth)), g, p));
    }
  }
}

TEST(Smith, DecompositionHolds) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const long p = 2 + trial % 2;
    const GramMatrix g = random_gram(rng, 3, p);
    const SmithForm s = smith_local(g, p);
    const RatMatrix dm = mat_mul(mat_mul(s.U, g), s.V);
    ASSERT_EQ(s.rank(), 3u);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) EXPECT_EQ(dm[i][j], i == j ? rpow(p, s.exponents[i]) : Rational(0));
    EXPECT_EQ(val_p(determinant(s.U), p), 0);
    EXPECT_EQ(val_p(determinant(s.V), p), 0);
    long sum = 0;
    for (long e : s.exponents) sum += e;
    EXPECT_EQ(sum, val_p(determinant(g), p));
  }
}

TEST(LocalLattice, Containment) {
  LocalLattice l(2, 2);
  l.insert({q(1), q(1)});
  EXPECT_TRUE(l.contains({q(3), q(3)}));
  EXPECT_FALSE(l.contains({q(1), q(0)}));
  l.add_scaled_standard(1);
  EXPECT_TRUE(l.contains({q(2), q(0)}));
  EXPECT_FALSE(l.contains({q(1), q(0)}));
  EXPECT_EQ(l.dual_min_valuation(identity_matrix(2)), -1);
}
