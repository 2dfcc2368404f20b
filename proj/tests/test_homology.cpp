#include <gtest/gtest.h>

#include "support.hpp"

using namespace tropjac;
using namespace tropjac::testing;

namespace {

BigradedClass hom(std::size_t g, std::vector<std::size_t> J, std::vector<std::size_t> I, BigInt c = 1) {
  return BigradedClass::monomial(Side::homology, g, mask_of(J), mask_of(I), c);
}

BigradedClass coh(std::size_t g, std::vector<std::size_t> J, std::vector<std::size_t> I, BigInt c = 1) {
  return BigradedClass::monomial(Side::cohomology, g, mask_of(J), mask_of(I), c);
}

int sign_of_concat(IndexMask a, IndexMask b) {
  auto seq = indices_of(a);
  for (auto i : indices_of(b)) seq.push_back(i);
  return sort_sign(seq);
}

BigradedClass random_class(std::mt19937_64& rng, Side side, std::size_t g) {
  const std::size_t p = rng() % (g + 1);
  const std::size_t q = rng() % (g + 1);
  return random_homogeneous_class(rng, side, g, p, q, 1 + rng() % 5);
}

}  // namespace

TEST(Wedge, Examples) {
  EXPECT_EQ(wedge_monomials(mask_of({1}), mask_of({2})), (SignedMask{1, mask_of({1, 2})}));
  EXPECT_EQ(wedge_monomials(mask_of({2}), mask_of({1})), (SignedMask{-1, mask_of({1, 2})}));
  EXPECT_EQ(wedge_monomials(mask_of({1, 3}), mask_of({2})), (SignedMask{-1, mask_of({1, 2, 3})}));
  EXPECT_FALSE(wedge_monomials(mask_of({1, 2}), mask_of({2})));
}

TEST(Wedge, MatchesPermutationParity) {
  for (IndexMask a = 0; a < 64; ++a)
    for (IndexMask b = 0; b < 64; ++b) {
      const auto w = wedge_monomials(a, b);
      if (a & b) {
        EXPECT_FALSE(w);
        continue;
      }
      ASSERT_TRUE(w);
      EXPECT_EQ(w->mask, a | b);
      EXPECT_EQ(w->sign, sign_of_concat(a, b));
    }
}

TEST(Interior, Examples) {
  EXPECT_EQ(interior(mask_of({1}), mask_of({1, 2})), (SignedMask{1, mask_of({2})}));
  EXPECT_EQ(interior(mask_of({2}), mask_of({1, 2})), (SignedMask{-1, mask_of({1})}));
  EXPECT_EQ(interior(mask_of({1, 2}), mask_of({1, 2})), (SignedMask{1, 0}));
  EXPECT_FALSE(interior(mask_of({3}), mask_of({1, 2})));
}

TEST(Interior, InvertsLeftWedge) {
  // iota_{e*_D}(e_D ^ e_R) = e_R for D, R disjoint
  for (IndexMask d = 0; d < 64; ++d)
    for (IndexMask r = 0; r < 64; ++r) {
      if (d & r) continue;
      const auto w = wedge_monomials(d, r);
      const auto i = interior(d, w->mask);
      ASSERT_TRUE(i);
      EXPECT_EQ(i->mask, r);
      EXPECT_EQ(i->sign * w->sign, 1);
    }
}

TEST(Pontryagin, Examples) {
  EXPECT_EQ(pontryagin(hom(2, {1}, {1}), hom(2, {2}, {2})), hom(2, {1, 2}, {1, 2}));
  EXPECT_EQ(pontryagin(hom(2, {2}, {2}), hom(2, {1}, {1})), hom(2, {1, 2}, {1, 2}));
  EXPECT_TRUE(pontryagin(hom(2, {1}, {1}), hom(2, {1}, {2})).is_zero());
  EXPECT_EQ(pontryagin(point_class(3), hom(3, {2}, {1, 3}, 4)), hom(3, {2}, {1, 3}, 4));
}

TEST(Cup, Examples) {
  EXPECT_EQ(cup(coh(2, {1}, {1}), coh(2, {2}, {2})), coh(2, {1, 2}, {1, 2}));
  EXPECT_EQ(cup(chern_theta(2), chern_theta(2)), coh(2, {1, 2}, {1, 2}, 2));
  EXPECT_TRUE(cup(coh(2, {1}, {1}), coh(2, {1}, {1})).is_zero());
}

TEST(Cap, Examples) {
  const auto X = fundamental_class(2);
  EXPECT_EQ(cap(coh(2, {1}, {1}), X), hom(2, {2}, {2}));
  EXPECT_EQ(cap(coh(2, {2}, {2}), X), hom(2, {1}, {1}));
  EXPECT_EQ(cap(coh(2, {1}, {2}), X), hom(2, {2}, {1}, -1));
}

TEST(Products, RejectMixedInputs) {
  EXPECT_THROW(pontryagin(coh(2, {1}, {1}), hom(2, {1}, {1})), Error);
  EXPECT_THROW(cup(hom(2, {1}, {1}), coh(2, {1}, {1})), Error);
  EXPECT_THROW(cap(hom(2, {1}, {1}), hom(2, {1}, {1})), Error);
  EXPECT_THROW(pontryagin(hom(2, {1}, {1}), hom(3, {1}, {1})), Error);
  try {
    hom(2, {1}, {1}) + coh(2, {1}, {1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SideMismatch);
  }
}

TEST(Products, AssociativeAndGradedCommutative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t g = 1 + rng() % 6;
    const auto a = random_class(rng, Side::homology, g);
    const auto b = random_class(rng, Side::homology, g);
    const auto c = random_class(rng, Side::homology, g);
    EXPECT_EQ(pontryagin(pontryagin(a, b), c), pontryagin(a, pontryagin(b, c)));
    const auto da = *a.bidegree();
    const auto db = *b.bidegree();
    const int sign = ((da.p * db.p + da.q * db.q) % 2) ? -1 : 1;
    EXPECT_EQ(pontryagin(a, b), BigInt(sign) * pontryagin(b, a));
    EXPECT_EQ(pontryagin(a, b + c), pontryagin(a, b) + pontryagin(a, c));
  }
}

TEST(Cap, IsAModuleAction) {
  // (x cup y) cap a = y cap (x cap a), the contraction of x happening first
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t g = 1 + rng() % 6;
    const auto x = random_class(rng, Side::cohomology, g);
    const auto y = random_class(rng, Side::cohomology, g);
    const auto a = random_class(rng, Side::homology, g);
    EXPECT_EQ(cap(cup(x, y), a), cap(y, cap(x, a)));
  }
}

TEST(FundamentalClass, Examples) {
  EXPECT_EQ(fundamental_class(2), hom(2, {1, 2}, {1, 2}));
  EXPECT_EQ(fundamental_class(1), hom(1, {1}, {1}));
  EXPECT_EQ(fundamental_class(0), hom(0, {}, {}));
}

TEST(PoincareDual, Examples) {
  EXPECT_EQ(poincare_dual(coh(2, {1}, {1})), hom(2, {2}, {2}));
  for (std::size_t g = 0; g <= 5; ++g) {
    std::vector<std::size_t> all;
    for (std::size_t k = 1; k <= g; ++k) all.push_back(k);
    EXPECT_EQ(poincare_dual(coh(g, all, all)), point_class(g));
    EXPECT_EQ(poincare_dual(coh(g, {}, {})), fundamental_class(g));
  }
  EXPECT_THROW(poincare_dual(coh(2, {1}, {1}) + coh(2, {1, 2}, {1})), Error);
}

TEST(PoincareDual, DiagonalSubsetsHavePlusSign) {
  for (std::size_t g = 0; g <= 6; ++g)
    for (IndexMask s = 0; s < (IndexMask{1} << g); ++s) {
      const IndexMask rest = full_mask(g) & ~s;
      EXPECT_EQ(poincare_dual(BigradedClass::monomial(Side::cohomology, g, s, s)),
                BigradedClass::monomial(Side::homology, g, rest, rest));
    }
}

TEST(PoincareDual, InverseRoundTrips) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t g = rng() % 7;
    const auto c = random_class(rng, Side::cohomology, g);
    EXPECT_EQ(poincare_dual_inverse(poincare_dual(c)), c);
    const auto a = random_class(rng, Side::homology, g);
    EXPECT_EQ(poincare_dual(poincare_dual_inverse(a)), a);
  }
}

TEST(Intersection, Examples) {
  const auto X = fundamental_class(2);
  const auto b = hom(2, {1}, {2}, 3);
  EXPECT_EQ(intersection(X, b), b);
  EXPECT_EQ(intersection(hom(2, {1}, {1}), hom(2, {2}, {2})), point_class(2));
  EXPECT_TRUE(intersection(hom(2, {1}, {1}), hom(2, {1}, {1})).is_zero());
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(hom(3, {}, {}, 5)), 5);
  EXPECT_EQ(degree(BigradedClass(Side::homology, 3)), 0);
  try {
    degree(hom(2, {1}, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonZeroDegreeClass);
  }
}

TEST(BasisMonomials, RankFormula) {
  for (std::size_t g = 0; g <= 8; ++g)
    for (std::size_t p = 0; p <= g; ++p)
      for (std::size_t q = 0; q <= g; ++q) {
        const auto basis = basis_monomials(g, p, q);
        EXPECT_EQ(BigInt(basis.size()), binomial(g, p) * binomial(g, q));
        for (const auto& m : basis) EXPECT_EQ(bidegree_of(m), (Bidegree{p, q}));
      }
  EXPECT_TRUE(basis_monomials(2, 3, 0).empty());
}

TEST(BigradedClass, Arithmetic) {
  auto a = hom(3, {1}, {2}, 2) + hom(3, {2}, {3}, 5);
  EXPECT_EQ(a.size(), 2u);
  a -= hom(3, {1}, {2}, 2);
  EXPECT_EQ(a, hom(3, {2}, {3}, 5));
  EXPECT_TRUE((BigInt(0) * a).is_zero());
  EXPECT_EQ(a.bidegree(), (Bidegree{1, 1}));
  EXPECT_FALSE((a + hom(3, {1, 2}, {3})).is_homogeneous());
  EXPECT_THROW(hom(2, {3}, {1}), Error);
  EXPECT_THROW(BigradedClass(Side::homology, kMaxGenus + 1), Error);
}
