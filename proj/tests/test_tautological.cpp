#include <gtest/gtest.h>

#include "support.hpp"

using namespace tropjac;
using namespace tropjac::testing;

namespace {

BigradedClass hom(std::size_t g, std::vector<std::size_t> J, std::vector<std::size_t> I, BigInt c = 1) {
  return BigradedClass::monomial(Side::homology, g, mask_of(J), mask_of(I), c);
}

// (sum_k c_k (x) delta_k)^{*d} expanded over every sequence k_1..k_d, each term
// reordered by the sort parity of the circuit and delta words separately.
BigradedClass expand_w1_power(std::size_t g, std::size_t d) {
  BigradedClass out(Side::homology, g);
  std::vector<std::size_t> seq(d, 1);
  while (true) {
    std::vector<std::size_t> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
      const int s = sort_sign(seq) * sort_sign(seq);
      out.add(Monomial{mask_of(sorted), mask_of(sorted)}, s);
    }
    std::size_t i = 0;
    while (i < d && seq[i] == g) seq[i++] = 1;
    if (i == d) break;
    ++seq[i];
  }
  return out;
}

}  // namespace

TEST(Counting, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(factorial(25), BigInt("15511210043330985984000000"));
}

TEST(ClassW1, Examples) {
  EXPECT_EQ(class_w1(2), hom(2, {1}, {1}) + hom(2, {2}, {2}));
  EXPECT_TRUE(class_w1(0).is_zero());
  EXPECT_EQ(class_w1(1), hom(1, {1}, {1}));
}

TEST(ClassWd, Examples) {
  EXPECT_EQ(class_wd(2, 1), class_w1(2));
  EXPECT_EQ(class_wd(2, 2), fundamental_class(2));
  const auto w = class_wd(3, 2);
  EXPECT_EQ(w.size(), 3u);
  for (const auto& [m, c] : w.terms()) EXPECT_EQ(c, 1);
  EXPECT_EQ(class_wd(4, 0), point_class(4));
  try {
    class_wd(2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DOutOfRange);
  }
}

TEST(PontryaginPower, Examples) {
  EXPECT_EQ(pontryagin_power_w1(2, 2), hom(2, {1, 2}, {1, 2}, 2));
  EXPECT_EQ(pontryagin_power_w1(3, 0), point_class(3));
  EXPECT_EQ(pontryagin_power_w1(3, 1), class_w1(3));
}

TEST(PontryaginPower, MatchesSequenceExpansion) {
  for (std::size_t g = 0; g <= 6; ++g)
    for (std::size_t d = 0; d <= g; ++d) EXPECT_EQ(pontryagin_power_w1(g, d), expand_w1_power(g, d)) << g << "," << d;
}

TEST(ChernTheta, Examples) {
  EXPECT_EQ(chern_theta(2), BigradedClass::monomial(Side::cohomology, 2, 1, 1) +
                                BigradedClass::monomial(Side::cohomology, 2, 2, 2));
  EXPECT_TRUE(chern_theta(0).is_zero());
  EXPECT_EQ(chern_theta(1), BigradedClass::monomial(Side::cohomology, 1, 1, 1));
}

TEST(ThetaPower, Examples) {
  EXPECT_EQ(class_theta_power(2, 0), fundamental_class(2));
  EXPECT_EQ(class_theta_power(2, 2), hom(2, {}, {}, 2));
  EXPECT_EQ(class_theta_power(2, 1), class_w1(2));
  try {
    class_theta_power(2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KOutOfRange);
  }
}

TEST(VerifyPoincare, AllGeneraUpToSix) {
  for (std::size_t g = 0; g <= 6; ++g) {
    const auto report = verify_poincare(g);
    EXPECT_TRUE(report.all_passed()) << "g = " << g;
    EXPECT_EQ(report.records.size(), g + 1);
    for (const auto& r : report.records) {
      EXPECT_TRUE(r.equal);
      EXPECT_TRUE(r.pontryagin_equal);
      EXPECT_EQ(r.factor, factorial(g - r.d));
    }
  }
  const auto trivial = verify_poincare(0);
  ASSERT_EQ(trivial.records.size(), 1u);
  EXPECT_EQ(trivial.records[0].class_wd, point_class(0));
}

TEST(Degrees, Examples) {
  EXPECT_EQ(degree_theta_g(2), 2);
  EXPECT_EQ(degree_theta_g(3), 6);
  EXPECT_EQ(degree_theta_g(0), 1);
  EXPECT_EQ(degree_wd_pair(2, 1), 2);
  EXPECT_EQ(degree_wd_pair(4, 2), 6);
  EXPECT_EQ(degree_wd_pair(5, 0), 1);
}

TEST(Degrees, ClosedForms) {
  for (std::size_t g = 0; g <= 9; ++g) {
    EXPECT_EQ(degree_theta_g(g), factorial(g));
    for (std::size_t d = 0; d <= g; ++d) EXPECT_EQ(degree_wd_pair(g, d), binomial(g, d));
  }
}

TEST(Riemann, Homological) {
  for (std::size_t g = 1; g <= 7; ++g) EXPECT_TRUE(verify_riemann_homological(g));
  try {
    verify_riemann_homological(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GOutOfRange);
  }
}
