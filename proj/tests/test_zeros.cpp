#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bicell/closed_form.hpp"
#include "bicell/error.hpp"
#include "bicell/zeros.hpp"

namespace bicell {
namespace {

RatPoly poly(std::vector<Rational> c) { return RatPoly(std::move(c)); }

TEST(ParityTest, Decomposes) {
  const auto r = parity_decompose(poly({0, 0, Rational(3, 4), 0, Rational(1, 4)}));
  ASSERT_TRUE(std::holds_alternative<ParityDecomposition>(r));
  EXPECT_EQ(std::get<ParityDecomposition>(r).e, 2);
  EXPECT_EQ(std::get<ParityDecomposition>(r).q, poly({Rational(3, 4), Rational(1, 4)}));

  const auto square = parity_decompose(RatPoly::monomial(1, 2));
  ASSERT_TRUE(std::holds_alternative<ParityDecomposition>(square));
  EXPECT_EQ(std::get<ParityDecomposition>(square).q, RatPoly(1));

  const auto mixed = parity_decompose(poly({0, 1, 1}));
  ASSERT_TRUE(std::holds_alternative<MixedParity>(mixed));
  EXPECT_EQ(std::get<MixedParity>(mixed).even_degree, 2);
  EXPECT_EQ(std::get<MixedParity>(mixed).odd_degree, 1);

  EXPECT_THROW(parity_decompose(RatPoly()), InvalidInput);
}

TEST(RealRootsTest, LinearCases) {
  EXPECT_TRUE(all_roots_real_nonpositive(poly({Rational(3, 4), Rational(1, 4)})));
  EXPECT_FALSE(all_roots_real_nonpositive(poly({-1, 1})));
  EXPECT_TRUE(all_roots_real_nonpositive(poly({Rational(7, 10), Rational(3, 10)})));
  EXPECT_FALSE(all_roots_real_nonpositive(poly({0, 1})));
  EXPECT_TRUE(all_roots_real_nonpositive(RatPoly(5)));
}

TEST(RealRootsTest, ComplexPairsAndRepeatedRoots) {
  // t^2 + t + 1 has no real roots.
  EXPECT_FALSE(all_roots_real_nonpositive(poly({1, 1, 1})));
  // (t+2)^3 (t+1/3)
  const RatPoly repeated = RatPoly::linear(2) * RatPoly::linear(2) * RatPoly::linear(2) * RatPoly::linear(Rational(1, 3));
  EXPECT_TRUE(all_roots_real_nonpositive(repeated));
  EXPECT_FALSE(all_roots_real_nonpositive(repeated * poly({1, 1, 1})));
  EXPECT_FALSE(all_roots_real_nonpositive(repeated * RatPoly::linear(Rational(-1, 5))));
}

TEST(SturmTest, CountsKnownLinearFactors) {
  // Random products of (t + r) with r > 0 rational: the distinct -r inside
  // the interval are the roots, known by construction.
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> num(1, 30), den(1, 6), degree(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    RatPoly product(1);
    std::set<Rational> roots;
    const long d = degree(rng);
    for (long i = 0; i < d; ++i) {
      const Rational r = make_rational(num(rng), den(rng));
      product *= RatPoly::linear(r);
      roots.insert(-r);
    }
    const RatPoly squarefree = divmod(product, gcd(product, product.derivative())).first;
    EXPECT_EQ(squarefree.degree(), static_cast<int>(roots.size()));
    const Rational a = make_rational(-num(rng), den(rng)), b = make_rational(-num(rng) / 3, den(rng));
    const Rational lo = std::min(a, b), hi = std::max(a, b);
    int expected = 0;
    for (const auto& root : roots) expected += (root > lo && root <= hi) ? 1 : 0;
    EXPECT_EQ(sturm_count(squarefree, lo, hi), expected);
    EXPECT_TRUE(all_roots_real_nonpositive(product));
    EXPECT_LT(-cauchy_bound(squarefree), *roots.begin());
  }
}

TEST(ImaginaryAxisTest, Examples) {
  EXPECT_TRUE(imaginary_axis_check(poly({0, 0, Rational(3, 4), 0, Rational(1, 4)})));
  EXPECT_TRUE(imaginary_axis_check(RatPoly::monomial(1, 2)));
  EXPECT_FALSE(imaginary_axis_check(poly({0, 1, 1})));
  // x^2 - 1 has zeros +-1
  EXPECT_FALSE(imaginary_axis_check(poly({-1, 0, 1})));
  // x^4 + 1 has zeros off both axes
  EXPECT_FALSE(imaginary_axis_check(poly({1, 0, 0, 0, 1})));
}

TEST(LogConcavityTest, Examples) {
  EXPECT_TRUE(log_concavity_check(poly({0, 0, Rational(3, 4), 0, Rational(1, 4)})));
  EXPECT_TRUE(log_concavity_check(poly({1, 3, 1})));
  EXPECT_FALSE(log_concavity_check(poly({1, 1, 3})));
  // Gaps are skipped: 1, 3, 1 at degrees 0, 2, 4.
  EXPECT_TRUE(log_concavity_check(poly({1, 0, 3, 0, 1})));
  EXPECT_TRUE(log_concavity_check(RatPoly()));
  EXPECT_THROW(log_concavity_check(poly({1, -1})), InvalidInput);
}

TEST(VerifierTest, ReportsCounterexamples) {
  EXPECT_TRUE(verify_zero_claims("ok", poly({0, 0, Rational(3, 4), 0, Rational(1, 4)})).empty());
  const auto records = verify_zero_claims("bad", poly({1, 1, 3}));
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].check, "imag_axis");
  EXPECT_EQ(records[1].check, "log_concave");
  EXPECT_NE(records[0].to_string().find("bad"), std::string::npos);
}

TEST(ZeroClaimsTest, HoldForClosedFormSuite) {
  for (const auto& inst : valid_instances(9)) {
    const RatPoly p = poly_closed(inst);
    const bool imaginary = imaginary_axis_check(p);
    EXPECT_TRUE(imaginary) << inst.to_string();
    EXPECT_TRUE(log_concavity_check(p)) << inst.to_string();
    // Real-rooted Q gives log-concave coefficients (Newton), so these never split.
    EXPECT_TRUE(!imaginary || log_concavity_check(p));
  }
}

}  // namespace
}  // namespace bicell
