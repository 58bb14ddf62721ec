#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "bicell/charsum.hpp"
#include "bicell/closed_form.hpp"
#include "bicell/counting.hpp"
#include "bicell/error.hpp"
#include "support/oracles.hpp"

namespace bicell {
namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
RatPoly poly(std::vector<Rational> c) { return RatPoly(std::move(c)); }

TEST(InstanceTest, CanonicalizesFaceLength) {
  const BicellularInstance inst(5, 3, P({5}));
  EXPECT_EQ(inst.p(), 2);
  EXPECT_EQ(inst.face_type(), P({3, 2}));
  EXPECT_TRUE(inst.closed_form_valid());
  EXPECT_FALSE(BicellularInstance(4, 2, P({2, 2})).closed_form_valid());
  EXPECT_THROW(BicellularInstance(1, 1, P({1})), InvalidInput);
  EXPECT_THROW(BicellularInstance(4, 4, P({4})), InvalidInput);
  EXPECT_THROW(BicellularInstance(4, 1, P({3})), InvalidInput);
}

TEST(InstanceTest, ValidInstanceEnumeration) {
  const auto three = valid_instances(3);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[0], BicellularInstance(2, 1, P({2})));
  EXPECT_EQ(three[1], BicellularInstance(3, 1, P({3})));
  EXPECT_TRUE(valid_instances(1).empty());
  for (const auto& inst : valid_instances(9)) EXPECT_GE(inst.mu().smallest(), inst.p() + 1);
}

TEST(VMuTest, SmallProducts) {
  const YSeries three = v_mu(P({3}), 3);
  EXPECT_EQ(three.coeff(0), RatPoly());
  EXPECT_EQ(three.coeff(1), RatPoly(3));
  EXPECT_EQ(three.coeff(2), RatPoly(3));
  EXPECT_EQ(three.coeff(3), RatPoly(1));

  const YSeries twos = v_mu(P({2, 2}), 4);
  EXPECT_TRUE(twos.coeff(1).is_zero());
  EXPECT_EQ(twos.coeff(2), RatPoly(4));
  EXPECT_EQ(twos.coeff(3), RatPoly(4));
  EXPECT_EQ(twos.coeff(4), RatPoly(1));

  EXPECT_EQ(v_mu(P({1}), 1).coeff(1), RatPoly(1));
}

TEST(VMuTest, LowestDegreeIsNumberOfParts) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& mu : partitions_of(n)) {
      const YSeries v = v_mu(mu, n);
      for (int k = 0; k < mu.length(); ++k) EXPECT_TRUE(v.coeff(k).is_zero());
      EXPECT_EQ(v.coeff(mu.length()), RatPoly(Rational(std::accumulate(mu.parts().begin(), mu.parts().end(), 1,
                                                                        std::multiplies<>()))));
    }
}

TEST(WBicellularTest, MatchesCharacterSum) {
  for (const auto& inst : valid_instances(8)) {
    const ClassList classes(inst.n(), {inst.mu(), inst.face_type()});
    for (int r = 0; r <= inst.n(); ++r)
      EXPECT_EQ(w_number_bicellular(inst, r), w_number(classes, r)) << inst.to_string() << " r=" << r;
  }
}

TEST(WBicellularTest, RejectsOutOfRegime) {
  EXPECT_THROW(w_number_bicellular(BicellularInstance(4, 2, P({2, 2})), 1), RegimeError);
  EXPECT_THROW(w_number_bicellular(BicellularInstance(3, 1, P({3})), -1), InvalidInput);
}

TEST(PolyClosedTest, WorkedValues) {
  EXPECT_EQ(poly_closed(BicellularInstance(3, 1, P({3}))), RatPoly::monomial(1, 2));
  EXPECT_EQ(poly_closed(BicellularInstance(5, 2, P({5}))), poly({0, 0, Rational(3, 4), 0, Rational(1, 4)}));
  EXPECT_EQ(poly_closed(BicellularInstance(4, 1, P({2, 2}))), RatPoly::monomial(1, 2));
  EXPECT_EQ(poly_closed(BicellularInstance(6, 2, P({3, 3}))), poly({0, 0, Rational(7, 10), 0, Rational(3, 10)}));
  EXPECT_EQ(poly_connected(BicellularInstance(6, 2, P({3, 3}))), poly({0, 0, Rational(7, 10), 0, Rational(3, 10)}));
}

TEST(PolyClosedTest, OutOfRegimeNamesTheFallback) {
  try {
    poly_closed(BicellularInstance(4, 2, P({2, 2})));
    FAIL() << "expected RegimeError";
  } catch (const RegimeError& e) {
    EXPECT_NE(std::string(e.what()).find("poly_charsum"), std::string::npos);
  }
  EXPECT_THROW(poly_connected(BicellularInstance(5, 1, P({4, 1}))), RegimeError);
}

TEST(PolyClosedTest, MatchesEnumerationAndCharacterSum) {
  for (const auto& inst : valid_instances(8)) {
    const RatPoly closed = poly_closed(inst);
    EXPECT_EQ(closed, testing::brute_force_poly(inst.face_type().parts(), inst.mu().parts())) << inst.to_string();
    EXPECT_EQ(closed, poly_charsum(inst.n(), inst.face_type(), inst.mu())) << inst.to_string();
  }
}

TEST(PolyClosedTest, ShapeOfTheDistribution) {
  for (const auto& inst : valid_instances(9)) {
    const RatPoly closed = poly_closed(inst);
    EXPECT_EQ(closed.evaluate(1), 1) << inst.to_string();
    const int top = inst.n() - inst.mu().length();
    EXPECT_EQ(closed.degree(), top) << "genus 0 missing for " << inst.to_string();
    for (const auto& [m, c] : closed.terms()) {
      EXPECT_GT(c, 0);
      EXPECT_EQ((top - m) % 2, 0);
    }
  }
}

TEST(PolyRegularTest, WorkedValues) {
  EXPECT_EQ(poly_regular(1, 2, 2), RatPoly::monomial(1, 2));
  EXPECT_EQ(poly_regular(2, 3, 2), poly({0, 0, Rational(7, 10), 0, Rational(3, 10)}));
  EXPECT_THROW(poly_regular(2, 2, 3), InvalidInput);
  EXPECT_THROW(poly_regular(0, 2, 3), InvalidInput);
  EXPECT_THROW(poly_regular(1, 2, 0), InvalidInput);
}

TEST(PolyRegularTest, AgreesWithGeneralClosedForm) {
  for (int k = 2; k <= 5; ++k)
    for (int d = 1; d <= 3; ++d)
      for (int p = 1; p < k; ++p) {
        if (p > d * k - p) continue;
        const RatPoly regular = poly_regular(p, k, d);
        EXPECT_EQ(regular, poly_closed(BicellularInstance(d * k, p, P(std::vector<int>(d, k)))))
            << "p=" << p << " k=" << k << " d=" << d;
        EXPECT_EQ(regular.evaluate(1), 1);
      }
}

TEST(GenusTest, WorkedDistributions) {
  const BicellularInstance five(5, 2, P({5}));
  const auto g5 = genus_distribution(five, poly_closed(five));
  EXPECT_EQ(g5.class_size, 24);
  EXPECT_EQ(g5.counts.at(0), 6);
  EXPECT_EQ(g5.counts.at(1), 18);
  EXPECT_EQ(g5.total(), 24);
  EXPECT_EQ(g5.to_string(), "0:6;1:18");

  const BicellularInstance three(3, 1, P({3}));
  const auto g3 = genus_distribution(three, poly_closed(three));
  EXPECT_EQ(g3.counts.size(), 1u);
  EXPECT_EQ(g3.counts.at(0), 2);

  const BicellularInstance six(6, 2, P({3, 3}));
  const auto g6 = genus_distribution(six, poly_closed(six));
  EXPECT_EQ(g6.counts.at(0), 12);
  EXPECT_EQ(g6.counts.at(1), 28);
  EXPECT_EQ(g6.total(), 40);
}

TEST(GenusTest, TotalsMatchClassSize) {
  for (const auto& inst : valid_instances(9)) {
    const auto dist = genus_distribution(inst, poly_closed(inst));
    EXPECT_EQ(dist.total(), class_size(inst.mu()));
  }
}

TEST(GenusTest, RejectsImpossibleDegrees) {
  const BicellularInstance inst(5, 2, P({5}));
  EXPECT_THROW(genus_distribution(inst, RatPoly::monomial(1, 3)), InternalError);
  EXPECT_THROW(genus_distribution(inst, RatPoly::monomial(Rational(1, 48), 2)), InternalError);
}

}  // namespace
}  // namespace bicell
