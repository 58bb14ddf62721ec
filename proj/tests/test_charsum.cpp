#include <gtest/gtest.h>

#include <random>

#include "bicell/characters.hpp"
#include "bicell/charsum.hpp"
#include "bicell/counting.hpp"
#include "bicell/error.hpp"
#include "support/oracles.hpp"

namespace bicell {
namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
Partition ones(int n) { return P(std::vector<int>(n, 1)); }

TEST(FactorTest, MFactorOnRowsAndColumns) {
  for (int n = 1; n <= 6; ++n)
    for (int m = 0; m <= 8; ++m) {
      EXPECT_EQ(m_factor(P({n}), m), Rational(binomial(m + n - 1, n)));
      EXPECT_EQ(m_factor(ones(n), m), Rational(binomial(m, n)));
    }
  for (const auto& lambda : partitions_of(6)) EXPECT_EQ(m_factor(lambda, 0), 0);
}

TEST(FactorTest, CFactorSmallValues) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(c_factor(P({n}), 0), 0);
    EXPECT_EQ(c_factor(P({n}), 1), 1);
    if (n >= 2) EXPECT_EQ(c_factor(ones(n), 1), 0);
  }
}

TEST(FactorTest, CfRatioMatchesDefinition) {
  EXPECT_EQ(cf_ratio(P({5}), 1), 1);
  EXPECT_EQ(cf_ratio(P({2, 1}), 0), 0);
  std::mt19937 rng(5);
  for (int n = 1; n <= 8; ++n) {
    const auto shapes = partitions_of(n);
    for (int trial = 0; trial < 6; ++trial) {
      const auto& lambda = shapes[rng() % shapes.size()];
      const int r = static_cast<int>(rng() % (n + 1));
      EXPECT_EQ(cf_ratio(lambda, r), c_factor(lambda, r) / Rational(dimension(lambda))) << lambda.to_string();
    }
  }
}

TEST(FactorTest, HookFactorMatchesDefinition) {
  EXPECT_EQ(cf_ratio_hook(1, 4, 2), cf_ratio(P({3, 1}), 2));
  for (int n = 1; n <= 12; ++n)
    for (int j = 0; j <= n - 1; ++j) {
      std::vector<int> parts{n - j};
      parts.insert(parts.end(), j, 1);
      for (int r = 0; r <= n; ++r) EXPECT_EQ(cf_ratio_hook(j, n, r), cf_ratio(P(parts), r)) << n << " " << j << " " << r;
    }
  EXPECT_THROW(cf_ratio_hook(4, 4, 1), InvalidInput);
}

TEST(FactorTest, TwoRowFactorMatchesDefinition) {
  EXPECT_EQ(cf_ratio_family2(0, 0, 2, 7, 3), cf_ratio(P({4, 3}), 3));
  EXPECT_EQ(cf_ratio_family2(1, 1, 2, 8, 4), cf_ratio(P({3, 2, 2, 1}), 4));
  EXPECT_EQ(cf_ratio_family2(0, 0, 2, 7, 0), 0);
  for (int n = 4; n <= 12; ++n)
    for (int p = 1; 2 * p + 2 <= n; ++p)
      for (int k = 0; k <= p - 1; ++k)
        for (int j = 0; j <= n - 2 * p - 2; ++j) {
          std::vector<int> parts{p - k + 1, n - j - k - p - 1};
          parts.insert(parts.end(), k, 2);
          parts.insert(parts.end(), j, 1);
          const Partition lambda = Partition::from_unsorted(parts);
          for (int r = 0; r <= n; ++r) EXPECT_EQ(cf_ratio_family2(j, k, p, n, r), cf_ratio(lambda, r));
        }
  EXPECT_THROW(cf_ratio_family2(0, 2, 2, 7, 1), InvalidInput);
  EXPECT_THROW(cf_ratio_family2(2, 0, 2, 7, 1), InvalidInput);
}

TEST(WNumberTest, ThreeCycleTimesTransposition) {
  const ClassList classes(3, {P({3}), P({2, 1})});
  EXPECT_EQ(w_number(classes, 3), 0);
  EXPECT_EQ(w_number(classes, 0), 0);
  EXPECT_EQ(xi(classes, 1), 0);
  EXPECT_EQ(xi(classes, 2), 6);
  EXPECT_EQ(xi(classes, 3), 0);
}

TEST(WNumberTest, IdentityClassAlone) {
  for (int n = 1; n <= 6; ++n) {
    const ClassList classes(n, {ones(n)});
    for (int m = 1; m <= n; ++m) EXPECT_EQ(xi(classes, m), m == n ? 1 : 0);
  }
}

TEST(XiTest, ThreeCycleSquares) {
  const ClassList classes(3, {P({3}), P({3})});
  EXPECT_EQ(xi(classes, 3), 2);
  EXPECT_EQ(xi(classes, 1), 2);
  EXPECT_EQ(xi(classes, 2), 0);
  EXPECT_THROW(xi(classes, 0), InvalidInput);
  EXPECT_THROW(xi(classes, 4), InvalidInput);
}

TEST(XiTest, TotalMassForPairsAndTriples) {
  for (int n = 1; n <= 7; ++n) {
    const auto shapes = partitions_of(n);
    for (const auto& a : shapes)
      for (const auto& b : shapes) {
        const ClassList classes(n, {a, b});
        const auto profile = character_profile(classes);
        Integer total = 0;
        for (int m = 1; m <= n; ++m) total += xi(classes, profile, m);
        EXPECT_EQ(total, class_size(a) * class_size(b));
      }
  }
  for (int n = 1; n <= 5; ++n) {
    const auto shapes = partitions_of(n);
    for (const auto& a : shapes)
      for (const auto& b : shapes)
        for (const auto& c : shapes) {
          const ClassList classes(n, {a, b, c});
          const auto profile = character_profile(classes);
          Integer total = 0;
          for (int m = 1; m <= n; ++m) total += xi(classes, profile, m);
          EXPECT_EQ(total, class_size(a) * class_size(b) * class_size(c));
        }
  }
}

TEST(XiTest, TriplesMatchEnumeration) {
  // Count (s1, s2, s3) by brute force over S_n^2 with s3 ranging over its class.
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::vector<int>> perms;
    testing::for_each_permutation(n, [&](const std::vector<int>& p) { perms.push_back(p); });
    const auto shapes = partitions_of(n);
    for (const auto& a : shapes)
      for (const auto& b : shapes)
        for (const auto& c : shapes) {
          std::vector<Integer> counts(n + 1, 0);
          for (const auto& s1 : perms) {
            if (testing::cycle_lengths(s1) != a.parts()) continue;
            for (const auto& s2 : perms) {
              if (testing::cycle_lengths(s2) != b.parts()) continue;
              for (const auto& s3 : perms) {
                if (testing::cycle_lengths(s3) != c.parts()) continue;
                std::vector<int> prod(n);
                for (int i = 0; i < n; ++i) prod[i] = s1[s2[s3[i]]];
                ++counts[testing::cycle_lengths(prod).size()];
              }
            }
          }
          const ClassList classes(n, {a, b, c});
          for (int m = 1; m <= n; ++m) EXPECT_EQ(xi(classes, m), counts[m]);
        }
  }
}

TEST(XiTest, FrobeniusDegenerateCase) {
  for (int n = 1; n <= 8; ++n) {
    const auto shapes = partitions_of(n);
    for (const auto& a : shapes)
      for (const auto& b : shapes)
        EXPECT_EQ(xi(ClassList(n, {a, b}), n), a == b ? class_size(a) : Integer(0));
  }
}

TEST(PolyCharsumTest, WorkedValues) {
  EXPECT_EQ(poly_charsum(3, P({2, 1}), P({3})), RatPoly::monomial(1, 2));
  EXPECT_EQ(poly_charsum(2, P({2}), P({2})), RatPoly::monomial(1, 2));
  EXPECT_EQ(poly_charsum(5, P({3, 2}), P({5})), RatPoly({0, 0, Rational(3, 4), 0, Rational(1, 4)}));
}

TEST(PolyCharsumTest, MatchesEnumerationForEveryClassPair) {
  for (int n = 1; n <= 6; ++n) {
    const auto shapes = partitions_of(n);
    for (const auto& face : shapes)
      for (const auto& mu : shapes) {
        const RatPoly poly = poly_charsum(n, face, mu);
        EXPECT_EQ(poly, testing::brute_force_poly(face.parts(), mu.parts())) << face.to_string() << mu.to_string();
        EXPECT_EQ(poly.evaluate(1), 1);
        // Sign homomorphism: (-1)^{n-m} = sign(face) sign(mu) on the support.
        for (const auto& [m, c] : poly.terms()) {
          EXPECT_GT(c, 0);
          EXPECT_EQ(((n - m) % 2 == 0 ? 1 : -1), face.sign() * mu.sign());
        }
      }
  }
}

TEST(PolyCharsumTest, ClosedCharacterProfileMatchesRecursion) {
  for (int n = 4; n <= 11; ++n)
    for (int p = 1; 2 * p + 2 <= n; ++p)
      for (const auto& mu : partitions_of(n)) {
        if (mu.smallest() < p + 1) continue;
        const auto fast = character_profile_bicellular(mu, p);
        const auto slow = character_profile(ClassList(n, {mu, P({n - p, p})}));
        EXPECT_EQ(fast.shapes, slow.shapes);
        EXPECT_EQ(fast.character_product, slow.character_product);
      }
}

TEST(ClassListTest, RejectsInconsistentSizes) {
  EXPECT_THROW(ClassList(3, {}), InvalidInput);
  EXPECT_THROW(ClassList(3, {P({3}), P({2})}), InvalidInput);
}

}  // namespace
}  // namespace bicell
