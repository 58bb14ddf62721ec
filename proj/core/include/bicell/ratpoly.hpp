#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bicell/rational.hpp"

namespace bicell {

/// Univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored densely by degree with trailing zeros trimmed, so
/// the leading coefficient is nonzero unless the polynomial is zero. The zero
/// polynomial has degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(const Rational& constant);  // NOLINT: implicit constants read naturally in formulas
  RatPoly(int constant) : RatPoly(Rational(constant)) {}  // NOLINT
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly x();
  static RatPoly monomial(const Rational& coeff, int degree);
  /// x + c
  static RatPoly linear(const Rational& c);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of x^d; zero outside the stored range.
  Rational coeff(int d) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// (degree, coefficient) for nonzero coefficients, increasing degree.
  std::vector<std::pair<int, Rational>> terms() const;
  /// Lowest degree carrying a nonzero coefficient; -1 for zero.
  int low_degree() const;

  Rational evaluate(const Rational& at) const;
  RatPoly derivative() const;
  RatPoly monic() const;

  RatPoly& operator+=(const RatPoly& other);
  RatPoly& operator-=(const RatPoly& other);
  RatPoly& operator*=(const RatPoly& other);
  RatPoly& operator*=(const Rational& scalar);
  RatPoly& operator/=(const Rational& scalar);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }
  friend RatPoly operator/(RatPoly a, const Rational& s) { return a /= s; }
  RatPoly operator-() const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  /// Human-readable form such as "(1/4)x^4+(3/4)x^2".
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

}  // namespace bicell
