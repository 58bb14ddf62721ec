#pragma once

#include <vector>

#include "bicell/ratpoly.hpp"

namespace bicell {

/// Power series in an auxiliary variable y, truncated above degree D, whose
/// coefficients are polynomials in x. Used to extract [y^k] from products
/// such as V_mu(y) * (1+y)^(x+s).
class YSeries {
 public:
  /// The zero series truncated at `degree`.
  explicit YSeries(int degree);
  YSeries(int degree, std::vector<RatPoly> coeffs);

  int truncation() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of y^k; zero above the truncation.
  const RatPoly& coeff(int k) const;
  RatPoly& coeff(int k);

  YSeries& operator+=(const YSeries& other);
  YSeries& operator*=(const YSeries& other);
  YSeries& operator*=(const RatPoly& factor);
  friend YSeries operator+(YSeries a, const YSeries& b) { return a += b; }
  friend YSeries operator*(YSeries a, const YSeries& b) { return a *= b; }
  friend YSeries operator*(YSeries a, const RatPoly& f) { return a *= f; }

  friend bool operator==(const YSeries&, const YSeries&) = default;

 private:
  std::vector<RatPoly> coeffs_;
};

}  // namespace bicell
