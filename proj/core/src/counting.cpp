#include "bicell/counting.hpp"

#include <vector>

#include "bicell/error.hpp"

namespace bicell {

Integer z_of(const Partition& lambda) {
  const auto m = lambda.multiplicities();
  Integer z = 1;
  for (int i = 1; i < static_cast<int>(m.size()); ++i) {
    if (m[i] == 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m[i]));
    z *= power * factorial(static_cast<unsigned>(m[i]));
  }
  return z;
}

Integer class_size(const Partition& lambda) {
  return factorial(static_cast<unsigned>(lambda.size())) / z_of(lambda);
}

Integer stirling_first_unsigned(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;
  // c(i, j) = c(i-1, j-1) + (i-1) c(i-1, j), one row at a time.
  std::vector<Integer> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Integer> next(i + 1, 0);
    for (int j = 1; j <= i; ++j) {
      next[j] = row[j - 1];
      if (j < i) next[j] += Integer(i - 1) * row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

RatPoly binomial_poly(int shift, int p) {
  if (p < 0) throw InvalidInput("binomial_poly: p must be non-negative");
  RatPoly out(1);
  for (int i = 0; i < p; ++i) out *= RatPoly::linear(shift - i);
  return out / Rational(factorial(static_cast<unsigned>(p)));
}

YSeries one_plus_y_power(int shift, int truncation) {
  YSeries out(truncation);
  for (int k = 0; k <= truncation; ++k) out.coeff(k) = binomial_poly(shift, k);
  return out;
}

}  // namespace bicell
