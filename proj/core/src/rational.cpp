#include "bicell/rational.hpp"

#include "bicell/error.hpp"

namespace bicell {

Integer factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(const Integer& top, long k) {
  if (k < 0) return 0;
  Integer num = 1;
  for (long i = 0; i < k; ++i) num *= top - i;
  return num / factorial(static_cast<unsigned>(k));
}

Integer binomial(long top, long k) { return binomial(Integer(top), k); }

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text, 10));
    return make_rational(Integer(text.substr(0, slash), 10), Integer(text.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw InvalidInput("not a rational number: '" + text + "'");
  }
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace bicell
