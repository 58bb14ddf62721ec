#pragma once

#include <string>
#include <variant>
#include <vector>

#include "bicell/ratpoly.hpp"

namespace bicell {

/// P(x) = x^e Q(x^2) with Q(0) != 0.
struct ParityDecomposition {
  int e = 0;
  RatPoly q;
};

/// Witness that P has support in both parities, which already places a zero
/// off the imaginary axis.
struct MixedParity {
  int even_degree;
  int odd_degree;
};

using ParityResult = std::variant<ParityDecomposition, MixedParity>;

/// Throws InvalidInput for the zero polynomial.
ParityResult parity_decompose(const RatPoly& poly);

/// Number of distinct real roots of a squarefree `poly` in the half-open
/// interval (a, b], counted with a Sturm sequence.
int sturm_count(const RatPoly& poly, const Rational& a, const Rational& b);

/// 1 + max |c_i / c_lead|: every root has absolute value strictly below it.
Rational cauchy_bound(const RatPoly& poly);

/// True iff every root of q is real and negative (q(0) = 0 counts as failure).
/// Decided exactly: squarefree part by gcd with the derivative, then a Sturm
/// count on (-B, 0) with B the Cauchy bound.
bool all_roots_real_nonpositive(const RatPoly& q);

/// True iff every complex zero of poly has real part exactly 0.
bool imaginary_axis_check(const RatPoly& poly);

/// The nonzero coefficients a_1..a_s (increasing degree, gaps skipped)
/// satisfy a_j^2 >= a_{j-1} a_{j+1}. Throws InvalidInput on a negative coefficient.
bool log_concavity_check(const RatPoly& poly);

/// A failed check on one polynomial, for reporting.
struct Counterexample {
  std::string instance;
  std::string check;
  std::string polynomial;
  std::string detail;

  std::string to_string() const;
};

/// Runs both checks on poly and returns one record per failed check.
std::vector<Counterexample> verify_zero_claims(const std::string& instance, const RatPoly& poly);

}  // namespace bicell
