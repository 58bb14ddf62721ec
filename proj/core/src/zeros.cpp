#include "bicell/zeros.hpp"

#include "bicell/error.hpp"

namespace bicell {

ParityResult parity_decompose(const RatPoly& poly) {
  if (poly.is_zero()) throw InvalidInput("parity_decompose: zero polynomial");
  int even = -1, odd = -1;
  for (const auto& [d, c] : poly.terms()) {
    if (d % 2 == 0 && even < 0) even = d;
    if (d % 2 == 1 && odd < 0) odd = d;
  }
  if (even >= 0 && odd >= 0) return MixedParity{even, odd};

  const int e = poly.low_degree();
  std::vector<Rational> q((poly.degree() - e) / 2 + 1);
  for (const auto& [d, c] : poly.terms()) q[(d - e) / 2] = c;
  return ParityDecomposition{e, RatPoly(std::move(q))};
}

namespace {

std::vector<RatPoly> sturm_sequence(const RatPoly& poly) {
  std::vector<RatPoly> seq{poly, poly.derivative()};
  while (!seq.back().is_zero()) {
    RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_changes(const std::vector<RatPoly>& seq, const Rational& at) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sgn(p.evaluate(at));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sturm_count(const RatPoly& poly, const Rational& a, const Rational& b) {
  if (poly.is_zero()) throw InvalidInput("sturm_count: zero polynomial");
  if (poly.degree() == 0) return 0;
  const auto seq = sturm_sequence(poly);
  return sign_changes(seq, a) - sign_changes(seq, b);
}

Rational cauchy_bound(const RatPoly& poly) {
  if (poly.is_zero()) throw InvalidInput("cauchy_bound: zero polynomial");
  Rational largest = 0;
  for (int d = 0; d < poly.degree(); ++d) {
    const Rational ratio = abs(poly.coeff(d) / poly.leading());
    if (ratio > largest) largest = ratio;
  }
  return largest + 1;
}

bool all_roots_real_nonpositive(const RatPoly& q) {
  if (q.is_zero()) throw InvalidInput("all_roots_real_nonpositive: zero polynomial");
  if (q.degree() == 0) return true;
  if (q.coeff(0) == 0) return false;
  // Same roots as q, each simple; multiplicities do not affect the location.
  const RatPoly squarefree = divmod(q, gcd(q, q.derivative())).first;
  const Rational bound = cauchy_bound(squarefree);
  // (-B, 0]: 0 is not a root, and no root reaches -B.
  return sturm_count(squarefree, -bound, 0) == squarefree.degree();
}

bool imaginary_axis_check(const RatPoly& poly) {
  const ParityResult parts = parity_decompose(poly);
  if (std::holds_alternative<MixedParity>(parts)) return false;
  return all_roots_real_nonpositive(std::get<ParityDecomposition>(parts).q);
}

bool log_concavity_check(const RatPoly& poly) {
  std::vector<Rational> a;
  for (const auto& [d, c] : poly.terms()) {
    if (c < 0) throw InvalidInput("log_concavity_check: negative coefficient at degree " + std::to_string(d));
    a.push_back(c);
  }
  for (std::size_t j = 1; j + 1 < a.size(); ++j)
    if (a[j] * a[j] < a[j - 1] * a[j + 1]) return false;
  return true;
}

std::string Counterexample::to_string() const {
  return "[" + check + "] " + instance + " P=" + polynomial + (detail.empty() ? "" : " (" + detail + ")");
}

std::vector<Counterexample> verify_zero_claims(const std::string& instance, const RatPoly& poly) {
  std::vector<Counterexample> out;
  if (poly.is_zero()) {
    out.push_back({instance, "imag_axis", poly.to_string(), "zero polynomial"});
    return out;
  }
  const ParityResult parts = parity_decompose(poly);
  if (const auto* mixed = std::get_if<MixedParity>(&parts)) {
    out.push_back({instance, "imag_axis", poly.to_string(),
                   "mixed parity: degrees " + std::to_string(mixed->even_degree) + " and " +
                       std::to_string(mixed->odd_degree)});
  } else if (!all_roots_real_nonpositive(std::get<ParityDecomposition>(parts).q)) {
    out.push_back({instance, "imag_axis", poly.to_string(),
                   "Q(t)=" + std::get<ParityDecomposition>(parts).q.to_string('t') + " has a root off (-inf,0)"});
  }
  bool negative = false;
  for (const auto& [d, c] : poly.terms()) negative = negative || c < 0;
  if (negative) {
    out.push_back({instance, "log_concave", poly.to_string(), "negative coefficient"});
  } else if (!log_concavity_check(poly)) {
    out.push_back({instance, "log_concave", poly.to_string(), "a_j^2 < a_{j-1} a_{j+1} somewhere"});
  }
  return out;
}

}  // namespace bicell
