#include "bicell/ratpoly.hpp"

#include "bicell/error.hpp"

namespace bicell {

RatPoly::RatPoly(const Rational& constant) : coeffs_{constant} { trim(); }

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::x() { return monomial(1, 1); }

RatPoly RatPoly::monomial(const Rational& coeff, int degree) {
  if (degree < 0) throw InvalidInput("negative monomial degree");
  std::vector<Rational> c(degree + 1);
  c[degree] = coeff;
  return RatPoly(std::move(c));
}

RatPoly RatPoly::linear(const Rational& c) { return RatPoly(std::vector<Rational>{c, 1}); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int d) const {
  if (d < 0 || d > degree()) return 0;
  return coeffs_[d];
}

const Rational& RatPoly::leading() const {
  if (is_zero()) throw InvalidInput("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

std::vector<std::pair<int, Rational>> RatPoly::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (int d = 0; d <= degree(); ++d)
    if (coeffs_[d] != 0) out.emplace_back(d, coeffs_[d]);
  return out;
}

int RatPoly::low_degree() const {
  for (int d = 0; d <= degree(); ++d)
    if (coeffs_[d] != 0) return d;
  return -1;
}

Rational RatPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> c(degree());
  for (int d = 1; d <= degree(); ++d) c[d - 1] = coeffs_[d] * d;
  return RatPoly(std::move(c));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  return *this / leading();
}

RatPoly& RatPoly::operator+=(const RatPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> c(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(c);
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

RatPoly& RatPoly::operator/=(const Rational& scalar) {
  if (scalar == 0) throw InvalidInput("polynomial division by zero scalar");
  for (auto& c : coeffs_) c /= scalar;
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string RatPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";

    std::string body;
    if (d == 0 || mag != 1) body = is_integral(mag) ? mag.get_str() : "(" + mag.get_str() + ")";
    if (d >= 1) body += var;
    if (d >= 2) body += "^" + std::to_string(d);
    out += body;
  }
  return out;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(a.degree() - b.degree() + 1);
  const Rational& lead = b.leading();
  for (int d = a.degree(); d >= b.degree(); --d) {
    if (rem[d] == 0) continue;
    const Rational factor = rem[d] / lead;
    quot[d - b.degree()] = factor;
    for (int i = 0; i <= b.degree(); ++i) rem[d - b.degree() + i] -= factor * b.coeffs()[i];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly u = a, v = b;
  while (!v.is_zero()) {
    RatPoly r = divmod(u, v).second;
    u = std::move(v);
    v = r.monic();
  }
  return u.monic();
}

}  // namespace bicell
