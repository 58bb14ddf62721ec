#include "bicell/closed_form.hpp"

#include <algorithm>

#include "bicell/counting.hpp"
#include "bicell/error.hpp"

namespace bicell {

BicellularInstance::BicellularInstance(int n, int p, Partition mu) : n_(n), p_(p), mu_(std::move(mu)) {
  if (n_ < 2) throw InvalidInput("bicellular instance needs n >= 2");
  if (p_ < 1 || p_ > n_ - 1) throw InvalidInput("face length p must satisfy 1 <= p <= n-1");
  if (mu_.size() != n_)
    throw InvalidInput("mu " + mu_.to_string() + " is not a partition of " + std::to_string(n_));
  p_ = std::min(p_, n_ - p_);
}

Partition BicellularInstance::face_type() const { return Partition({n_ - p_, p_}); }

std::string BicellularInstance::to_string() const {
  return "n=" + std::to_string(n_) + " p=" + std::to_string(p_) + " mu=" + mu_.to_string();
}

std::vector<BicellularInstance> valid_instances(int max_n) {
  std::vector<BicellularInstance> out;
  for (int n = 2; n <= max_n; ++n)
    for (int p = 1; p <= n - p; ++p)
      for (const auto& mu : partitions_of(n))
        if (mu.smallest() >= p + 1) out.emplace_back(n, p, mu);
  return out;
}

Integer GenusDistribution::total() const {
  Integer sum = 0;
  for (const auto& [g, c] : counts) sum += c;
  return sum;
}

std::string GenusDistribution::to_string() const {
  std::string out;
  for (const auto& [g, c] : counts) {
    if (!out.empty()) out += ';';
    out += std::to_string(g) + ":" + c.get_str();
  }
  return out;
}

YSeries v_mu(const Partition& mu, int truncation) {
  YSeries product(truncation);
  product.coeff(0) = 1;
  for (int part : mu.parts()) {
    YSeries factor(truncation);
    for (int k = 1; k <= std::min(part, truncation); ++k) factor.coeff(k) = Rational(binomial(part, k));
    product *= factor;
  }
  return product;
}

namespace {

void require_closed_regime(const BicellularInstance& inst, const char* what) {
  if (!inst.closed_form_valid())
    throw RegimeError(std::string(what) + ": closed form needs min(mu) >= p+1 but " + inst.to_string() +
                      "; use poly_charsum (--method charsum)");
}

Rational face_scale(int n, int p) {
  return make_rational(factorial(static_cast<unsigned>(p)) * factorial(static_cast<unsigned>(n - p)),
                       factorial(static_cast<unsigned>(n)));
}

}  // namespace

Rational w_number_bicellular(const BicellularInstance& inst, int r) {
  require_closed_regime(inst, "w_number_bicellular");
  if (r < 0) throw InvalidInput("w_number_bicellular: r must be non-negative");
  const int n = inst.n();
  const int p = inst.p();
  const int top = n - p;

  // Only [y^{n-p}] is needed, so pair V's coefficients with the binomial
  // series coefficients directly instead of multiplying whole series.
  const YSeries v = v_mu(inst.mu(), top);
  Integer sum = 0;
  for (int k = 0; k <= p - 1; ++k)
    for (int d = 0; d <= r; ++d) {
      const Integer weight = binomial(r, d) * binomial(r - d + p - k - 1, p);
      if (weight == 0) continue;
      Integer extracted = 0;
      for (int i = 0; i <= top; ++i) {
        const Rational vi = v.coeff(i).coeff(0);
        if (vi == 0) continue;
        extracted += vi.get_num() * binomial(r - d - k - 1, top - i);
      }
      if (d % 2 == 0) sum += weight * extracted;
      else sum -= weight * extracted;
    }
  return face_scale(n, p) * Rational(sum);
}

RatPoly poly_closed(const BicellularInstance& inst) {
  require_closed_regime(inst, "poly_closed");
  const int n = inst.n();
  const int p = inst.p();
  const int top = n - p;

  YSeries kernel(top);
  for (int i = 0; i <= p - 1; ++i) kernel += one_plus_y_power(i - p, top) * binomial_poly(i, p);
  const YSeries product = v_mu(inst.mu(), top) * kernel;
  return product.coeff(top) * face_scale(n, p);
}

RatPoly poly_connected(const BicellularInstance& inst) {
  require_closed_regime(inst, "poly_connected");
  return poly_closed(inst);
}

RatPoly poly_regular(int p, int k, int d) {
  if (p < 1 || d < 1) throw InvalidInput("poly_regular needs p >= 1 and d >= 1");
  if (k <= p) throw InvalidInput("poly_regular needs k > p");
  const int n = d * k;
  RatPoly sum;
  for (int i = 0; i <= p - 1; ++i) {
    RatPoly inner;
    for (int j = 0; j <= d; ++j) {
      RatPoly term = binomial_poly(i - p + j * k, n - p) * Rational(binomial(d, j));
      if ((d - j) % 2 == 0) inner += term;
      else inner -= term;
    }
    sum += binomial_poly(i, p) * inner;
  }
  return sum / Rational(binomial(n, p));
}

GenusDistribution genus_distribution(const BicellularInstance& inst, const RatPoly& poly) {
  GenusDistribution dist;
  dist.class_size = class_size(inst.mu());
  const int top = inst.n() - inst.mu().length();
  for (const auto& [m, c] : poly.terms()) {
    const int twice_genus = top - m;
    if (twice_genus < 0 || twice_genus % 2 != 0)
      throw InternalError("degree " + std::to_string(m) + " gives no valid genus for " + inst.to_string());
    const Rational count = c * dist.class_size;
    if (!is_integral(count) || count < 0)
      throw InternalError("genus count is not a non-negative integer for " + inst.to_string());
    dist.counts[twice_genus / 2] = count.get_num();
  }
  return dist;
}

}  // namespace bicell
