#include "bicell/charsum.hpp"

#include "bicell/characters.hpp"
#include "bicell/counting.hpp"
#include "bicell/error.hpp"

namespace bicell {

ClassList::ClassList(int n, std::vector<Partition> classes) : n_(n), classes_(std::move(classes)) {
  if (classes_.empty()) throw InvalidInput("class list must contain at least one class");
  for (const auto& c : classes_)
    if (c.size() != n_) throw InvalidInput("class " + c.to_string() + " is not a partition of " + std::to_string(n_));
}

Rational m_factor(const Partition& lambda, int m) {
  if (m < 0) throw InvalidInput("m_factor: m must be non-negative");
  Rational product = 1;
  for (const auto& cell : cell_stats(lambda).cells) {
    if (m + cell.content == 0) return 0;
    product *= make_rational(m + cell.content, cell.hook);
  }
  return product;
}

Rational c_factor(const Partition& lambda, int m) {
  if (m < 0) throw InvalidInput("c_factor: m must be non-negative");
  Rational sum = 0;
  for (int d = 0; d <= m; ++d) {
    const Rational term = Rational(binomial(m, d)) * m_factor(lambda, m - d);
    if (d % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

Rational cf_ratio(const Partition& lambda, int r) {
  if (r < 0) throw InvalidInput("cf_ratio: r must be non-negative");
  const auto stats = cell_stats(lambda);
  Integer sum = 0;
  for (int d = 0; d <= r; ++d) {
    Integer product = binomial(r, d);
    for (const auto& cell : stats.cells) product *= r - d + cell.content;
    if (d % 2 == 0) sum += product;
    else sum -= product;
  }
  return make_rational(sum, factorial(static_cast<unsigned>(lambda.size())));
}

Rational cf_ratio_hook(int j, int n, int r) {
  if (n < 1 || j < 0 || j > n - 1) throw InvalidInput("cf_ratio_hook: need 0 <= j <= n-1");
  if (r < 0) throw InvalidInput("cf_ratio_hook: r must be non-negative");
  Integer sum = 0;
  for (int d = 0; d <= r; ++d) {
    const Integer term = binomial(r, d) * binomial(r - d + n - j - 1, n);
    if (d % 2 == 0) sum += term;
    else sum -= term;
  }
  return Rational(sum);
}

Rational cf_ratio_family2(int j, int k, int p, int n, int r) {
  if (p < 1 || k < 0 || k > p - 1 || j < 0 || j > n - 2 * p - 2)
    throw InvalidInput("cf_ratio_family2: need 0 <= k <= p-1 and 0 <= j <= n-2p-2");
  if (r < 0) throw InvalidInput("cf_ratio_family2: r must be non-negative");
  Integer sum = 0;
  for (int d = 0; d <= r; ++d) {
    const Integer term =
        binomial(r, d) * binomial(r - d + p - k - 1, p) * binomial(r - d + n - j - k - p - 2, n - p);
    if (d % 2 == 0) sum += term;
    else sum -= term;
  }
  const Integer scale = factorial(static_cast<unsigned>(p)) * factorial(static_cast<unsigned>(n - p));
  return make_rational(sum * scale, factorial(static_cast<unsigned>(n)));
}

CharacterProfile character_profile(const ClassList& classes) {
  CharacterProfile profile;
  profile.n = classes.n();
  profile.t = classes.t();
  for (const auto& lambda : partitions_of(classes.n())) {
    Integer product = 1;
    for (const auto& c : classes.classes()) {
      product *= mn_character(lambda, c);
      if (product == 0) break;
    }
    if (product == 0) continue;
    profile.shapes.push_back(lambda);
    profile.character_product.push_back(product);
    profile.dim.push_back(dimension(lambda));
  }
  return profile;
}

CharacterProfile character_profile_bicellular(const Partition& mu, int p) {
  const int n = mu.size();
  CharacterProfile profile;
  profile.n = n;
  profile.t = 2;
  for (const auto& lambda : partitions_of(n)) {
    const Integer face = chi_face_type(lambda, p, n);
    if (face == 0) continue;
    const Integer wdd = chi_wdd_closed(lambda, mu, p);
    if (wdd == 0) continue;
    profile.shapes.push_back(lambda);
    profile.character_product.push_back(face * wdd);
    profile.dim.push_back(dimension(lambda));
  }
  return profile;
}

Rational w_number(const CharacterProfile& profile, int r) {
  if (r < 0) throw InvalidInput("w_number: r must be non-negative");
  Rational total = 0;
  for (std::size_t i = 0; i < profile.shapes.size(); ++i) {
    // c/f^(t-1) = (c/f) * f^(2-t)
    Rational term = cf_ratio(profile.shapes[i], r) * profile.character_product[i];
    for (int e = 2; e < profile.t; ++e) term /= profile.dim[i];
    if (profile.t == 1) term *= profile.dim[i];
    total += term;
  }
  return total;
}

Rational w_number(const ClassList& classes, int r) { return w_number(character_profile(classes), r); }

Integer xi(const ClassList& classes, const CharacterProfile& profile, int m) {
  const int n = classes.n();
  if (m < 1 || m > n) throw InvalidInput("xi: m must lie in 1..n");
  Rational sum = 0;
  for (int k = 0; k <= n - m; ++k) {
    const Rational term = Rational(stirling_first_unsigned(m + k, m)) /
                          Rational(factorial(static_cast<unsigned>(m + k))) * w_number(profile, m + k);
    if (k % 2 == 0) sum += term;
    else sum -= term;
  }
  for (const auto& c : classes.classes()) sum *= class_size(c);
  if (!is_integral(sum) || sum < 0)
    throw InternalError("xi(" + std::to_string(m) + ") is not a non-negative integer: " + to_string(sum));
  return sum.get_num();
}

Integer xi(const ClassList& classes, int m) { return xi(classes, character_profile(classes), m); }

RatPoly poly_charsum(int n, const Partition& face_type, const Partition& mu) {
  const ClassList classes(n, {mu, face_type});
  const bool closed_characters = face_type.length() == 2 && n >= 2 * face_type[1] + 2 &&
                                 face_type[1] >= 1 && mu.smallest() >= face_type[1] + 1;
  const CharacterProfile profile =
      closed_characters ? character_profile_bicellular(mu, face_type[1]) : character_profile(classes);

  // W_{n,r} is shared by every m <= r, so compute each once.
  std::vector<Rational> w(n + 1);
  for (int r = 1; r <= n; ++r) w[r] = w_number(profile, r);

  const Integer mass = class_size(mu) * class_size(face_type);
  std::vector<Rational> coeffs(n + 1);
  for (int m = 1; m <= n; ++m) {
    Rational sum = 0;
    for (int k = 0; k <= n - m; ++k) {
      const Rational term =
          Rational(stirling_first_unsigned(m + k, m)) / Rational(factorial(static_cast<unsigned>(m + k))) * w[m + k];
      if (k % 2 == 0) sum += term;
      else sum -= term;
    }
    // sum = xi / mass; check integrality of xi before keeping it.
    const Rational count = sum * mass;
    if (!is_integral(count) || count < 0)
      throw InternalError("character sum for m=" + std::to_string(m) + " is not a count: " + to_string(count));
    coeffs[m] = sum;
  }
  return RatPoly(std::move(coeffs));
}

}  // namespace bicell
