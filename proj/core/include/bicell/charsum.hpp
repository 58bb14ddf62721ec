#pragma once

#include <vector>

#include "bicell/partition.hpp"
#include "bicell/ratpoly.hpp"
#include "bicell/rational.hpp"

namespace bicell {

/// The conjugacy classes C_1, ..., C_t of S_n whose products are counted.
class ClassList {
 public:
  ClassList(int n, std::vector<Partition> classes);

  int n() const noexcept { return n_; }
  int t() const noexcept { return static_cast<int>(classes_.size()); }
  const std::vector<Partition>& classes() const noexcept { return classes_; }
  const Partition& operator[](std::size_t i) const { return classes_[i]; }

 private:
  int n_;
  std::vector<Partition> classes_;
};

/// m_{lambda,m} = prod over cells (m + content)/hook.
Rational m_factor(const Partition& lambda, int m);

/// c_{lambda,m} = sum_d (-1)^d C(m,d) m_{lambda,m-d}.
Rational c_factor(const Partition& lambda, int m);

/// c_{lambda,r} / f^lambda computed as (1/n!) sum_d (-1)^d C(r,d) prod_u (r-d+c(u)).
Rational cf_ratio(const Partition& lambda, int r);

/// cf_ratio on the hook [1^j, n-j]: sum_d (-1)^d C(r,d) C(r-d+n-j-1, n).
Rational cf_ratio_hook(int j, int n, int r);

/// cf_ratio on [1^j, 2^k, p-k+1, n-j-k-p-1]:
/// (p!(n-p)!/n!) sum_d (-1)^d C(r,d) C(r-d+p-k-1, p) C(r-d+n-j-k-p-2, n-p).
/// Throws InvalidInput unless 0 <= k <= p-1 and 0 <= j <= n-2p-2.
Rational cf_ratio_family2(int j, int k, int p, int n, int r);

/// Per-shape data reused across r: the characters' product and f^lambda.
/// Shapes where some character vanishes are dropped.
struct CharacterProfile {
  int n = 0;
  int t = 0;
  std::vector<Partition> shapes;
  std::vector<Integer> character_product;
  std::vector<Integer> dim;
};

/// Characters via Murnaghan-Nakayama for every class.
CharacterProfile character_profile(const ClassList& classes);

/// For two classes (mu, [p, n-p]) with n >= 2p+2 and min(mu) >= p+1, uses the
/// closed-form family table and chi_wdd_closed instead of the MN recursion.
CharacterProfile character_profile_bicellular(const Partition& mu, int p);

/// W_{n,r} = sum over lambda of c_{lambda,r} / (f^lambda)^(t-1) prod_i chi^lambda(C_i).
Rational w_number(const ClassList& classes, int r);
Rational w_number(const CharacterProfile& profile, int r);

/// xi_{n,m}: number of tuples (s_1..s_t), s_i in C_i, whose product has m cycles.
/// Throws InternalError if the character sum does not clear to a non-negative integer.
Integer xi(const ClassList& classes, int m);
Integer xi(const ClassList& classes, const CharacterProfile& profile, int m);

/// (1/(|C_mu||C_face|)) sum_m xi_{n,m}(C_mu, C_face) x^m. Uses the closed-form
/// characters when face_type = [p, n-p] with n >= 2p+2 and min(mu) >= p+1.
RatPoly poly_charsum(int n, const Partition& face_type, const Partition& mu);

}  // namespace bicell
