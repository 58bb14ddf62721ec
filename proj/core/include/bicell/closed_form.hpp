#pragma once

#include <map>
#include <string>
#include <vector>

#include "bicell/partition.hpp"
#include "bicell/ratpoly.hpp"
#include "bicell/rational.hpp"
#include "bicell/yseries.hpp"

namespace bicell {

/// Two faces of lengths p and n-p, white vertex degrees mu. p is stored as
/// the smaller face length.
class BicellularInstance {
 public:
  /// Throws InvalidInput unless n >= 2, 1 <= p <= n-1 and mu is a partition of n.
  BicellularInstance(int n, int p, Partition mu);

  int n() const noexcept { return n_; }
  int p() const noexcept { return p_; }
  const Partition& mu() const noexcept { return mu_; }
  Partition face_type() const;

  /// The closed form holds when every white vertex has degree > p.
  bool closed_form_valid() const { return mu_.smallest() >= p_ + 1; }

  std::string to_string() const;

  friend bool operator==(const BicellularInstance&, const BicellularInstance&) = default;

 private:
  int n_;
  int p_;
  Partition mu_;
};

/// All instances with 2 <= n <= max_n and min(mu) >= p+1, ordered by n, then
/// p, then mu in reverse-lex order.
std::vector<BicellularInstance> valid_instances(int max_n);

/// Map from genus to the number of alpha in C_mu giving that genus with the
/// fixed face permutation.
struct GenusDistribution {
  std::map<int, Integer> counts;
  Integer class_size;

  Integer total() const;
  /// "0:6;1:18"
  std::string to_string() const;
};

/// V_mu(y) = prod_i ((1+y)^{mu_i} - 1), truncated at y^D.
YSeries v_mu(const Partition& mu, int truncation);

/// The W-number in closed form:
/// [y^{n-p}] (p!(n-p)!/n!) V_mu(y) sum_{k<p} sum_d (1+y)^{r-d-k-1} (-1)^d C(r,d) C(r-d+p-k-1, p).
/// Throws RegimeError if the instance is outside the closed-form regime.
Rational w_number_bicellular(const BicellularInstance& inst, int r);

/// Genus distribution polynomial
/// (p!(n-p)!/n!) [y^{n-p}] V_mu(y) sum_{i<p} C(x+i, p) (1+y)^{x+i-p}.
/// Throws RegimeError (pointing at poly_charsum) outside the regime.
RatPoly poly_closed(const BicellularInstance& inst);

/// Same polynomial restricted to connected maps; in the closed-form regime
/// every map is connected so this equals poly_closed.
RatPoly poly_connected(const BicellularInstance& inst);

/// Regular white degrees mu = [k^d]:
/// (1/C(dk,p)) sum_{i<p} sum_{j<=d} (-1)^{d-j} C(d,j) C(x+i,p) C(x+i-p+jk, dk-p).
/// Throws InvalidInput unless k > p >= 1 and d >= 1.
RatPoly poly_regular(int p, int k, int d);

/// Converts coefficients to genus counts via g = (n - l(mu) - m)/2.
/// Throws InternalError on a parity, sign or integrality violation.
GenusDistribution genus_distribution(const BicellularInstance& inst, const RatPoly& poly);

}  // namespace bicell
