#pragma once

#include "bicell/partition.hpp"
#include "bicell/ratpoly.hpp"
#include "bicell/rational.hpp"
#include "bicell/yseries.hpp"

namespace bicell {

/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of a permutation of type lambda.
Integer z_of(const Partition& lambda);

/// Size of the conjugacy class C_lambda, n!/z_lambda.
Integer class_size(const Partition& lambda);

/// Signless Stirling number of the first kind: permutations of [n] with k cycles.
/// Zero outside 0 <= k <= n (and for k = 0 < n).
Integer stirling_first_unsigned(int n, int k);

/// C(x + shift, p) as a polynomial in x, expanded from the falling factorial
/// (x+shift)(x+shift-1)...(x+shift-p+1)/p!.
RatPoly binomial_poly(int shift, int p);

/// (1+y)^(x + shift) truncated at y^D: the coefficient of y^k is C(x+shift, k).
YSeries one_plus_y_power(int shift, int truncation);

}  // namespace bicell
