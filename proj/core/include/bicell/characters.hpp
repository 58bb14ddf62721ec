#pragma once

#include <cstddef>
#include <vector>

#include "bicell/partition.hpp"
#include "bicell/rational.hpp"

namespace bicell {

/// Hook length and content of one cell (row, col), both 0-based.
struct Cell {
  int row;
  int col;
  int hook;
  int content;  ///< col - row
};

/// Per-cell statistics of a Young diagram, in row-major order.
struct CellStats {
  std::vector<Cell> cells;

  Integer hook_product() const;
};

CellStats cell_stats(const Partition& lambda);

/// f^lambda, the number of standard Young tableaux, via the hook length formula.
Integer dimension(const Partition& lambda);

/// chi^lambda(mu) by the Murnaghan-Nakayama rule. Rim hooks of length mu_1
/// are stripped first; results are memoized per (lambda, remaining mu) for the
/// life of the process and the cache is safe to share between threads.
Integer mn_character(const Partition& lambda, const Partition& mu);

std::size_t mn_cache_size();

/// The shapes lambda for which chi^lambda([p, n-p]) can be nonzero when n >= 2p+2.
enum class FaceFamily {
  kHookLow,    ///< [1^j, n-j], 0 <= j <= p-1
  kHookHigh,   ///< [1^j, n-j], n-p <= j <= n-1
  kTwoRow,     ///< [1^j, 2^k, p-k+1, n-j-k-p-1], 0 <= k <= p-1, 0 <= j <= n-2p-2
  kShortRows,  ///< [1^j, 2^k, p-k-j, n-k-p], j + k <= p-2
  kShortCols,  ///< conjugates of kShortRows shapes; j counts their parts of size 1
};

struct FaceFamilyMatch {
  FaceFamily family;
  int j;
  int k;
  int face_sign;  ///< chi^lambda([p, n-p]) for this family
};

/// Every family description that produces lambda (normally zero or one).
std::vector<FaceFamilyMatch> match_face_families(const Partition& lambda, int p);

/// chi^lambda([p, n-p]) from the closed-form family table. Requires
/// n >= 2p + 2 and p >= 1; throws RegimeError otherwise (use mn_character).
Integer chi_face_type(const Partition& lambda, int p, int n);

/// chi^lambda(mu) for lambda in one of the face families and min(mu) >= p+1.
/// Hooks use the sign formulas, kTwoRow the binomial/Kronecker-delta sum over
/// how the remaining rim hooks split between the two pieces; the short-row and
/// short-column families vanish. Throws RegimeError if min(mu) <= p or the
/// regime n >= 2p+2 fails, InvalidInput if lambda matches no family.
Integer chi_wdd_closed(const Partition& lambda, const Partition& mu, int p);

}  // namespace bicell
