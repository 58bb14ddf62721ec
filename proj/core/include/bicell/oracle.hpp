#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bicell/charsum.hpp"
#include "bicell/partition.hpp"
#include "bicell/permutation.hpp"
#include "bicell/ratpoly.hpp"

namespace bicell {

/// Streams every permutation of [n] with a given cycle type exactly once.
///
/// A permutation is written as a word of its cycles, each cycle starting with
/// the smallest point not yet used. The word is built position by position:
/// a cycle-start position chooses the length of the new cycle (largest
/// first), any other position chooses an unused point (smallest first). The
/// iterator is an odometer over those choices, so the order is deterministic.
/// A prefix of choices can be pinned to split the class into disjoint chunks.
class ClassIterator {
 public:
  ClassIterator(int n, const Partition& lambda, std::vector<int> prefix = {});

  bool done() const noexcept { return done_; }
  void next();

  Permutation current() const;
  /// Writes the current permutation's 0-based images into `out` (size n).
  void write_images(std::span<int> out) const;

  /// All choice prefixes of the given depth; iterating each of them with
  /// a pinned prefix visits the whole class exactly once.
  static std::vector<std::vector<int>> prefixes(int n, const Partition& lambda, int depth);

 private:
  ClassIterator(int n, const Partition& lambda, std::vector<int> prefix, int limit);

  bool is_start(int pos) const { return pos == 0 || seg_end_[pos - 1] == pos; }
  int smallest_unused() const;
  int first_option(int pos) const;
  int next_option(int pos, int current) const;
  void apply(int pos, int choice);
  void undo(int pos);
  void fill(int from);

  int n_;
  int limit_;
  int frozen_;
  bool done_ = false;
  std::vector<int> remaining_;  // remaining_[L] = cycles of length L still to place
  std::vector<int> word_;
  std::vector<int> choice_;
  std::vector<int> seg_end_;
  std::vector<char> used_;
};

/// Convenience wrapper: materializes the class lazily through ClassIterator.
ClassIterator permutations_of_type(int n, const Partition& lambda);

/// (1 2 ... p)(p+1 ... n); p = n gives the single n-cycle.
Permutation canonical_gamma(int p, int n);

/// Consecutive cycles with lengths taken from the smallest part up, so a
/// two-part type [n-p, p] gives canonical_gamma(p, n).
Permutation class_representative(const Partition& cycle_type);

/// True iff <alpha, gamma> acts transitively on [n]; union-find over both
/// permutations' cycles.
bool is_transitive(const Permutation& alpha, const Permutation& gamma);

struct OracleOptions {
  std::uint64_t max_class_size = 50'000'000;
  unsigned threads = 1;  ///< 0 = hardware concurrency
};

/// counts[m] = #{alpha in C_mu (transitive with gamma if connected_only) : kappa(alpha*gamma) = m}.
struct CycleHistogram {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
};

/// Throws GuardExceeded when |C_mu| exceeds options.max_class_size.
CycleHistogram oracle_histogram(const Permutation& gamma, const Partition& mu, bool connected_only,
                                const OracleOptions& options = {});

/// (1/|C_mu|) sum over alpha in C_mu of x^{kappa(alpha*gamma)}, gamma a fixed
/// representative of face_type; with connected_only, only transitive pairs
/// contribute (still normalized by |C_mu|).
RatPoly oracle_poly(int n, const Partition& face_type, const Partition& mu, bool connected_only,
                    const OracleOptions& options = {});

/// Pairs (s1, s2) in C_1 x C_2 with kappa(s1*s2) = m, as
/// |C_2| * #{s1 in C_1 : kappa(s1*g2) = m} for a fixed g2 in C_2. Needs t = 2.
Integer oracle_xi(const ClassList& classes, int m, const OracleOptions& options = {});

}  // namespace bicell
