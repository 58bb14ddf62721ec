#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bicell {

/// An integer partition: a non-increasing list of positive parts. The same
/// value serves as a cycle type, a conjugacy class label and a Young diagram.
class Partition {
 public:
  /// The empty partition of 0.
  Partition() = default;

  /// Parts must already be positive and non-increasing; throws InvalidInput otherwise.
  explicit Partition(std::vector<int> parts);

  /// Accepts parts in any order and sorts them.
  static Partition from_unsorted(std::vector<int> parts);

  /// Builds a partition from multiplicities: mult[i] copies of part i (mult[0] ignored).
  static Partition from_multiplicities(const std::vector<int>& mult);

  /// Parses "3,2,2,1", "2^3,1" or a mix; whitespace and enclosing
  /// parentheses are tolerated. Parts are sorted.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  int largest() const;
  int smallest() const;

  /// m[i] = number of parts equal to i, for 0 <= i <= n.
  std::vector<int> multiplicities() const;
  int count(int part) const;

  Partition conjugate() const;

  /// Sign of any permutation with this cycle type: (-1)^(n - length).
  int sign() const noexcept { return (n_ - length()) % 2 == 0 ? 1 : -1; }

  bool is_hook() const noexcept;

  /// "(3,2,1)"; the empty partition prints as "()".
  std::string to_string() const;
  /// "3,2,1" without parentheses, the form the CLI accepts.
  std::string to_csv() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts, so reverse order of this is reverse-lex.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Every partition of n exactly once, in reverse-lexicographic order starting
/// from (n). n = 0 yields the single empty partition.
std::vector<Partition> partitions_of(int n);

}  // namespace bicell
