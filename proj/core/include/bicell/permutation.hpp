#pragma once

#include <span>
#include <string>
#include <vector>

#include "bicell/partition.hpp"

namespace bicell {

/// A bijection on {1..n}. Stored 0-based in one-line form; the public cycle
/// notation is 1-based.
class Permutation {
 public:
  Permutation() = default;

  /// 0-based images; throws InvalidInput unless they form a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Builds from 1-based cycles; unlisted points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  /// Image of the 0-based point i.
  int operator()(int i) const { return images_[i]; }
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;

  /// 1-based cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<int>> cycles() const;
  Partition cycle_type() const;
  int num_cycles() const;

  /// "(1 2)(3 4 5)" including fixed points.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (a*b)(i) = a(b(i)): b is applied first.
Permutation compose(const Permutation& a, const Permutation& b);

/// Number of cycles of a*b without materializing the product.
int num_cycles_of_product(const Permutation& a, const Permutation& b);

}  // namespace bicell
