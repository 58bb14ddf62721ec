#include "bicell/permutation.hpp"

#include <numeric>

#include "bicell/error.hpp"

namespace bicell {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw InvalidInput("images do not form a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> touched(n, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i] - 1;
      const int to = cycle[(i + 1) % cycle.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n || touched[from])
        throw InvalidInput("invalid cycle notation");
      touched[from] = 1;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      cycle.push_back(j + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Partition Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  return Partition::from_unsorted(std::move(lengths));
}

int Permutation::num_cycles() const {
  std::vector<char> seen(images_.size(), 0);
  int count = 0;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (int j = i; !seen[j]; j = images_[j]) seen[j] = 1;
  }
  return count;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& cycle : cycles()) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidInput("compose: permutations act on different sets");
  std::vector<int> images(a.size());
  for (int i = 0; i < a.size(); ++i) images[i] = a(b(i));
  return Permutation(std::move(images));
}

int num_cycles_of_product(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidInput("product: permutations act on different sets");
  const int n = a.size();
  std::vector<char> seen(n, 0);
  int count = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++count;
    for (int j = i; !seen[j]; j = a(b(j))) seen[j] = 1;
  }
  return count;
}

}  // namespace bicell
