#include "bicell/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "bicell/error.hpp"

namespace bicell {

Integer CellStats::hook_product() const {
  Integer product = 1;
  for (const auto& c : cells) product *= c.hook;
  return product;
}

CellStats cell_stats(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  CellStats stats;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      stats.cells.push_back({i, j, (lambda[i] - j - 1) + (conj[j] - i - 1) + 1, j - i});
  return stats;
}

Integer dimension(const Partition& lambda) {
  return factorial(static_cast<unsigned>(lambda.size())) / cell_stats(lambda).hook_product();
}

namespace {

using CharKey = std::pair<std::vector<int>, std::vector<int>>;

class CharacterCache {
 public:
  bool find(const CharKey& key, Integer& out) const {
    std::shared_lock lock(mutex_);
    const auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(CharKey key, const Integer& value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<CharKey, Integer> table_;
};

CharacterCache& cache() {
  static CharacterCache instance;
  return instance;
}

// Rim hooks are handled on beta-sets (first-column hook lengths): removing a
// rim hook of length r moves one bead from b to b - r, and the hook's height
// minus one is the number of beads strictly between.
std::vector<int> shape_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int part = beta[i] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

Integer mn_recursive(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t from) {
  if (from == mu.size()) return lambda.empty() ? 1 : 0;

  CharKey key{lambda, std::vector<int>(mu.begin() + static_cast<std::ptrdiff_t>(from), mu.end())};
  Integer cached;
  if (cache().find(key, cached)) return cached;

  const int r = mu[from];
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);

  Integer total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> moved = beta;
    moved[i] = target;
    const Integer sub = mn_recursive(shape_from_beta(std::move(moved)), mu, from + 1);
    if (between % 2 == 0) total += sub;
    else total -= sub;
  }

  cache().insert(std::move(key), total);
  return total;
}

Partition build_shape(std::vector<int> parts) {
  return Partition::from_unsorted(std::move(parts));
}

std::vector<int> block(int ones, int twos, std::initializer_list<int> rest) {
  std::vector<int> parts(rest);
  parts.insert(parts.end(), twos, 2);
  parts.insert(parts.end(), ones, 1);
  return parts;
}

void require_face_regime(int p, int n) {
  if (p < 1 || n < 2 * p + 2)
    throw RegimeError("face-type closed form needs 1 <= p and n >= 2p+2 (got p=" + std::to_string(p) +
                      ", n=" + std::to_string(n) + "); use mn_character");
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw InvalidInput("character arguments have different sizes: " + lambda.to_string() + " vs " +
                       mu.to_string());
  return mn_recursive(lambda.parts(), mu.parts(), 0);
}

std::size_t mn_cache_size() { return cache().size(); }

std::vector<FaceFamilyMatch> match_face_families(const Partition& lambda, int p) {
  const int n = lambda.size();
  require_face_regime(p, n);
  std::vector<FaceFamilyMatch> matches;
  auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };

  for (int j = 0; j <= p - 1; ++j)
    if (build_shape(block(j, 0, {n - j})) == lambda) matches.push_back({FaceFamily::kHookLow, j, 0, sign(j)});
  for (int j = n - p; j <= n - 1; ++j)
    if (build_shape(block(j, 0, {n - j})) == lambda)
      matches.push_back({FaceFamily::kHookHigh, j, 0, sign(j + 1)});
  for (int k = 0; k <= p - 1; ++k)
    for (int j = 0; j <= n - 2 * p - 2; ++j)
      if (build_shape(block(j, k, {p - k + 1, n - j - k - p - 1})) == lambda)
        matches.push_back({FaceFamily::kTwoRow, j, k, sign(j + 1)});
  for (int k = 0; k <= p - 2; ++k)
    for (int j = 0; j + k <= p - 2; ++j) {
      const Partition rows = build_shape(block(j, k, {p - k - j, n - k - p}));
      if (rows == lambda) matches.push_back({FaceFamily::kShortRows, j, k, sign(j)});
      const Partition cols = rows.conjugate();
      if (cols == lambda) {
        const int ones = cols.count(1);
        matches.push_back({FaceFamily::kShortCols, ones, cols.count(2), sign(ones)});
      }
    }
  return matches;
}

Integer chi_face_type(const Partition& lambda, int p, int n) {
  require_face_regime(p, n);
  if (lambda.size() != n) throw InvalidInput("chi_face_type: lambda is not a partition of n");
  const auto matches = match_face_families(lambda, p);
  if (matches.empty()) return 0;
  for (const auto& m : matches)
    if (m.face_sign != matches.front().face_sign)
      throw InternalError("face families disagree on " + lambda.to_string());
  return matches.front().face_sign;
}

namespace {

// Sum over j_i (0 <= j_i <= available_i) of prod C(available_i, j_i) times
// the two delta-weighted signs; available_l is n_l - 1 for the smallest size.
Integer two_row_wdd_sum(const Partition& mu, int p, int j) {
  const auto mult = mu.multiplicities();
  const int smallest = mu.smallest();
  std::vector<int> sizes;
  std::vector<int> available;
  for (int i = smallest; i < static_cast<int>(mult.size()); ++i) {
    if (mult[i] == 0) continue;
    sizes.push_back(i);
    available.push_back(i == smallest ? mult[i] - 1 : mult[i]);
  }

  const int first_target = j + p + 1 - smallest;
  const int second_target = j + p + 1;
  Integer total = 0;
  std::vector<int> choice(sizes.size(), 0);
  while (true) {
    Integer weight = 1;
    int chosen = 0;
    int cells = 0;
    for (std::size_t s = 0; s < sizes.size(); ++s) {
      weight *= binomial(available[s], choice[s]);
      chosen += choice[s];
      cells += sizes[s] * choice[s];
    }
    if (cells == first_target) total += (j - chosen) % 2 == 0 ? weight : Integer(-weight);
    if (cells == second_target) total += (j + 1 - chosen) % 2 == 0 ? weight : Integer(-weight);

    std::size_t s = 0;
    while (s < sizes.size() && choice[s] == available[s]) choice[s++] = 0;
    if (s == sizes.size()) break;
    ++choice[s];
  }
  return total;
}

}  // namespace

Integer chi_wdd_closed(const Partition& lambda, const Partition& mu, int p) {
  const int n = mu.size();
  if (lambda.size() != n) throw InvalidInput("chi_wdd_closed: lambda and mu have different sizes");
  require_face_regime(p, n);
  if (mu.smallest() <= p)
    throw RegimeError("chi_wdd_closed needs min(mu) >= p+1 (mu=" + mu.to_string() + ", p=" +
                      std::to_string(p) + "); use mn_character");

  const auto matches = match_face_families(lambda, p);
  if (matches.empty())
    throw InvalidInput("chi_wdd_closed: " + lambda.to_string() + " is in no face family");

  auto value_for = [&](const FaceFamilyMatch& m) -> Integer {
    switch (m.family) {
      case FaceFamily::kHookLow:
        return m.j % 2 == 0 ? 1 : -1;
      case FaceFamily::kHookHigh:
        return (m.j + 1 - mu.length()) % 2 == 0 ? 1 : -1;
      case FaceFamily::kTwoRow:
        return two_row_wdd_sum(mu, p, m.j);
      case FaceFamily::kShortRows:
      case FaceFamily::kShortCols:
        return 0;
    }
    throw InternalError("unknown face family");
  };

  const Integer value = value_for(matches.front());
  for (std::size_t i = 1; i < matches.size(); ++i)
    if (value_for(matches[i]) != value)
      throw InternalError("face families disagree on chi(" + lambda.to_string() + ", " + mu.to_string() + ")");
  return value;
}

}  // namespace bicell
