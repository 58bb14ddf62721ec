#include "bicell/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bicell/counting.hpp"
#include "bicell/error.hpp"
#include "bicell/parallel.hpp"

namespace bicell {

ClassIterator::ClassIterator(int n, const Partition& lambda, std::vector<int> prefix)
    : ClassIterator(n, lambda, std::move(prefix), n) {}

ClassIterator::ClassIterator(int n, const Partition& lambda, std::vector<int> prefix, int limit)
    : n_(n), limit_(limit), frozen_(static_cast<int>(prefix.size())) {
  if (n < 1) throw InvalidInput("ClassIterator needs n >= 1");
  if (lambda.size() != n) throw InvalidInput(lambda.to_string() + " is not a partition of " + std::to_string(n));
  if (frozen_ > limit_) throw InvalidInput("ClassIterator prefix longer than the word");
  remaining_.assign(n + 1, 0);
  for (int part : lambda.parts()) ++remaining_[part];
  word_.assign(n, -1);
  choice_.assign(n, -1);
  seg_end_.assign(n, 0);
  used_.assign(n, 0);

  for (int pos = 0; pos < frozen_; ++pos) {
    const int c = prefix[pos];
    const bool ok = is_start(pos) ? (c >= 1 && c <= n && remaining_[c] > 0) : (c >= 0 && c < n && !used_[c]);
    if (!ok) throw InvalidInput("ClassIterator prefix is not a valid choice sequence");
    apply(pos, c);
  }
  fill(frozen_);
}

int ClassIterator::smallest_unused() const {
  for (int e = 0; e < n_; ++e)
    if (!used_[e]) return e;
  return -1;
}

int ClassIterator::first_option(int pos) const {
  if (is_start(pos)) {
    for (int len = n_; len >= 1; --len)
      if (remaining_[len] > 0) return len;
    return -1;
  }
  return smallest_unused();
}

int ClassIterator::next_option(int pos, int current) const {
  if (is_start(pos)) {
    for (int len = current - 1; len >= 1; --len)
      if (remaining_[len] > 0) return len;
    return -1;
  }
  for (int e = current + 1; e < n_; ++e)
    if (!used_[e]) return e;
  return -1;
}

void ClassIterator::apply(int pos, int choice) {
  choice_[pos] = choice;
  if (is_start(pos)) {
    const int e = smallest_unused();
    --remaining_[choice];
    word_[pos] = e;
    used_[e] = 1;
    seg_end_[pos] = pos + choice;
  } else {
    word_[pos] = choice;
    used_[choice] = 1;
    seg_end_[pos] = seg_end_[pos - 1];
  }
}

void ClassIterator::undo(int pos) {
  if (is_start(pos)) ++remaining_[choice_[pos]];
  used_[word_[pos]] = 0;
}

void ClassIterator::fill(int from) {
  for (int pos = from; pos < limit_; ++pos) apply(pos, first_option(pos));
}

void ClassIterator::next() {
  if (done_) return;
  for (int pos = limit_ - 1; pos >= frozen_; --pos) {
    undo(pos);
    const int option = next_option(pos, choice_[pos]);
    if (option >= 0) {
      apply(pos, option);
      fill(pos + 1);
      return;
    }
  }
  done_ = true;
}

void ClassIterator::write_images(std::span<int> out) const {
  int start = 0;
  while (start < n_) {
    const int end = seg_end_[start];
    for (int i = start; i + 1 < end; ++i) out[word_[i]] = word_[i + 1];
    out[word_[end - 1]] = word_[start];
    start = end;
  }
}

Permutation ClassIterator::current() const {
  std::vector<int> images(n_);
  write_images(images);
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> ClassIterator::prefixes(int n, const Partition& lambda, int depth) {
  depth = std::clamp(depth, 0, n);
  std::vector<std::vector<int>> out;
  for (ClassIterator it(n, lambda, {}, depth); !it.done(); it.next())
    out.emplace_back(it.choice_.begin(), it.choice_.begin() + depth);
  return out;
}

ClassIterator permutations_of_type(int n, const Partition& lambda) { return ClassIterator(n, lambda); }

Permutation canonical_gamma(int p, int n) {
  if (p < 1 || p > n) throw InvalidInput("canonical_gamma needs 1 <= p <= n");
  std::vector<int> first(p), second(n - p);
  std::iota(first.begin(), first.end(), 1);
  std::iota(second.begin(), second.end(), p + 1);
  std::vector<std::vector<int>> cycles{first};
  if (!second.empty()) cycles.push_back(second);
  return Permutation::from_cycles(n, cycles);
}

Permutation class_representative(const Partition& cycle_type) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (auto it = cycle_type.parts().rbegin(); it != cycle_type.parts().rend(); ++it) {
    std::vector<int> cycle(*it);
    std::iota(cycle.begin(), cycle.end(), next);
    next += *it;
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(cycle_type.size(), cycles);
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

bool transitive_images(std::span<const int> alpha, std::span<const int> gamma, std::vector<int>& parent) {
  const int n = static_cast<int>(alpha.size());
  std::iota(parent.begin(), parent.end(), 0);
  int components = n;
  auto unite = [&](int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  };
  for (int i = 0; i < n; ++i) {
    unite(i, alpha[i]);
    unite(i, gamma[i]);
  }
  return components == 1;
}

int cycles_of_product(std::span<const int> alpha, std::span<const int> gamma, std::vector<char>& seen) {
  const int n = static_cast<int>(alpha.size());
  std::fill(seen.begin(), seen.end(), 0);
  int count = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++count;
    for (int j = i; !seen[j]; j = alpha[gamma[j]]) seen[j] = 1;
  }
  return count;
}

void check_guard(const Partition& mu, const OracleOptions& options) {
  const Integer size = class_size(mu);
  if (size > Integer(static_cast<unsigned long>(options.max_class_size)))
    throw GuardExceeded("class " + mu.to_string() + " has " + size.get_str() +
                            " elements, above the enumeration guard of " + std::to_string(options.max_class_size),
                        size.fits_ulong_p() ? size.get_ui() : UINT64_MAX);
}

}  // namespace

bool is_transitive(const Permutation& alpha, const Permutation& gamma) {
  if (alpha.size() != gamma.size()) throw InvalidInput("is_transitive: permutations act on different sets");
  std::vector<int> parent(alpha.size());
  return transitive_images(alpha.images(), gamma.images(), parent);
}

CycleHistogram oracle_histogram(const Permutation& gamma, const Partition& mu, bool connected_only,
                                const OracleOptions& options) {
  const int n = gamma.size();
  if (mu.size() != n) throw InvalidInput(mu.to_string() + " is not a partition of " + std::to_string(n));
  check_guard(mu, options);

  const auto chunks = ClassIterator::prefixes(n, mu, std::min(n, 3));
  std::vector<CycleHistogram> partial(chunks.size());
  const std::span<const int> g = gamma.images();

  parallel_for(chunks.size(), options.threads, [&](std::size_t c) {
    CycleHistogram& h = partial[c];
    h.counts.assign(n + 1, 0);
    std::vector<int> alpha(n), parent(n);
    std::vector<char> seen(n);
    for (ClassIterator it(n, mu, chunks[c]); !it.done(); it.next()) {
      it.write_images(alpha);
      ++h.total;
      if (connected_only && !transitive_images(alpha, g, parent)) continue;
      ++h.counts[cycles_of_product(alpha, g, seen)];
    }
  });

  CycleHistogram merged;
  merged.counts.assign(n + 1, 0);
  for (const auto& h : partial) {
    merged.total += h.total;
    for (int m = 0; m <= n; ++m) merged.counts[m] += h.counts[m];
  }
  return merged;
}

RatPoly oracle_poly(int n, const Partition& face_type, const Partition& mu, bool connected_only,
                    const OracleOptions& options) {
  if (face_type.size() != n) throw InvalidInput(face_type.to_string() + " is not a partition of " + std::to_string(n));
  const CycleHistogram h = oracle_histogram(class_representative(face_type), mu, connected_only, options);
  std::vector<Rational> coeffs(n + 1);
  const Integer total(std::to_string(h.total));
  for (int m = 0; m <= n; ++m) coeffs[m] = make_rational(Integer(static_cast<unsigned long>(h.counts[m])), total);
  return RatPoly(std::move(coeffs));
}

Integer oracle_xi(const ClassList& classes, int m, const OracleOptions& options) {
  if (classes.t() != 2) throw InvalidInput("oracle_xi handles exactly two classes");
  if (m < 1 || m > classes.n()) throw InvalidInput("oracle_xi: m must lie in 1..n");
  const CycleHistogram h = oracle_histogram(class_representative(classes[1]), classes[0], false, options);
  return class_size(classes[1]) * Integer(static_cast<unsigned long>(h.counts[m]));
}

}  // namespace bicell
