#include "bicell/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

#include "bicell/error.hpp"

namespace bicell {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be non-increasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::from_multiplicities(const std::vector<int>& mult) {
  std::vector<int> parts;
  for (int i = static_cast<int>(mult.size()) - 1; i >= 1; --i) {
    if (mult[i] < 0) throw InvalidInput("negative multiplicity");
    parts.insert(parts.end(), mult[i], i);
  }
  return Partition(std::move(parts));
}

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    throw InvalidInput("cannot parse partition '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '[' && c != ']')
      cleaned.push_back(c);

  std::vector<int> parts;
  std::string_view rest(cleaned);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto token = rest.substr(0, comma);
    const auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_int(token, text));
    } else {
      const int part = parse_int(token.substr(0, caret), text);
      const int times = parse_int(token.substr(caret + 1), text);
      if (times < 0) throw InvalidInput("negative multiplicity in '" + std::string(text) + "'");
      parts.insert(parts.end(), times, part);
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
    if (rest.empty()) throw InvalidInput("trailing comma in '" + std::string(text) + "'");
  }
  return from_unsorted(std::move(parts));
}

int Partition::largest() const {
  if (parts_.empty()) throw InvalidInput("empty partition has no largest part");
  return parts_.front();
}

int Partition::smallest() const {
  if (parts_.empty()) throw InvalidInput("empty partition has no smallest part");
  return parts_.back();
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(n_ + 1, 0);
  for (int part : parts_) ++m[part];
  return m;
}

int Partition::count(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> columns(parts_.front(), 0);
  for (int part : parts_)
    for (int j = 0; j < part; ++j) ++columns[j];
  return Partition(std::move(columns));
}

bool Partition::is_hook() const noexcept {
  return parts_.size() <= 1 || parts_[1] == 1;
}

std::string Partition::to_string() const { return "(" + to_csv() + ")"; }

std::string Partition::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidInput("partitions_of: n must be non-negative");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Standard successor in reverse-lex order: strip trailing ones, decrement
  // the last part > 1, and refill greedily with that value.
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) break;
    const int k = --a.back();
    int rest = ones + 1;
    while (rest > 0) {
      const int take = std::min(k, rest);
      a.push_back(take);
      rest -= take;
    }
  }
  return out;
}

}  // namespace bicell
