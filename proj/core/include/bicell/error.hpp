#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bicell {

/// Malformed user input: bad partitions, mismatched sizes, out-of-range parameters.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A closed form was asked for outside the parameter regime where it holds.
/// The message names the general routine that covers the case.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Brute-force enumeration refused because the class is larger than the guard.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, std::uint64_t estimated)
      : std::runtime_error(what), estimated_(estimated) {}
  std::uint64_t estimated_size() const noexcept { return estimated_; }

 private:
  std::uint64_t estimated_;
};

/// An exact identity failed (non-integral count, negative genus, ...).
/// Always a bug, never an input problem.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bicell
