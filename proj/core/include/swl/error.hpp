#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace swl {

/// Bad input: malformed type strings, words with out-of-range letters,
/// shape mismatches, violated preconditions.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration ran past its word or time budget.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::uint64_t processed)
      : std::runtime_error(what + " (processed " + std::to_string(processed) + " items before stopping)"),
        processed_(processed) {}
  std::uint64_t processed() const { return processed_; }

 private:
  std::uint64_t processed_;
};

/// A structural theorem failed on concrete data. Carries a readable witness.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace swl
