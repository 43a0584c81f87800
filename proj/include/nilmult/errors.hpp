#ifndef NILMULT_ERRORS_HPP
#define NILMULT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilmult {

// A requested enumeration would exceed the configured element cap.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Parameters fall outside the domain a formula is established for.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A Magnus computation was asked for something its truncation cannot decide.
class TruncationError : public std::invalid_argument {
 public:
  explicit TruncationError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace nilmult

#endif  // NILMULT_ERRORS_HPP
