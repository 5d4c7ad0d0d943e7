#ifndef ANAPROP_ERRORS_HPP
#define ANAPROP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace anaprop {

/// Requested a generator-based operation on a norm without an additive
/// generator (minimum, ordinal sums, Frank p = 0).
class NotArchimedeanError : public std::domain_error {
 public:
  explicit NotArchimedeanError(const std::string& what) : std::domain_error(what) {}
};

/// Ordinal-sum segment list is degenerate, unsorted, or overlapping.
class InvalidSegmentsError : public std::invalid_argument {
 public:
  explicit InvalidSegmentsError(const std::string& what) : std::invalid_argument(what) {}
};

/// Frank parameter below zero.
class NegativeParameterError : public std::domain_error {
 public:
  explicit NegativeParameterError(const std::string& what) : std::domain_error(what) {}
};

/// Sweep or scan interval is empty or inverted.
class InvalidRangeError : public std::invalid_argument {
 public:
  explicit InvalidRangeError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace anaprop

#endif  // ANAPROP_ERRORS_HPP
