#pragma once

#include <stdexcept>
#include <string>

namespace msdiff {

/// Failure categories. The numeric value doubles as the CLI exit code.
enum class ErrorCategory : int {
  kInvalidParameter = 2,
  kConfiguration = 3,
  kSingularSystem = 4,
  kPositivity = 5,
  kStability = 6,
  kComparison = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }
  int exit_code() const noexcept { return static_cast<int>(category_); }

 private:
  ErrorCategory category_;
};

class InvalidParameterError : public Error {
 public:
  explicit InvalidParameterError(const std::string& what)
      : Error(ErrorCategory::kInvalidParameter, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(ErrorCategory::kConfiguration, what) {}
};

/// Raised when a pivot falls below the singular tolerance.
class SingularSystemError : public Error {
 public:
  SingularSystemError(const std::string& what, std::size_t pivot)
      : Error(ErrorCategory::kSingularSystem, what), pivot_(pivot) {}

  std::size_t pivot() const noexcept { return pivot_; }

 private:
  std::size_t pivot_;
};

class PositivityError : public Error {
 public:
  PositivityError(const std::string& what, double time, std::size_t node,
                  std::size_t species)
      : Error(ErrorCategory::kPositivity, what),
        time_(time),
        node_(node),
        species_(species) {}

  double time() const noexcept { return time_; }
  std::size_t node() const noexcept { return node_; }
  std::size_t species() const noexcept { return species_; }

 private:
  double time_;
  std::size_t node_;
  std::size_t species_;
};

class StabilityError : public Error {
 public:
  explicit StabilityError(const std::string& what)
      : Error(ErrorCategory::kStability, what) {}
};

class ComparisonError : public Error {
 public:
  explicit ComparisonError(const std::string& what)
      : Error(ErrorCategory::kComparison, what) {}
};

}  // namespace msdiff
