#pragma once

#include <stdexcept>
#include <string>

namespace noisetune {

/// Bad user input: malformed config values, missing files, invalid CLI args.
/// Maps to CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure during solving or training. Maps to CLI exit code 2.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// The linear system lost rank: a Cholesky pivot vanished and the
/// right-hand side was inconsistent along that direction.
class RankDeficiencyError : public NumericError {
 public:
  RankDeficiencyError(const std::string& what, int variable)
      : NumericError(what), variable_(variable) {}

  /// Index of the first variable whose pivot block failed.
  int variable() const { return variable_; }

 private:
  int variable_;
};

}  // namespace noisetune
