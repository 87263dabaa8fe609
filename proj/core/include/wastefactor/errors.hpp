#pragma once

#include <stdexcept>
#include <string>

namespace wastefactor {

// Malformed or out-of-contract input (bad config, invalid stage, bad range).
// The CLI maps this to exit code 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A stage whose declared waste factor would make its own consumption negative.
class InvalidStage : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Configuration error carrying the JSON path of the offending value.
class ConfigError : public InvalidInput {
 public:
  ConfigError(std::string path, const std::string& what)
      : InvalidInput(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Numeric/domain failure (log of a non-positive value, undefined figure of merit).
// The CLI maps this to exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace wastefactor
