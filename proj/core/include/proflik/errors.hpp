#pragma once

#include <stdexcept>
#include <string>

namespace proflik {

// Argument outside the mathematical domain of an operation (t < 0, D <= 0, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Parameter vector does not match the schema expected by a model or problem,
// or a configuration value is structurally invalid.
class SchemaError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input file; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, long line = -1)
      : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}

  long line() const { return line_; }

private:
  long line_;
};

// Rejection sampling ran out of attempts before collecting the requested
// number of confidence-set samples.
class StarvationError : public std::runtime_error {
public:
  StarvationError(const std::string& what, long long attempts, long long accepted)
      : std::runtime_error(what), attempts_(attempts), accepted_(accepted) {}

  long long attempts() const { return attempts_; }
  long long accepted() const { return accepted_; }
  double acceptance_rate() const {
    return attempts_ > 0 ? static_cast<double>(accepted_) / static_cast<double>(attempts_) : 0.0;
  }

private:
  long long attempts_;
  long long accepted_;
};

}  // namespace proflik
