#pragma once

#include <stdexcept>
#include <string>

namespace laurexp {

/// A problem description that cannot be analyzed. `line` is 1-based, 0 when
/// the error is not tied to a line.
class SpecError : public std::runtime_error {
 public:
  SpecError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A computation needed more letters, powers or iterations than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The witness search found no candidate with omega > 1.
class NoWitness : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace laurexp
