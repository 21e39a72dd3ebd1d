#pragma once

#include <stdexcept>
#include <string>

namespace symres {

/// Base class for every structured failure raised by the library. Each
/// subclass maps to one process exit code used by the command-line tool.
class Error : public std::runtime_error {
 public:
  Error(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}

  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

/// Malformed input: bad file syntax, field mismatch, zero normal, ...
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(1, what) {}
};

/// A configured enumeration cap was exceeded. Never a silent truncation.
class ComputationCap : public Error {
 public:
  explicit ComputationCap(const std::string& what) : Error(2, what) {}
};

/// Two routes that must agree did not, or a divisibility that must hold failed.
class Inconsistency : public Error {
 public:
  explicit Inconsistency(const std::string& what) : Error(3, what) {}
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int invalid_input = 1;
inline constexpr int computation_cap = 2;
inline constexpr int inconsistency = 3;
}  // namespace exit_code

}  // namespace symres
