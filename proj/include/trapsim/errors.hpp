#pragma once

#include <stdexcept>
#include <string>

namespace trapsim {

// Numerical failure: no threshold crossing, fit non-convergence, basis too small.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class NoCrossingError : public NumericalError {
 public:
  explicit NoCrossingError(const std::string& what) : NumericalError(what) {}
};

class BasisTooSmallError : public NumericalError {
 public:
  explicit BasisTooSmallError(const std::string& what) : NumericalError(what) {}
};

// Config-file problem; carries a 1-based line number (0 = whole file).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& msg)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace trapsim
