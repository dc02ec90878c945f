#pragma once

#include <stdexcept>
#include <string>

namespace mds {

// Error categories map one-to-one onto CLI exit codes (see tools/mds.cpp).
enum class ErrorKind {
  Input,     // missing or unreadable input location
  Data,      // malformed corpus/resource content, degenerate clusters
  Config,    // invalid run configuration
  Numeric,   // convergence failure, singular system
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by PageRank when the power iteration does not reach the tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(ErrorKind::Numeric, what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace mds
