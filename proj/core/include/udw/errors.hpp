#pragma once

#include <stdexcept>
#include <string>

namespace udw {

// Input fails the Hermitian / unit-trace / positivity checks of a density matrix.
class InvalidDensityMatrixError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An X-state fast path was called on a state with support off the two diagonals.
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The channel produced a zero-trace output that cannot be renormalized.
class DegenerateChannelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative routine hit its iteration cap; carries the best value reached.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best)
      : std::runtime_error(what), best_value(best) {}
  double best_value;
};

// A dataset/report file could not be written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace udw
