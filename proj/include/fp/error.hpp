#pragma once

#include <stdexcept>
#include <string>

namespace fp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// negative entries, infinities where finite values are required, bad indices
struct DomainError : Error {
  using Error::Error;
};

// power iteration exhausted its budget without certifying the tolerance
struct ConvergenceError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line = 0, col = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", col " +
              std::to_string(col_) + ")"),
        line(line_), col(col_) {}
};

// structurally invalid category data (shape mismatch, gap in sigma range, ...)
struct DataError : Error {
  using Error::Error;
};

// a sigma power was requested that the dataset does not carry
struct MissingData : Error {
  using Error::Error;
};

// ratio denominator has spectral radius zero
struct DegenerateSet : Error {
  using Error::Error;
};

// redundant constructions of the same matrix disagreed
struct BuildError : Error {
  using Error::Error;
};

// the requested invariant is not pinned down by the supplied hypotheses
struct Indeterminate : Error {
  using Error::Error;
};

}  // namespace fp
