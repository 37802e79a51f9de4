#pragma once

#include <stdexcept>
#include <string>

namespace dilbert {

// Malformed input files or config documents.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Contract violations caught before any work starts (bad values, bad call order).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incompatible tensor shapes. The message names both shapes.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem failures.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dilbert
