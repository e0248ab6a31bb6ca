// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace sid {

// Error taxonomy shared by all modules. The CLI maps each family to a
// distinct exit code (config=2, io=3, numeric=4).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Array shape disagreement between two operands.
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// A tap name that does not exist in the detector graph.
struct TapError : std::runtime_error {
  explicit TapError(const std::string& msg) : std::runtime_error(msg) {}
};

// A layer selector that resolves to something with the wrong structure
// (e.g. restoring through a layer that is not class-wise).
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sid
