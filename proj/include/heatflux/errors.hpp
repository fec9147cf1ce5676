#pragma once

#include <stdexcept>
#include <string>

namespace heatflux {

// Invalid configuration (bad material parameters, malformed config file, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adaptive integration exhausted its panel budget before reaching tolerance.
struct NotConverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Time series too coarsely sampled for extrema extraction.
struct TooCoarse : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Peak-fit parameters requested at a pole of the closed-form expressions.
struct DegenerateFit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace heatflux
