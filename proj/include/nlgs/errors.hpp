#pragma once

#include <stdexcept>
#include <string>

namespace nlgs {

/// Invalid kernel, grid, boundary-constraint or run configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical procedure failed to converge (quadrature, linear solve, ...).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Time integration produced non-finite values.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& what, long step, double t)
        : std::runtime_error(what), step(step), t(t) {}
    long step;
    double t;
};

}  // namespace nlgs
