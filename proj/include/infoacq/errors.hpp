#pragma once

#include <stdexcept>
#include <string>

namespace infoacq {

// Bad solver/cost combination, CFL violation, malformed configuration.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Fixed-step ODE integration produced an invalid state.
struct IntegrationError : std::runtime_error {
    explicit IntegrationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Characteristic shooting failed to bracket or to converge.
struct ShootingError : std::runtime_error {
    explicit ShootingError(const std::string& msg) : std::runtime_error(msg) {}
};

// Iterative solver hit its iteration cap, or a limit sequence is not Cauchy.
struct NoConvergenceError : std::runtime_error {
    explicit NoConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// NaN/Inf appeared where a finite value is required.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace infoacq
