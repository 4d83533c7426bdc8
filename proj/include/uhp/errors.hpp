#pragma once

#include <stdexcept>
#include <string>

namespace uhp {

// Iterative solver failed to reach its residual target.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// Root count (or sign structure) could not be certified at the maximum
// working precision.
class CertificationError : public std::runtime_error {
public:
    explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

// A sum evaluated to (numerically) zero where a logarithm was requested.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace uhp
