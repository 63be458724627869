#pragma once

#include <stdexcept>
#include <string>

namespace sphcap {

// Precondition violation: bad parameter ranges, invalid cap-scale modes,
// malformed input files. The CLI maps these to exit code 3.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Numerical self-consistency failure that indicates a bug rather than bad
// input (e.g. a squared discrepancy far below zero).
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sphcap
