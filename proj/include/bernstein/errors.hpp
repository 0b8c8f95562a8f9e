#pragma once

#include <stdexcept>
#include <string>

namespace bernstein {

/// Raised when x·f(x) is not square integrable, i.e. f lies outside the
/// domain of the multiplication operator.
class InadmissibleFunction : public std::domain_error {
public:
    explicit InadmissibleFunction(const std::string& what)
        : std::domain_error("InadmissibleFunction: " + what) {}
};

class ZeroFunction : public std::domain_error {
public:
    explicit ZeroFunction(const std::string& what)
        : std::domain_error("ZeroFunction: " + what) {}
};

/// Parameter outside its admissible range (delta, band limit, grid, ...).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

class AllStartsDegenerate : public std::runtime_error {
public:
    explicit AllStartsDegenerate(const std::string& what)
        : std::runtime_error("AllStartsDegenerate: " + what) {}
};

/// The optimizer found (and the quadrature oracle confirmed) a ratio below one.
/// This cannot happen for correct functionals, so it is surfaced loudly.
class BoundViolation : public std::logic_error {
public:
    explicit BoundViolation(const std::string& what)
        : std::logic_error("BoundViolation: " + what) {}
};

void require_delta(double delta);

}  // namespace bernstein
