#pragma once

#include <stdexcept>
#include <string>

namespace gtri {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Three points or side lengths that do not span a proper triangle.
class DegenerateTriangle : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative method (quadrature, series) stopped before reaching its
/// tolerance. The best estimate found so far travels with the exception.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double error_estimate)
        : std::runtime_error(what), best_(best_estimate), err_(error_estimate) {}

    double best_estimate() const noexcept { return best_; }
    double error_estimate() const noexcept { return err_; }

private:
    double best_;
    double err_;
};

}  // namespace gtri
