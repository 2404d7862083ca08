#pragma once

#include <stdexcept>
#include <string>

namespace hetsec {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure failed to reach its tolerance. Carries the best
/// estimate and error bound available when it gave up.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double best_estimate, double error_bound)
        : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

}  // namespace hetsec
