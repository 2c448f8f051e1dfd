#pragma once

#include <stdexcept>
#include <string>

namespace renyi {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A quadrature or iterative method failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double coarse, double fine)
        : std::runtime_error(what), coarse_(coarse), fine_(fine) {}

    double coarse_estimate() const noexcept { return coarse_; }
    double fine_estimate() const noexcept { return fine_; }

private:
    double coarse_;
    double fine_;
};

// Floating-point breakdown inside a numerical kernel (e.g. eigensolver).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File could not be opened, written or parsed; the message carries the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace renyi
