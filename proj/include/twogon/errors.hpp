#pragma once

#include <stdexcept>
#include <string>

namespace twogon {

// Input outside the mathematical domain of an operation (alpha out of range, |z| >= 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed or out-of-range non-mathematical arguments (orders, sample counts, spec text).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The requested accuracy cannot be certified (cancellation cap, unresolvable tail, ...).
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation produced a non-finite value.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace twogon
