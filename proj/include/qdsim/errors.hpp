#pragma once

#include <stdexcept>
#include <string>

namespace qdsim {

// Thrown when matrix shapes do not match the operation (wrong size,
// incompatible factors, index out of range).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when a numeric argument or matrix is outside the physically
// allowed domain (unnormalized state, negative eigenvalue, parameter
// out of range).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace qdsim
