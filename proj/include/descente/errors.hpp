#pragma once

#include <stdexcept>
#include <string>

namespace descente {

/// Raised when an operation is called outside its mathematical domain
/// (a violated precondition such as a non-prime modulus or a zero input).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by natural-number subtraction when the result would be negative.
class UnderflowError : public std::underflow_error {
public:
    using std::underflow_error::underflow_error;
};

}  // namespace descente
