#ifndef MINVAR_ERROR_HPP
#define MINVAR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace minvar {

// Malformed input: dimension mismatch, non-prime p, violated precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonUnimodular : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// A configured resource bound (group order, resolution depth, norm guard, ...)
// was exceeded. Reported, never silently truncated.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OrderBoundExceeded : public BoundExceeded {
public:
    using BoundExceeded::BoundExceeded;
};

bool is_prime(long p);

inline void require_prime(long p)
{
    if (!is_prime(p))
        throw InvalidInput("not a prime: " + std::to_string(p));
}

}  // namespace minvar

#endif
