#pragma once

#include <stdexcept>
#include <string>

namespace contact
{

// Base of everything the library throws on bad input or unmet preconditions.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (e.g. f(0) != 0).
class DomainError : public Error
{
public:
    using Error::Error;
};

// A configuration that violates the data-model invariants.
class ValidationError : public Error
{
public:
    using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error
{
public:
    using Error::Error;
};

// Iteration caps, enumeration budgets.
class ResourceError : public Error
{
public:
    using Error::Error;
};

// The data needed is not determined combinatorially in this setting.
class UnsupportedError : public Error
{
public:
    using Error::Error;
};

} // namespace contact
