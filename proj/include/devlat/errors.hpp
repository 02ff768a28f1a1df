#pragma once

#include <stdexcept>
#include <string>

namespace devlat {

// Malformed or inconsistent input: unknown ids, relations that are not
// orders, tables with out-of-range values, parse failures.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A configured ceiling (cell count, piece count) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace devlat
