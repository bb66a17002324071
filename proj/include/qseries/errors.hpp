#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// mixing cyclotomic elements of distinct levels
struct level_error : error {
    using error::error;
};

// evaluation at a pole (tan at pi/2, cot at 0, ...)
struct pole_error : error {
    using error::error;
};

// division by zero / inversion of a series with no known nonzero term
struct division_error : error {
    using error::error;
};

// a query exceeded the known precision of a series
struct precision_error : error {
    using error::error;
};

// bad arguments at an API or CLI boundary
struct usage_error : error {
    using error::error;
};

} // namespace qseries
