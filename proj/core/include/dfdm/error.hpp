#pragma once

#include <stdexcept>
#include <string>

namespace dfdm {

/// Invalid grid sizes, indices, window parameters, method/function pairings.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A function evaluation produced NaN/Inf, or a result is otherwise unusable.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dfdm
