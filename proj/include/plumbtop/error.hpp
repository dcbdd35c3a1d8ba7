#pragma once

#include <stdexcept>
#include <string>

namespace plumbtop {

// Raised for invalid inputs and violated operation preconditions.
// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace plumbtop
