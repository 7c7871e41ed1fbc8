#pragma once

#include <stdexcept>

namespace degrank {

// Invalid configuration or invalid input data (CLI maps this to exit code 2).
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace degrank
