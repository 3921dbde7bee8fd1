#pragma once

#include <stdexcept>
#include <string>

namespace pedflow {

// Invalid or out-of-range scenario parameters. Messages name the offending key.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pedflow
