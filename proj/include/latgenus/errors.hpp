#pragma once

#include <stdexcept>
#include <string>

namespace latgenus {

/// Malformed or out-of-domain input (bad group expression, bad graph file,
/// violated operation precondition). The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Group order exceeds the configured cap.
class OrderCapExceeded : public InputError {
public:
    using InputError::InputError;
};

}  // namespace latgenus
