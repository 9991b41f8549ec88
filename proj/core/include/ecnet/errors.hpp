#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ecnet {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Unusable run configuration or arguments. The CLI maps this to exit code 1.
struct ConfigError : Error {
    using Error::Error;
};

// Malformed or inconsistent input data. The CLI maps this to exit code 2.
struct DataError : Error {
    using Error::Error;
};

// Parse failure with an optional byte offset into the offending input.
struct ParseError : DataError {
    explicit ParseError(const std::string& what) : DataError(what) {}
    ParseError(const std::string& what, std::size_t pos)
        : DataError(what + " (byte " + std::to_string(pos) + ")"), position(pos) {}

    std::size_t position = 0;
};

}  // namespace ecnet
