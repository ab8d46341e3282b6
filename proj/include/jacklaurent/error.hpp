#pragma once

#include <stdexcept>
#include <string>

namespace jl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : Error(msg + " at position " + std::to_string(p)), pos(p) {}
};

/// A verification abort: the computation contradicts a structural claim the
/// machinery relies on. Surfaced as a failure, never masked.
struct CheckError : Error {
    using Error::Error;
};

}  // namespace jl
