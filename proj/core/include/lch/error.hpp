#pragma once

#include <stdexcept>
#include <string>

namespace lch {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace lch
