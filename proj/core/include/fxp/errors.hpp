#pragma once

#include <stdexcept>
#include <string>

namespace fxp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : Error {
    using Error::Error;
};

struct DivideByZeroError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct NonFiniteError : Error {
    using Error::Error;
};

struct UnsupportedPromotionError : Error {
    using Error::Error;
};

struct CorpusParseError : Error {
    CorpusParseError(const std::string& msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    int line;
};

} // namespace fxp
