#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vgs {

// Base type for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfLoopError : Error { using Error::Error; };
struct UnknownNodeError : Error { using Error::Error; };
struct OrderingError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct EmptyInputError : Error { using Error::Error; };
struct InvalidChoiceError : Error { using Error::Error; };
struct WarmupError : Error { using Error::Error; };
struct StreamGapError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// CSV ingestion failure; carries the 1-based line number of the offending row.
struct ParseError : Error {
    std::size_t line;
    ParseError(const std::string& msg, std::size_t line_number)
        : Error(msg + " (line " + std::to_string(line_number) + ")"), line(line_number) {}
};

}  // namespace vgs
