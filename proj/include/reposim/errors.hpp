#pragma once

#include <stdexcept>
#include <string>

namespace reposim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : Error {
    using Error::Error;
};

// Malformed artifact file; message carries "path:line" where known.
struct FormatError : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct UnsupportedLanguage : Error {
    using Error::Error;
};

// A project tree yielded zero sub-tokens.
struct EmptyProject : Error {
    using Error::Error;
};

// Every sub-token of a project is absent from the assignment table.
struct NoKnownTokens : Error {
    using Error::Error;
};

struct InsufficientPoints : Error {
    using Error::Error;
};

struct ZeroVector : Error {
    using Error::Error;
};

struct ChecksumMismatch : Error {
    using Error::Error;
};

struct EmptyIndex : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct UnknownResult : Error {
    using Error::Error;
};

}  // namespace reposim
