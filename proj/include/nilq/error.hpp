#pragma once

#include <stdexcept>
#include <string>

namespace nilq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed partition text; the message names the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& token, const std::string& why)
        : Error("cannot parse partition token '" + token + "': " + why), token_(token) {}

    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

}  // namespace nilq
