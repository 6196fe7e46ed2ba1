#pragma once

#include <stdexcept>
#include <string>

namespace panast {

/// Failure categories. The CLI maps each to a distinct process exit code.
enum class ErrorKind {
    Io = 2,
    Config = 3,
    EmptyCorpus = 4,
    DegenerateBaseline = 5,
    EmptyEvent = 6,
    InvalidBaseline = 7,
    Overflow = 8,
    Usage = 9,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace panast
