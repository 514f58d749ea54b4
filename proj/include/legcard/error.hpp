#pragma once

#include <stdexcept>
#include <string>

namespace legcard {

// Broad error classes; the CLI maps each to its own exit status.
enum class ErrorKind {
    invalid_argument,  // bad q, m, bounds, ...
    parse,             // malformed front / DGA text
    validation,        // structurally valid input that violates an invariant
    unknown_example,
    io,
    internal,          // a computed object failed a self-check
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace legcard
