#pragma once
#include <stdexcept>
#include <string>

namespace eqq {

enum class ErrorKind {
    Usage,
    Syntax,
    UnknownGenerator,
    Malformed,
    Parity,
    OutOfScope,
    SpaceMismatch,
    NotHomogeneous,
    NotDivisible,
    InconsistentTargets,
    AmbiguousGrading,
    Range,
    InternalNonDivisible,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg);
    ErrorKind kind() const { return kind_; }
    const char* kind_name() const;

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& msg);

// CLI exit status: 1 usage, 2 parse, 3 domain, 4 internal.
int exit_code(ErrorKind kind);

}  // namespace eqq
