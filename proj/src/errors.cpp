#include "eqq/errors.hpp"

namespace eqq {

Error::Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

const char* Error::kind_name() const
{
    switch (kind_) {
    case ErrorKind::Usage: return "UsageError";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::Malformed: return "MalformedExpression";
    case ErrorKind::Parity: return "ParityError";
    case ErrorKind::OutOfScope: return "OutOfScopeRegion";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::InconsistentTargets: return "InconsistentTargets";
    case ErrorKind::AmbiguousGrading: return "AmbiguousGrading";
    case ErrorKind::Range: return "RangeError";
    case ErrorKind::InternalNonDivisible: return "InternalNonDivisible";
    case ErrorKind::Internal: return "InternalError";
    }
    return "Error";
}

void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Usage: return 1;
    case ErrorKind::Syntax:
    case ErrorKind::UnknownGenerator: return 2;
    case ErrorKind::InternalNonDivisible:
    case ErrorKind::Internal: return 4;
    default: return 3;
    }
}

}  // namespace eqq
