#ifndef POWFRAC_ERROR_HPP
#define POWFRAC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace powfrac {

enum class ErrorKind {
    Parse,
    BadInput,
    NotSquarefree,
    Reducible,
    NoRootAboveOne,
    AmbiguousRoot,
    NotSalem,
    NotAlgebraicInteger,
    BaseMismatch,
    PrecisionExhausted,
    InconsistentSample,
    ToleranceViolation,
    NoCollision,
    EtaAssignment,
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Process exit code for the CLI contract: 2 input error, 3 precision
/// exhaustion, 4 internal inconsistency.
int exit_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string_view module, const std::string& what)
        : std::runtime_error(std::string(module) + ": " + std::string(to_string(kind)) + ": " + what),
          kind_(kind),
          module_(module) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view module() const noexcept { return module_; }

private:
    ErrorKind kind_;
    std::string_view module_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::NoRootAboveOne: return "NoRootAboveOne";
    case ErrorKind::AmbiguousRoot: return "AmbiguousRoot";
    case ErrorKind::NotSalem: return "NotSalem";
    case ErrorKind::NotAlgebraicInteger: return "NotAlgebraicInteger";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::InconsistentSample: return "InconsistentSample";
    case ErrorKind::ToleranceViolation: return "ToleranceViolation";
    case ErrorKind::NoCollision: return "NoCollision";
    case ErrorKind::EtaAssignment: return "EtaAssignment";
    case ErrorKind::Internal: return "InternalInconsistency";
    }
    return "Unknown";
}

inline int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::PrecisionExhausted: return 3;
    case ErrorKind::InconsistentSample:
    case ErrorKind::Internal: return 4;
    default: return 2;
    }
}

}  // namespace powfrac

#endif  // POWFRAC_ERROR_HPP
