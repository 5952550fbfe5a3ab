#ifndef CHOWLAB_ERRORS_HPP
#define CHOWLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chowlab {

// Every failure mode the CLI must distinguish gets its own kind; the CLI
// maps kinds to exit codes.
enum class ErrorKind {
    Parse,
    UnsupportedRank,       // torus rank above the chamber/subdivision cap
    UnsupportedDimension,  // hull machinery above ambient dim 3
    OutsidePolytope,
    ScaleCap,              // enumeration size cap exceeded
    InsufficientPrecision, // truncation order too small to decide a limit
    AssignmentFailure,     // charge assignment conflict after retries
    Precondition,
    EmptyPolytope,
    Io,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return "parse";
        case ErrorKind::UnsupportedRank: return "unsupported-rank";
        case ErrorKind::UnsupportedDimension: return "unsupported-dimension";
        case ErrorKind::OutsidePolytope: return "outside-polytope";
        case ErrorKind::ScaleCap: return "scale-cap";
        case ErrorKind::InsufficientPrecision: return "insufficient-precision";
        case ErrorKind::AssignmentFailure: return "assignment-failure";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::EmptyPolytope: return "empty-polytope";
        case ErrorKind::Io: return "io";
        case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

} // namespace chowlab

#endif
