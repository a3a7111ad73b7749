#pragma once

#include <stdexcept>
#include <string>

namespace abel {

// Process exit codes shared by the CLI and the library error types.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitParseError = 2,
    kExitOutOfScope = 3,
    kExitInternalInconsistency = 4,
};

struct Error : std::runtime_error {
    explicit Error(const std::string& what, int code = kExitFailure)
        : std::runtime_error(what), exit_code(code) {}
    int exit_code;
};

// Malformed expression or document.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")", kExitParseError),
          position(pos) {}
    explicit ParseError(const std::string& what) : Error(what, kExitParseError), position(0) {}
    std::size_t position;
};

// Equation classes delegated to other methods (Riccati, Bernoulli, constant A, C == 0).
struct OutOfScopeError : Error {
    explicit OutOfScopeError(const std::string& what) : Error(what, kExitOutOfScope) {}
};

// A structural law that must hold for verified curves failed; signals a bug, surfaced loudly.
struct InternalInconsistencyError : Error {
    explicit InternalInconsistencyError(const std::string& what)
        : Error(what, kExitInternalInconsistency) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what, kExitFailure) {}
};

// Trajectory left the integration window before reaching the endpoint.
struct BlowUpError : Error {
    BlowUpError(const std::string& what, double t) : Error(what, kExitFailure), escape_time(t) {}
    double escape_time;
};

}  // namespace abel
