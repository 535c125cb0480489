#pragma once

#include <stdexcept>
#include <string>

namespace qmae {

/// Failure categories. Each maps to a process exit code:
/// usage/config problems exit 2, data/format problems exit 3,
/// numerical failures exit 4.
enum class ErrorKind {
    Config,          // inconsistent run or model configuration
    InvalidSize,     // register size out of the supported range
    Index,           // qubit/sample index out of range or duplicated
    Param,           // parameter vector length mismatch
    Geometry,        // patch dims do not tile the image
    State,           // operation applied to a state that violates its precondition
    Resource,        // requested object exceeds the configured size guard
    DegenerateInput, // input data carries no usable signal (e.g. all-zero image)
    Format,          // malformed file contents
    File,            // missing/unreadable/unwritable file
    Numerical,       // numerical invariant violated at runtime
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    int exit_code() const {
        switch (kind_) {
        case ErrorKind::DegenerateInput:
        case ErrorKind::Format:
        case ErrorKind::File:
            return 3;
        case ErrorKind::Numerical:
            return 4;
        default:
            return 2;
        }
    }

private:
    ErrorKind kind_;
};

} // namespace qmae
