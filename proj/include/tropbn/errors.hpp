#pragma once

#include <stdexcept>
#include <string>

namespace tropbn {

// Bad user input (CLI exit code 2).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A certificate that was expected to hold failed (CLI exit code 3 in strict mode).
struct CertificateError : std::runtime_error {
    explicit CertificateError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal invariant broke; indicates a bug, not a user error (CLI exit code 4).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void require_input(bool cond, const std::string& msg) {
    if (!cond) throw InputError(msg);
}

inline void require_internal(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

}  // namespace tropbn
