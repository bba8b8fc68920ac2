#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorKind {
    input,             // malformed files, bad constructor parameters
    not_pointed,
    not_homogeneous,
    not_a_sublattice,
    not_a_circuit,
    dimension_mismatch,
    degenerate,
    instability,       // polynomial interpolation did not stabilise within s_max
    cap_exceeded,      // a configured size cap was hit
    overflow,          // value does not fit the narrow exponent/weight type
    internal,          // self-check failed; indicates a bug
};

std::string_view error_kind_name(ErrorKind kind);

class ToricError : public std::runtime_error {
public:
    ToricError(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw ToricError(kind, message);
}

}  // namespace toric
