// errors.hpp — Exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace qb {

// A computed quantity violated one of the model invariants (norm drift,
// negative ergotropy beyond tolerance, mismatched reduced spectra, ...).
struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

// A requested computation exceeds a resource guard (Fock cutoff, dimension cap).
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A truncated Fock expansion is missing more weight than tolerated.
// required_cutoff is the smallest per-mode cutoff that would satisfy the tolerance.
struct TruncationError : std::runtime_error {
    int required_cutoff;
    TruncationError(const std::string& what, int required)
        : std::runtime_error(what), required_cutoff(required) {}
};

// Configuration text failed to parse or validate; line is 1-based, 0 = no anchor.
struct ConfigError : std::runtime_error {
    int line;
    explicit ConfigError(const std::string& what, int line_no = 0)
        : std::runtime_error(what), line(line_no) {}
};

} // namespace qb
