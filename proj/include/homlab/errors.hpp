#ifndef HOMLAB_ERRORS_HPP
#define HOMLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homlab {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments, malformed input, violated preconditions.  CLI exit 2.
struct argument_error : error {
    explicit argument_error(const std::string& msg) : error(msg) {}
};

// Malformed input file; carries "path:line:" prefix in the message.  CLI exit 2.
struct parse_error : argument_error {
    explicit parse_error(const std::string& msg) : argument_error(msg) {}
};

// Instance exceeds a configured cap (vertex budget, canonicalization cap, ...).
// CLI exit 3.
struct capacity_error : error {
    explicit capacity_error(const std::string& msg) : error(msg) {}
};

// Search node budget exhausted.  Distinct from "no homomorphism": verification
// workflows must treat this as failure to decide, never as evidence.  CLI exit 3.
struct budget_error : capacity_error {
    explicit budget_error(const std::string& msg) : capacity_error(msg) {}
};

// A construction postcondition failed.  Indicates a bug; surfaced, never
// repaired silently.
struct internal_error : error {
    explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace homlab

#endif
