#ifndef KNOTDELTA_ERRORS_HPP
#define KNOTDELTA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace knotdelta {

// Bad input text (PD codes, group-element expressions, corpus files).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A move site that is stale or does not apply to the given diagram.
struct inapplicable_move : std::runtime_error {
    explicit inapplicable_move(const std::string& what) : std::runtime_error(what) {}
};

// Correctness tripwire: a computed value violates an identity that must hold
// for every valid input.  Indicates a bug, not a recoverable condition.
struct internal_inconsistency : std::logic_error {
    explicit internal_inconsistency(const std::string& what) : std::logic_error(what) {}
};

}  // namespace knotdelta

#endif
