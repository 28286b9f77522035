#pragma once

#include <stdexcept>
#include <string>

namespace fpec {

// Malformed input text or JSON.  CLI exit code 2.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Input violates an operation's precondition (disconnected, bridged,
// wrong order, ...).  CLI exit code 3.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// A bound the algorithms promise could not be met (palette overflow,
// structural assertion on a dual failed).  CLI exit code 4.
struct bound_error : std::runtime_error {
    explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

// A state the construction proofs rule out.  Reaching it is a bug.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace fpec
