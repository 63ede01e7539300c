#pragma once

#include <stdexcept>

namespace wptrelay {

// Precondition violations on numeric inputs (nonpositive distance, power, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Valuation evaluated at or below the support edge p_si.
struct SupportError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inversion target outside the range of the function being inverted.
struct RangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Root-finding target not enclosed by the bracket.
struct BracketError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed auction input (size mismatch, bid at or below support edge, ...).
struct MechanismError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by the experiment driver when too many trials fail.
struct SimAbortError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace wptrelay
