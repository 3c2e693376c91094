#ifndef QGAIN_ERRORS_HPP
#define QGAIN_ERRORS_HPP

#include <stdexcept>

namespace qgain {

// Inverting zero, zero denominators, unit construction from a zero seed.
struct zero_divisor_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Violated operation preconditions: not a cycle, not a tree, zero row scalar,
// theorem preconditions, bad generator parameters.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exhaustive fallbacks refused beyond their documented size bound.
struct size_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed graph/matrix files.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qgain

#endif
