#pragma once

#include <stdexcept>
#include <string>

namespace hsk {

// Bad caller input: malformed parameters, labels out of range, size mismatches.
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct dimension_error : argument_error {
    using argument_error::argument_error;
};

struct label_error : argument_error {
    using argument_error::argument_error;
};

struct unsupported_error : argument_error {
    using argument_error::argument_error;
};

// Input exceeds the exhaustive-search feasibility bound of an oracle.
struct scale_error : argument_error {
    using argument_error::argument_error;
};

// A gluing precondition checked at runtime does not hold for the given blocks.
struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A splice and the bounded certified search both failed to produce a cycle.
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hsk
