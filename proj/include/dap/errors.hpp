#pragma once

#include <stdexcept>
#include <string>

namespace dap {

// Error taxonomy. Everything user-triggerable derives from dap::error so the CLI
// can catch one type and map it to exit code 2; internal invariant violations use
// internal_error and map to exit 1 (they indicate a bug, not bad input).

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (path/word/meander syntax, bad JSON, bad number).
struct parse_error : error {
    using error::error;
};

// Syntactically fine but violates an object invariant (negative height,
// consecutive down steps, wavy step after the prefix, ...).
struct validation_error : error {
    using error::error;
};

// Operation applied to the wrong kind of object (lowering a non-prime path,
// pocket-path statistic requested on a Motzkin family, ...).
struct type_mismatch_error : error {
    using error::error;
};

// Structurally valid request outside the supported parameter range (n too
// large, order too large, unknown family/statistic id for a combination).
struct domain_error : error {
    using error::error;
};

// Enumeration or series computation would exceed configured limits.
struct resource_limit_error : error {
    using error::error;
};

// Series-algebra preconditions (division by non-unit, sqrt of constant != 1,
// fixed point failed to stabilize).
struct series_error : error {
    using error::error;
};

// Cross-checks between supposedly-equal computation routes disagreed, or a
// runtime invariant that "cannot happen" did. Always a bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct internal_mismatch_error : internal_error {
    using internal_error::internal_error;
};

}  // namespace dap
