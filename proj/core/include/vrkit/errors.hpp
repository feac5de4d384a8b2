#pragma once

#include <stdexcept>
#include <string>

namespace vrkit {

// base type for all library errors
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// geometric construction received coincident/collinear input it cannot handle
struct degenerate_input : error {
    using error::error;
};

// square-root continuation cannot decide between the two root candidates
struct branch_ambiguity : error {
    using error::error;
};

// closed polyline is unusable for winding tests (too short, NaN, self-intersecting)
struct malformed_boundary : error {
    using error::error;
};

// principal square root evaluated on its cut (-inf, 0]
struct branch_cut : error {
    using error::error;
};

// transform evaluated at its pole z = 1
struct pole_at_one : error {
    using error::error;
};

// parameter outside the curve/measure domain
struct out_of_domain : error {
    using error::error;
};

// scalar argument outside its admissible range
struct out_of_range : error {
    using error::error;
};

// adaptive step control underflowed; `t_fail` is the time it gave up at
struct tolerance_unreachable : error {
    tolerance_unreachable(const std::string& msg, double t) : error(msg), t_fail(t) {}
    double t_fail;
};

// constrained rejection sampler exhausted its retry budget
struct rejection_budget_exceeded : error {
    using error::error;
};

}  // namespace vrkit
