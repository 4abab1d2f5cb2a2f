#pragma once

namespace fallcalc {

// Numeric divisors carry rounded points; these radii control when two points
// are considered equal and when a gap counts as exactly one.
struct TolerancePolicy {
    double unit_gap_eps = 1e-9;
    double root_eps = 1e-6;
};

}  // namespace fallcalc
