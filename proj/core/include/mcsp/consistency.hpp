#pragma once

#include <cstddef>

#include "mcsp/instance.hpp"

namespace mcsp {

struct ConsistencyStats {
    std::size_t deletions = 0; // ordered pairs removed, counting (a,b) and (b,a) once each
    std::size_t sweeps = 0;    // full passes over (x,y,z), including the final quiet one
};

// Runs the (2,3)-consistency fixpoint on a raw instance. The result has the
// same solutions as raw and is either standard or empty (all potatoes empty).
// Unary constraints (x,P) are intersected into R_xx as 0_P before the loop.
Instance two_three_consistency(const RawInstance & raw, ConsistencyStats * stats = nullptr);

// Direct reading of a raw instance without any propagation: P_x is D cut by
// the unary constraints on x, R_xy the intersection of all constraints on
// (x,y) and the inverses of those on (y,x). Used by the brute-force oracle.
Instance interpret_raw(const RawInstance & raw);

} // namespace mcsp
