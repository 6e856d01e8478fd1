#pragma once

#include <optional>
#include <vector>

#include "mcsp/algebra.hpp"
#include "mcsp/term.hpp"

namespace mcsp {

// Exhaustive over all size^var_count assignments; keep var_count small.
bool check_identity(const FiniteAlgebra & alg, const Term & lhs, const Term & rhs, std::size_t var_count);

// First assignment (row-major order) on which the two sides differ.
std::optional<std::vector<Element>> identity_counterexample(
    const FiniteAlgebra & alg, const Term & lhs, const Term & rhs, std::size_t var_count);

bool is_idempotent(const FiniteAlgebra & alg);

// x.x = x, x.y = y.x and x.(x.y) = x.y.
bool is_two_semilattice(const FiniteAlgebra & alg, const Term & dot);

// Same three identities for a tabulated operation, restricted to the given
// elements. Also requires the set to be closed under the operation.
bool is_two_semilattice_on(const BinaryTable & dot, const ElementSet & elements);
bool is_two_semilattice_on(const BinaryTable & dot);

} // namespace mcsp
