#pragma once

#include <optional>
#include <set>
#include <vector>

#include "mcsp/algebra.hpp"
#include "mcsp/term.hpp"

namespace mcsp {

// The k rows of the k-edge identities e(u_0..u_k) = x, positions 0-based.
// Entry true means the position carries y:
//   row 0: y y x x ... x
//   row 1: y x y x ... x
//   row r (r >= 2): y only at position r + 1
std::vector<std::vector<bool>> edge_identity_rows(std::size_t k);

// e(u_0..u_k) with x = Var(0) and y = Var(1) substituted per the row.
Term edge_row_term(const Term & e, const std::vector<bool> & row);

// e must use only variables x0..xk and k >= 2.
bool is_edge_operation(const FiniteAlgebra & alg, const Term & e, std::size_t k);

// Positions (0-based) on which the term operation depends in the given algebra.
std::set<std::size_t> dependency_set(const FiniteAlgebra & alg, const Term & term, std::size_t var_count);

// Builds a binary term that is the first projection wherever e is an edge
// term and agrees with star wherever the dependency set of e is dep_set and
// star is a 2-semilattice operation. Positions in dep_set are 0-based.
//
//   dep_set within {0,1}:  e(x*y, x*y, x, ..., x)
//   dep_set within {0,2}:  e(x*y, x, x*y, x, ..., x)
//   dep_set == {i}, i>=3:  x*y at position i, x elsewhere
//   otherwise:             an edge-identity row whose restriction to dep_set
//                          mentions both x and y; rows whose y-positions form
//                          a proper subset of dep_set are preferred.
//
// fallback_row forces the row used in the last case. Fails with
// NoApplicableCase when no row qualifies.
Term derive_dot_term(const Term & e, std::size_t k, const Term & star, const std::set<std::size_t> & dep_set,
    std::optional<std::size_t> fallback_row = std::nullopt);

} // namespace mcsp
