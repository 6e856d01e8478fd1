#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcsp/algebra.hpp"
#include "mcsp/partition.hpp"
#include "mcsp/term.hpp"

namespace mcsp {

struct CongruenceOptions {
    // all_congruences refuses algebras larger than this.
    std::size_t max_size = 12;
};

// Checks every basic operation with a single argument replaced by an
// equivalent one; the general case follows by transitivity.
bool is_congruence(const FiniteAlgebra & alg, const Partition & part);

// Least congruence containing (a, b).
Partition principal_congruence(const FiniteAlgebra & alg, Element a, Element b);

// Least congruence containing every pair in the given relation.
Partition generated_congruence(const FiniteAlgebra & alg, const std::vector<std::pair<Element, Element>> & pairs);

// The whole congruence lattice, sorted, without duplicates; obtained by
// closing the principal congruences under joins.
std::vector<Partition> all_congruences(const FiniteAlgebra & alg, const CongruenceOptions & options = {});

// Congruences strictly below the full relation and maximal among those.
std::vector<Partition> maximal_congruences(const FiniteAlgebra & alg, const CongruenceOptions & options = {});

enum class ThetaFailure {
    NotReflexive,
    NotTransitive,
    NotCongruence,
    NotProjectionOnBlocks,
    QuotientNotTwoSemilattice,
};

std::string_view to_string(ThetaFailure failure);

struct ThetaFailureReport {
    ThetaFailure failure;
    std::string detail;
};

// theta = {(a,b) : a.b = a and b.a = b}, returned only if it is an
// equivalence, a congruence, dot is the first projection on each block, and
// dot is a 2-semilattice operation on the quotient.
std::variant<Partition, ThetaFailureReport> theta_witness(const FiniteAlgebra & alg, const Term & dot);

} // namespace mcsp
