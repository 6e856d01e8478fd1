#pragma once

#include <vector>

#include "mcsp/algebra.hpp"
#include "mcsp/digraph.hpp"
#include "mcsp/term.hpp"

namespace mcsp {

// The arrow relation a -> b iff a.b = b of a 2-semilattice.
struct SemilatticeDigraph {
    BinaryTable dot;
    Digraph graph;

    std::size_t size() const noexcept { return graph.vertex_count(); }
};

// Fails with NotTwoSemilattice unless dot is a 2-semilattice operation on alg.
SemilatticeDigraph build_digraph(const FiniteAlgebra & alg, const Term & dot);

// Arrow digraph of an already tabulated operation restricted to `elements`;
// vertex i stands for elements[i]. No 2-semilattice check.
Digraph arrow_digraph(const BinaryTable & dot, const ElementSet & elements);

SccDecomposition scc(const SemilatticeDigraph & dg);

// Vertices of the unique minimal component of g. Fails with
// InternalInconsistency if the minimal component is not unique or differs
// from the set of vertices reachable from everywhere.
std::vector<std::size_t> unique_minimal_component(const Digraph & g);

ElementSet minimal_component(const SemilatticeDigraph & dg);

bool is_strongly_connected(const Digraph & g);
bool is_strongly_connected(const SemilatticeDigraph & dg);

struct AbsorptionOptions {
    std::size_t max_size = 10;
};

// True iff no proper nonempty subuniverse B has B.A and A.B inside B.
// Enumerates all subsets, so alg.size() is bounded by options.max_size.
bool check_binary_absorption_free(const FiniteAlgebra & alg, const Term & dot, const AbsorptionOptions & options = {});

} // namespace mcsp
