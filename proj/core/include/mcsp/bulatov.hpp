#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mcsp/instance.hpp"
#include "mcsp/partition.hpp"
#include "mcsp/term.hpp"

namespace mcsp {

struct BulatovOptions {
    // Re-validate every intermediate instance (P1-P4) and the closure of the
    // potatoes and relations under dot. Cubic in |X|*|D|; off by default.
    bool debug_audit = false;
};

// Every potato and relation replaced by the minimal strongly connected
// component of its arrow digraph.
Instance scc_restrict(const Instance & inst, const Term & dot);
Instance scc_restrict(const Instance & inst, const BinaryTable & dot);

struct DecompositionStep {
    std::size_t pivot = 0;
    // Blocks of the chosen maximal congruence of P_pivot, as ambient elements,
    // in the order of their least element.
    std::vector<ElementSet> congruence_blocks;
    // Variables whose relation to the pivot induces a map into the blocks.
    std::vector<std::size_t> w;
    // For each member of w (same order): block index of every element of P_x,
    // listed in the order of P_x.
    std::vector<std::vector<std::size_t>> block_maps;
    std::size_t chosen_block = 0;
};

struct Decomposition {
    DecompositionStep step;
    std::vector<Instance> blocks; // one per congruence block
};

// Chooses the lexicographically least maximal congruence of the potato
// P_pivot under dot and splits the instance along it. The pivot must have a
// potato of size at least 2 and every potato and relation must be strongly
// connected.
Decomposition decompose(const Instance & inst, const Term & dot, std::size_t pivot);
Decomposition decompose(const Instance & inst, const FiniteAlgebra & reduct, std::size_t pivot);

enum class StepKind { SccRestriction, Decomposition };

struct ReductionStep {
    StepKind kind = StepKind::SccRestriction;
    std::optional<DecompositionStep> decomposition; // set for Decomposition steps
    Instance result;
};

// SCC restrictions that change nothing are not recorded.
struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

struct BulatovResult {
    Assignment assignment;
    ReductionTrace trace;
};

// Alternates scc_restrict and decompose (pivot: first variable with a
// non-singleton potato; always the block of the least element) until every
// potato is a singleton. Requires a standard nonempty instance and a dot
// that is a 2-semilattice operation on the ambient algebra.
BulatovResult bulatov_solution(const Instance & inst, const Term & dot, const BulatovOptions & options = {});

struct WalkOptions {
    std::size_t max_solutions = 10'000;
};

// BFS in the digraph on solutions with s1 -> s2 iff s1.s2 = s2 pointwise.
bool verify_walk_to_bulatov(const Instance & inst, const Term & dot, const Assignment & s, const Assignment & r,
    const WalkOptions & options = {});

// Same question for every solution at once: one reverse BFS from r over the
// solution digraph. Returns the solutions with no walk to r (empty means
// every solution reaches r).
std::vector<Assignment> solutions_without_walk(const Instance & inst, const Term & dot, const Assignment & r,
    const WalkOptions & options = {});

} // namespace mcsp
