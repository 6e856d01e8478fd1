#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mcsp/brute_force.hpp"
#include "mcsp/bulatov.hpp"
#include "mcsp/congruence.hpp"
#include "mcsp/instance.hpp"
#include "mcsp/partition.hpp"
#include "mcsp/term.hpp"

namespace mcsp {

// Verdicts on the hypotheses of the main algorithm for a given dot term:
//   (a) theta = {(a,b) : a.b = a, b.a = b} is a congruence,
//   (b) dot is a 2-semilattice operation on the quotient by theta,
//   (c) dot is the first projection inside every theta-block,
//   (d) x.(y.z) = x.(z.y) holds everywhere.
// Whether the blocks lie in a tractable variety cannot be read off the tables;
// that part is the block solver's business.
struct HypothesisReport {
    bool idempotent = false;
    bool theta_congruence = false;    // (a)
    bool quotient_two_semilattice = false; // (b)
    bool projection_on_blocks = false; // (c)
    bool left_commutative = false;     // (d)
    std::optional<Partition> theta;
    std::optional<ThetaFailureReport> theta_failure;
    std::optional<std::vector<Element>> left_commutative_counterexample; // x, y, z

    // (a)-(c): without these the algorithm refuses to run.
    bool runnable() const { return theta_congruence && quotient_two_semilattice && projection_on_blocks; }
    bool all_pass() const { return runnable() && left_commutative; }
};

HypothesisReport hypothesis_check(const FiniteAlgebra & alg, const Term & dot);

// x0.(x1.x2) and x0.(x2.x1) for the given dot term.
std::pair<Term, Term> left_commutativity_sides(const Term & dot);

// Quotient element offsets[x] + i stands for blocks[x][i], the i-th
// theta-block of P_x (blocks ordered by least element).
struct QuotientMap {
    std::vector<std::vector<ElementSet>> blocks;
    std::vector<std::size_t> offsets;

    Element project(std::size_t x, Element a) const;
    const ElementSet & block(std::size_t x, Element q) const { return blocks[x][q - offsets[x]]; }
};

struct QuotientInstance {
    Instance instance; // over the reduct {dot}; solve it with reduct_dot_term()
    QuotientMap map;
};

// The ambient of the quotient instance is the disjoint union of the algebras
// P_x/theta, stacked so that across different parts the product is the
// element of the later part. That keeps it a 2-semilattice in which every
// P_x/theta is a subalgebra.
QuotientInstance build_quotient_instance(const Instance & inst, const Term & dot);

// Each s(x) lies in the block phi(x).
bool passes_through(const Assignment & s, const Assignment & phi, const QuotientMap & qm);

struct TransferOptions {
    bool debug_audit = false; // check that s(x).b does not depend on the choice of b in psi(x)
};

// t(x) = s(x).b_x with b_x the least element of the block psi(x). Refuses
// (HypothesisRefused) when x.(y.z) = x.(z.y) fails on the ambient algebra.
Assignment transfer_solution(const Assignment & s, const Assignment & phi, const Assignment & psi, const Instance & inst,
    const QuotientMap & qm, const Term & dot, const TransferOptions & options = {});

// Exact decision procedure for the restricted instance. A YES answer must
// come with a witness.
class BlockSolver {
public:
    virtual ~BlockSolver() = default;
    virtual std::string name() const = 0;
    virtual std::optional<Assignment> solve(const Instance & inst) const = 0;
};

class BruteForceBlockSolver : public BlockSolver {
public:
    explicit BruteForceBlockSolver(BruteForceOptions options = {}) : options_(options) {}
    std::string name() const override { return "brute"; }
    std::optional<Assignment> solve(const Instance & inst) const override { return brute_force_solve(inst, options_); }

private:
    BruteForceOptions options_;
};

std::unique_ptr<BlockSolver> default_block_solver();

struct SolveOptions {
    bool debug_audit = false;
    bool keep_trace = false;
};

struct SolveResult {
    bool solvable = false;
    std::optional<Assignment> witness;
    HypothesisReport hypotheses;
    // Set when (d) fails: a NO may then be wrong.
    bool unsound_no_possible = false;
    bool empty_input = false;
    std::optional<Assignment> quotient_solution; // over the quotient ambient
    std::optional<ReductionTrace> trace;
};

// Refuses (HypothesisRefused) if (a)-(c) fail, and fails with
// PreconditionFailed on a non-standard instance. An empty instance is NO.
SolveResult main_solve(const Instance & inst, const Term & dot, const BlockSolver & blocks, const SolveOptions & options = {});

struct Counterexample {
    std::shared_ptr<const FiniteAlgebra> algebra;
    Term dot;
    Instance instance;
};

// Five-element algebra (top plus Z2xZ2) with dot = q(x,y,y), and a standard
// instance on w,x,y,z whose only solution is all-top: off the top element the
// relations encode an inconsistent linear system over Z2.
Counterexample build_counterexample();

} // namespace mcsp
