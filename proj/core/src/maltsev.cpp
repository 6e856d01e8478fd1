#include "mcsp/maltsev.hpp"

#include <algorithm>
#include <array>

#include "mcsp/error.hpp"
#include "mcsp/fixtures.hpp"
#include "mcsp/identities.hpp"

namespace mcsp {

std::pair<Term, Term> left_commutativity_sides(const Term & dot)
{
    const Term x = Term::var(0), y = Term::var(1), z = Term::var(2);
    auto mul = [&](const Term & a, const Term & b) {
        const std::array<Term, 2> args{a, b};
        return substitute(dot, args);
    };
    return {mul(x, mul(y, z)), mul(x, mul(z, y))};
}

HypothesisReport hypothesis_check(const FiniteAlgebra & alg, const Term & dot)
{
    HypothesisReport report;
    report.idempotent = is_idempotent(alg);
    const auto t = binary_table(alg, dot);

    const auto theta = theta_witness(alg, dot);
    if (const auto * p = std::get_if<Partition>(&theta)) {
        report.theta_congruence = report.quotient_two_semilattice = report.projection_on_blocks = true;
        report.theta = *p;
    } else {
        const auto & failure = std::get<ThetaFailureReport>(theta);
        report.theta_failure = failure;
        // theta_witness checks in the order (a), (c), (b); re-derive whatever
        // it did not get to.
        if (failure.failure == ThetaFailure::NotProjectionOnBlocks || failure.failure == ThetaFailure::QuotientNotTwoSemilattice) {
            report.theta_congruence = true;
            UnionFind uf(alg.size());
            for (Element a = 0; a < alg.size(); ++a)
                for (Element b = a + 1; b < alg.size(); ++b)
                    if (t(a, b) == a && t(b, a) == b)
                        uf.unite(a, b);
            report.theta = Partition::from_union_find(uf);
            report.projection_on_blocks = failure.failure != ThetaFailure::NotProjectionOnBlocks;
            const auto quotient = quotient_algebra(alg, *report.theta);
            report.quotient_two_semilattice = is_two_semilattice(quotient.algebra, dot);
        }
    }

    const auto [lhs, rhs] = left_commutativity_sides(dot);
    report.left_commutative_counterexample = identity_counterexample(alg, lhs, rhs, 3);
    report.left_commutative = ! report.left_commutative_counterexample.has_value();
    return report;
}

Element QuotientMap::project(std::size_t x, Element a) const
{
    const auto & bl = blocks[x];
    for (std::size_t i = 0; i < bl.size(); ++i)
        if (bl[i].contains(a))
            return static_cast<Element>(offsets[x] + i);
    fail(ErrorCode::ElementOutOfRange, "element " + std::to_string(a) + " is not in the potato of variable #" + std::to_string(x));
}

QuotientInstance build_quotient_instance(const Instance & inst, const Term & dot)
{
    if (inst.is_empty())
        fail(ErrorCode::PreconditionFailed, "build_quotient_instance: instance is empty");
    const std::size_t n = inst.variable_count();
    const auto t = binary_table(inst.algebra(), dot);

    QuotientMap qm;
    std::size_t total = 0;
    for (std::size_t x = 0; x < n; ++x) {
        const auto sub = restrict_to_subuniverse(inst.algebra(), inst.potato(x));
        auto theta = theta_witness(sub.algebra, dot);
        if (const auto * failure = std::get_if<ThetaFailureReport>(&theta))
            fail(ErrorCode::HypothesisRefused, "theta fails on the potato of '" + inst.variables()[x]
                    + "': " + std::string(to_string(failure->failure)) + " (" + failure->detail + ")");
        std::vector<ElementSet> blocks;
        for (const auto & local : std::get<Partition>(theta).blocks()) {
            std::vector<Element> ambient;
            for (Element e : local)
                ambient.push_back(sub.to_ambient(e));
            blocks.emplace_back(std::move(ambient));
        }
        qm.offsets.push_back(total);
        total += blocks.size();
        qm.blocks.push_back(std::move(blocks));
    }

    // part_of[q] is the variable whose potato the quotient element q comes from.
    std::vector<std::size_t> part_of(total);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i < qm.blocks[x].size(); ++i)
            part_of[qm.offsets[x] + i] = x;
    std::vector<Element> table(total * total);
    for (Element p = 0; p < total; ++p)
        for (Element q = 0; q < total; ++q) {
            const std::size_t x = part_of[p], y = part_of[q];
            if (x == y)
                table[p * total + q] = qm.project(x, t(qm.block(x, p).front(), qm.block(x, q).front()));
            else
                table[p * total + q] = x < y ? q : p;
        }
    auto ambient = std::make_shared<const FiniteAlgebra>(total, Signature{{"dot", 2}}, std::vector<std::vector<Element>>{table});

    std::vector<ElementSet> potatoes;
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<Element> elems(qm.blocks[x].size());
        for (std::size_t i = 0; i < elems.size(); ++i)
            elems[i] = static_cast<Element>(qm.offsets[x] + i);
        potatoes.emplace_back(std::move(elems));
    }
    std::vector<Relation> relations;
    relations.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::vector<ElementPair> pairs;
            for (auto [a, b] : inst.relation(x, y))
                pairs.emplace_back(qm.project(x, a), qm.project(y, b));
            relations.emplace_back(std::move(pairs));
        }
    return QuotientInstance{Instance(std::move(ambient), inst.variables(), std::move(potatoes), std::move(relations)), std::move(qm)};
}

bool passes_through(const Assignment & s, const Assignment & phi, const QuotientMap & qm)
{
    if (s.size() != phi.size() || s.size() != qm.blocks.size())
        fail(ErrorCode::SizeMismatch, "passes_through: assignments of different lengths");
    for (std::size_t x = 0; x < s.size(); ++x) {
        if (phi[x] < qm.offsets[x] || phi[x] >= qm.offsets[x] + qm.blocks[x].size())
            return false;
        if (! qm.block(x, phi[x]).contains(s[x]))
            return false;
    }
    return true;
}

Assignment transfer_solution(const Assignment & s, const Assignment & phi, const Assignment & psi, const Instance & inst,
    const QuotientMap & qm, const Term & dot, const TransferOptions & options)
{
    const std::size_t n = inst.variable_count();
    if (psi.size() != n)
        fail(ErrorCode::SizeMismatch, "transfer_solution: psi has the wrong length");
    if (! is_solution(inst, s))
        fail(ErrorCode::PreconditionFailed, "transfer_solution: s is not a solution");
    if (! passes_through(s, phi, qm))
        fail(ErrorCode::PreconditionFailed, "transfer_solution: s does not pass through phi");
    const auto [lhs, rhs] = left_commutativity_sides(dot);
    if (const auto bad = identity_counterexample(inst.algebra(), lhs, rhs, 3))
        fail(ErrorCode::HypothesisRefused, "transfer_solution: x.(y.z) = x.(z.y) fails at (" + std::to_string((*bad)[0]) + ","
                + std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")");

    const auto t = binary_table(inst.algebra(), dot);
    Assignment out(n);
    for (std::size_t x = 0; x < n; ++x) {
        if (psi[x] < qm.offsets[x] || psi[x] >= qm.offsets[x] + qm.blocks[x].size())
            fail(ErrorCode::PreconditionFailed, "transfer_solution: psi(" + inst.variables()[x] + ") is not a block of P_x");
        const auto & target = qm.block(x, psi[x]);
        // phi(x) -> psi(x) in the quotient.
        if (qm.project(x, t(qm.block(x, phi[x]).front(), target.front())) != psi[x])
            fail(ErrorCode::PreconditionFailed, "transfer_solution: no arrow from phi(" + inst.variables()[x] + ") to psi");
        out[x] = t(s[x], target.front());
        if (options.debug_audit)
            for (Element b : target)
                if (t(s[x], b) != out[x])
                    fail(ErrorCode::InternalInconsistency, "transfer function depends on the choice inside the target block");
    }
    return out;
}

std::unique_ptr<BlockSolver> default_block_solver()
{
    return std::make_unique<BruteForceBlockSolver>();
}

SolveResult main_solve(const Instance & inst, const Term & dot, const BlockSolver & blocks, const SolveOptions & options)
{
    SolveResult result;
    result.hypotheses = hypothesis_check(inst.algebra(), dot);
    if (! result.hypotheses.runnable()) {
        std::string why = result.hypotheses.theta_failure ? std::string(to_string(result.hypotheses.theta_failure->failure)) : "";
        fail(ErrorCode::HypothesisRefused, "hypotheses (a)-(c) do not hold for this dot term: " + why);
    }
    result.unsound_no_possible = ! result.hypotheses.left_commutative;

    if (inst.is_empty()) {
        result.empty_input = true;
        return result;
    }
    const auto report = validate_standard(inst);
    if (! report.standard())
        fail(ErrorCode::PreconditionFailed, "main_solve expects a standard (2,3)-instance");
    if (options.debug_audit)
        if (auto bad = closure_violation(inst))
            fail(ErrorCode::NotClosed, *bad);

    const auto quotient = build_quotient_instance(inst, dot);
    auto phi = bulatov_solution(quotient.instance, reduct_dot_term(), BulatovOptions{options.debug_audit});
    result.quotient_solution = phi.assignment;
    if (options.keep_trace)
        result.trace = std::move(phi.trace);

    std::vector<ElementSet> potatoes;
    potatoes.reserve(inst.variable_count());
    for (std::size_t x = 0; x < inst.variable_count(); ++x)
        potatoes.push_back(quotient.map.block(x, phi.assignment[x]));
    const Instance restricted = restrict(inst, potatoes);

    auto witness = blocks.solve(restricted);
    if (witness) {
        if (! is_solution(restricted, *witness) || ! is_solution(inst, *witness))
            fail(ErrorCode::InternalInconsistency, "block solver '" + blocks.name() + "' returned a non-solution");
        result.solvable = true;
        result.witness = std::move(witness);
    }
    return result;
}

Counterexample build_counterexample()
{
    auto algebra = std::make_shared<const FiniteAlgebra>(fixtures::counterexample_algebra());
    const Term dot = fixtures::counterexample_dot();

    // Elements 1..4 are (0,0), (0,1), (1,0), (1,1); element 0 is top. The six
    // pairs of {w,x,y,z} are coloured by three linear forms on Z2xZ2 so that
    // the two forms meeting at a vertex are independent (a proper edge
    // colouring of K4). R_uv = {(a,b) : L(a) + L(b) = c_uv} plus (top,top).
    // Every vertex sees all three forms, which sum to zero, so summing all
    // six equations gives 0 = sum c_uv = 1: no solution avoids top.
    auto coord = [](Element a, int i) { return i == 0 ? ((a - 1) >> 1) & 1 : (a - 1) & 1; };
    auto form = [&](int which, Element a) -> Element {
        if (which == 2)
            return coord(a, 0) ^ coord(a, 1);
        return coord(a, which);
    };
    struct Edge {
        std::size_t u, v;
        int form;
        Element constant;
    };
    // w=0, x=1, y=2, z=3
    const std::array<Edge, 6> edges{{{0, 1, 0, 1}, {2, 3, 0, 0}, {0, 2, 1, 0}, {1, 3, 1, 0}, {0, 3, 2, 0}, {1, 2, 2, 0}}};

    const std::size_t n = 4;
    const ElementSet all = ElementSet::full(algebra->size());
    std::vector<Relation> relations(n * n);
    for (std::size_t x = 0; x < n; ++x)
        relations[x * n + x] = Relation::diagonal(all);
    for (const auto & e : edges) {
        std::vector<ElementPair> pairs{{0, 0}};
        for (Element a = 1; a <= 4; ++a)
            for (Element b = 1; b <= 4; ++b)
                if ((form(e.form, a) ^ form(e.form, b)) == e.constant)
                    pairs.emplace_back(a, b);
        Relation r(std::move(pairs));
        relations[e.v * n + e.u] = r.inverse();
        relations[e.u * n + e.v] = std::move(r);
    }
    Instance instance(algebra, {"w", "x", "y", "z"}, std::vector<ElementSet>(n, all), std::move(relations));
    if (! validate_standard(instance).standard() || closure_violation(instance))
        fail(ErrorCode::InternalInconsistency, "counterexample instance failed validation");
    return Counterexample{std::move(algebra), dot, std::move(instance)};
}

} // namespace mcsp
