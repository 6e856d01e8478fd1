#include "mcsp/bulatov.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "mcsp/brute_force.hpp"
#include "mcsp/congruence.hpp"
#include "mcsp/error.hpp"
#include "mcsp/identities.hpp"
#include "mcsp/semilattice_digraph.hpp"

namespace mcsp {

namespace {

ElementSet minimal_component(const BinaryTable & dot, const ElementSet & set)
{
    if (set.empty())
        return set;
    const auto vertices = unique_minimal_component(arrow_digraph(dot, set));
    std::vector<Element> out;
    out.reserve(vertices.size());
    for (auto v : vertices)
        out.push_back(set[v]);
    return ElementSet(std::move(out));
}

std::string pair_name(const Instance & inst, std::size_t x, std::size_t y)
{
    return "(" + inst.variables()[x] + "," + inst.variables()[y] + ")";
}

void require_dot_closed(const Instance & inst, const BinaryTable & dot)
{
    for (std::size_t x = 0; x < inst.variable_count(); ++x)
        if (! is_two_semilattice_on(dot, inst.potato(x)))
            fail(ErrorCode::NotTwoSemilattice, "dot is not a 2-semilattice operation on the potato of '" + inst.variables()[x] + "'");
    for (std::size_t x = 0; x < inst.variable_count(); ++x)
        for (std::size_t y = 0; y < inst.variable_count(); ++y)
            if (! is_closed_under(dot, inst.relation(x, y)))
                fail(ErrorCode::NotClosed, "relation " + pair_name(inst, x, y) + " is not closed under dot");
}

void require_standard(const Instance & inst, const char * where)
{
    const auto report = validate_standard(inst);
    if (report.standard())
        return;
    std::string detail;
    for (const auto * check : {&report.diagonal, &report.triangle, &report.subdirect, &report.symmetric})
        if (! check->passed && check->witness) {
            detail = check->witness->description;
            break;
        }
    fail(ErrorCode::PreconditionFailed, std::string(where) + ": instance is not standard: " + detail);
}

void require_nonempty(const Instance & inst, const char * where)
{
    if (inst.is_empty())
        fail(ErrorCode::PreconditionFailed, std::string(where) + ": instance is empty");
}

} // namespace

Instance scc_restrict(const Instance & inst, const BinaryTable & dot)
{
    require_nonempty(inst, "scc_restrict");
    require_dot_closed(inst, dot);
    const std::size_t n = inst.variable_count();
    std::vector<ElementSet> potatoes;
    potatoes.reserve(n);
    for (std::size_t x = 0; x < n; ++x)
        potatoes.push_back(minimal_component(dot, inst.potato(x)));
    std::vector<Relation> relations;
    relations.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            relations.push_back(minimal_component(dot, inst.relation(x, y)));
    return Instance(inst.algebra_ptr(), inst.variables(), std::move(potatoes), std::move(relations));
}

Instance scc_restrict(const Instance & inst, const Term & dot)
{
    return scc_restrict(inst, binary_table(inst.algebra(), dot));
}

Decomposition decompose(const Instance & inst, const FiniteAlgebra & reduct, std::size_t pivot)
{
    const std::size_t n = inst.variable_count();
    if (pivot >= n)
        fail(ErrorCode::VariableOutOfRange, "pivot outside the variable list");
    const auto & pu = inst.potato(pivot);
    if (pu.size() < 2)
        fail(ErrorCode::PreconditionFailed, "decompose needs a pivot whose potato has at least two elements");

    const auto sub = restrict_to_subuniverse(reduct, pu);
    const auto maximal = maximal_congruences(sub.algebra, CongruenceOptions{std::max<std::size_t>(12, pu.size())});
    if (maximal.empty())
        fail(ErrorCode::InternalInconsistency, "potato with two or more elements has no maximal congruence");
    const Partition & alpha = *std::min_element(maximal.begin(), maximal.end());
    const std::size_t k = alpha.block_count();

    Decomposition out;
    out.step.pivot = pivot;
    for (const auto & block : alpha.blocks()) {
        std::vector<Element> ambient;
        for (Element e : block)
            ambient.push_back(sub.to_ambient(e));
        out.step.congruence_blocks.emplace_back(std::move(ambient));
    }
    auto block_of = [&](Element b) { return alpha.block_index(sub.to_local(b)); };

    // pre_images[x][i] = phi_xu^{-1}(block i), or empty if x is not in W.
    std::vector<std::vector<std::vector<Element>>> pre_images(n);
    for (std::size_t x = 0; x < n; ++x) {
        const auto & px = inst.potato(x);
        const auto & r = inst.relation(x, pivot);
        std::vector<std::size_t> image(px.size(), k);
        bool function = true;
        for (auto [a, b] : r) {
            const std::size_t i = px.index_of(a);
            const std::size_t blk = block_of(b);
            if (image[i] != k && image[i] != blk) {
                function = false;
                break;
            }
            image[i] = blk;
        }
        if (! function)
            continue;
        std::vector<bool> hit(k, false);
        for (std::size_t i = 0; i < px.size(); ++i) {
            if (image[i] == k)
                fail(ErrorCode::InternalInconsistency,
                    "relation " + pair_name(inst, x, pivot) + " is not total on the potato of '" + inst.variables()[x] + "'");
            hit[image[i]] = true;
        }
        if (std::find(hit.begin(), hit.end(), false) != hit.end())
            fail(ErrorCode::InternalInconsistency,
                "relation " + pair_name(inst, x, pivot) + " induces a map onto the congruence blocks that is not surjective");
        pre_images[x].assign(k, {});
        for (std::size_t i = 0; i < px.size(); ++i)
            pre_images[x][image[i]].push_back(px[i]);
        out.step.w.push_back(x);
        out.step.block_maps.push_back(std::move(image));
    }
    if (pre_images[pivot].empty())
        fail(ErrorCode::InternalInconsistency, "the pivot does not belong to W; R_uu is not the diagonal");

    for (std::size_t i = 0; i < k; ++i) {
        std::vector<ElementSet> potatoes;
        potatoes.reserve(n);
        for (std::size_t x = 0; x < n; ++x)
            potatoes.push_back(pre_images[x].empty() ? inst.potato(x) : ElementSet(pre_images[x][i]));
        out.blocks.push_back(restrict(inst, potatoes));
    }
    return out;
}

Decomposition decompose(const Instance & inst, const Term & dot, std::size_t pivot)
{
    const auto reduct = dot_reduct(inst.algebra(), dot);
    const BinaryTable table(reduct.size(), reduct.table(0));
    for (std::size_t x = 0; x < inst.variable_count(); ++x)
        if (! is_strongly_connected(arrow_digraph(table, inst.potato(x))))
            fail(ErrorCode::PreconditionFailed, "potato of '" + inst.variables()[x] + "' is not strongly connected");
    for (std::size_t x = 0; x < inst.variable_count(); ++x)
        for (std::size_t y = 0; y < inst.variable_count(); ++y)
            if (! is_strongly_connected(arrow_digraph(table, inst.relation(x, y))))
                fail(ErrorCode::PreconditionFailed, "relation " + pair_name(inst, x, y) + " is not strongly connected");
    return decompose(inst, reduct, pivot);
}

BulatovResult bulatov_solution(const Instance & inst, const Term & dot, const BulatovOptions & options)
{
    require_nonempty(inst, "bulatov_solution");
    const auto reduct = dot_reduct(inst.algebra(), dot);
    const BinaryTable table(reduct.size(), reduct.table(0));
    if (! is_two_semilattice_on(table))
        fail(ErrorCode::NotTwoSemilattice, "dot is not a 2-semilattice operation on the ambient algebra");
    require_standard(inst, "bulatov_solution");

    BulatovResult result;
    Instance current = inst;
    while (true) {
        Instance restricted = scc_restrict(current, table);
        if (! (restricted == current)) {
            if (options.debug_audit)
                require_standard(restricted, "scc restriction");
            current = std::move(restricted);
            result.trace.steps.push_back(ReductionStep{StepKind::SccRestriction, std::nullopt, current});
        }
        if (current.all_singletons())
            break;
        std::size_t pivot = 0;
        while (current.potato(pivot).size() < 2)
            ++pivot;
        auto split = decompose(current, reduct, pivot);
        split.step.chosen_block = 0;
        current = std::move(split.blocks[0]);
        if (options.debug_audit) {
            require_nonempty(current, "decomposition block");
            require_standard(current, "decomposition block");
        }
        result.trace.steps.push_back(ReductionStep{StepKind::Decomposition, std::move(split.step), current});
    }

    result.assignment.reserve(current.variable_count());
    for (const auto & p : current.potatoes())
        result.assignment.push_back(p.front());
    if (! is_solution(inst, result.assignment))
        fail(ErrorCode::InternalInconsistency, "terminal assignment of the reduction is not a solution");
    return result;
}

bool verify_walk_to_bulatov(const Instance & inst, const Term & dot, const Assignment & s, const Assignment & r,
    const WalkOptions & options)
{
    if (! is_solution(inst, s) || ! is_solution(inst, r))
        fail(ErrorCode::PreconditionFailed, "verify_walk_to_bulatov expects two solutions");
    if (s == r)
        return true;
    const auto table = binary_table(inst.algebra(), dot);
    const auto solutions = enumerate_solutions(inst, options.max_solutions);

    std::set<Assignment> seen{s};
    std::deque<Assignment> queue{s};
    Assignment next(s.size());
    while (! queue.empty()) {
        const Assignment from = std::move(queue.front());
        queue.pop_front();
        for (const auto & t : solutions) {
            // from -> from.t is an arc, and every arc out of `from` has this form.
            for (std::size_t x = 0; x < from.size(); ++x)
                next[x] = table(from[x], t[x]);
            if (next == r)
                return true;
            if (seen.insert(next).second)
                queue.push_back(next);
        }
    }
    return false;
}

std::vector<Assignment> solutions_without_walk(const Instance & inst, const Term & dot, const Assignment & r,
    const WalkOptions & options)
{
    if (! is_solution(inst, r))
        fail(ErrorCode::PreconditionFailed, "solutions_without_walk expects a solution");
    const auto table = binary_table(inst.algebra(), dot);
    const auto solutions = enumerate_solutions(inst, options.max_solutions);
    const std::size_t n = inst.variable_count();

    auto arc = [&](const Assignment & from, const Assignment & to) {
        for (std::size_t x = 0; x < n; ++x)
            if (table(from[x], to[x]) != to[x])
                return false;
        return true;
    };
    const auto target = std::find(solutions.begin(), solutions.end(), r);
    std::vector<bool> reaches(solutions.size(), false);
    std::deque<std::size_t> queue;
    const auto start = static_cast<std::size_t>(target - solutions.begin());
    reaches[start] = true;
    queue.push_back(start);
    while (! queue.empty()) {
        const std::size_t to = queue.front();
        queue.pop_front();
        for (std::size_t from = 0; from < solutions.size(); ++from)
            if (! reaches[from] && arc(solutions[from], solutions[to])) {
                reaches[from] = true;
                queue.push_back(from);
            }
    }
    std::vector<Assignment> out;
    for (std::size_t i = 0; i < solutions.size(); ++i)
        if (! reaches[i])
            out.push_back(solutions[i]);
    return out;
}

} // namespace mcsp
