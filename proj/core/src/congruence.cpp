#include "mcsp/congruence.hpp"

#include <algorithm>
#include <set>

#include "mcsp/error.hpp"
#include "mcsp/identities.hpp"

namespace mcsp {

bool is_congruence(const FiniteAlgebra & alg, const Partition & part)
{
    if (part.universe_size() != alg.size())
        fail(ErrorCode::SizeMismatch, "partition universe does not match algebra");
    std::vector<Element> varied;
    for (std::size_t s = 0; s < alg.signature().size(); ++s) {
        const auto arity = alg.signature()[s].arity;
        bool ok = true;
        for_each_tuple(alg.size(), arity, [&](std::span<const Element> args) {
            if (! ok)
                return;
            const Element base = alg.apply(s, args);
            varied.assign(args.begin(), args.end());
            for (std::size_t p = 0; p < arity && ok; ++p) {
                // compare against block-mates larger than args[p]; the
                // symmetric case is visited from the other tuple
                for (Element other : part.block(part.block_index(args[p]))) {
                    if (other <= args[p])
                        continue;
                    varied[p] = other;
                    if (! part.same_block(base, alg.apply(s, varied))) {
                        ok = false;
                        break;
                    }
                }
                varied[p] = args[p];
            }
        });
        if (! ok)
            return false;
    }
    return true;
}

Partition generated_congruence(const FiniteAlgebra & alg, const std::vector<std::pair<Element, Element>> & pairs)
{
    const std::size_t n = alg.size();
    UnionFind uf(n);
    std::vector<std::pair<Element, Element>> pending;
    for (auto [a, b] : pairs) {
        if (a >= n || b >= n)
            fail(ErrorCode::ElementOutOfRange, "generator pair outside universe");
        if (uf.unite(a, b))
            pending.emplace_back(a, b);
    }

    // Every pair that caused a merge is pushed through all basic translations
    // f(c_1, .., _, .., c_k); the closure of those pairs generates the
    // congruence.
    std::vector<Element> left, right;
    while (! pending.empty()) {
        auto [u, v] = pending.back();
        pending.pop_back();
        for (std::size_t s = 0; s < alg.signature().size(); ++s) {
            const auto arity = alg.signature()[s].arity;
            if (arity == 0)
                continue;
            for (std::size_t p = 0; p < arity; ++p) {
                for_each_tuple(n, arity - 1, [&](std::span<const Element> context) {
                    left.clear();
                    right.clear();
                    for (std::size_t i = 0, c = 0; i < arity; ++i) {
                        if (i == p) {
                            left.push_back(u);
                            right.push_back(v);
                        }
                        else {
                            left.push_back(context[c]);
                            right.push_back(context[c]);
                            ++c;
                        }
                    }
                    const Element fu = alg.apply(s, left);
                    const Element fv = alg.apply(s, right);
                    if (uf.unite(fu, fv))
                        pending.emplace_back(fu, fv);
                });
            }
        }
    }
    return Partition::from_union_find(uf);
}

Partition principal_congruence(const FiniteAlgebra & alg, Element a, Element b)
{
    return generated_congruence(alg, {{a, b}});
}

std::vector<Partition> all_congruences(const FiniteAlgebra & alg, const CongruenceOptions & options)
{
    if (alg.size() > options.max_size)
        fail(ErrorCode::BoundExceeded, "all_congruences: algebra of size " + std::to_string(alg.size())
                + " exceeds the configured bound " + std::to_string(options.max_size));

    std::set<Partition> principal;
    for (Element a = 0; a < alg.size(); ++a)
        for (Element b = a + 1; b < alg.size(); ++b)
            principal.insert(principal_congruence(alg, a, b));

    // Every congruence is a join of principal ones; close under joining with
    // a principal congruence.
    std::set<Partition> found{Partition::discrete(alg.size())};
    std::vector<Partition> frontier{Partition::discrete(alg.size())};
    while (! frontier.empty()) {
        std::vector<Partition> next;
        for (const auto & c : frontier)
            for (const auto & p : principal) {
                auto j = join(c, p);
                if (found.insert(j).second)
                    next.push_back(std::move(j));
            }
        frontier = std::move(next);
    }
    return {found.begin(), found.end()};
}

std::vector<Partition> maximal_congruences(const FiniteAlgebra & alg, const CongruenceOptions & options)
{
    const auto all = all_congruences(alg, options);
    std::vector<Partition> proper;
    for (const auto & c : all)
        if (! c.is_indiscrete())
            proper.push_back(c);
    std::vector<Partition> result;
    for (const auto & c : proper) {
        bool maximal = std::none_of(proper.begin(), proper.end(), [&](const Partition & d) {
            return ! (d == c) && c.refines(d);
        });
        if (maximal)
            result.push_back(c);
    }
    return result;
}

std::string_view to_string(ThetaFailure failure)
{
    switch (failure) {
    case ThetaFailure::NotReflexive: return "not_reflexive";
    case ThetaFailure::NotTransitive: return "not_transitive";
    case ThetaFailure::NotCongruence: return "not_congruence";
    case ThetaFailure::NotProjectionOnBlocks: return "not_projection_on_blocks";
    case ThetaFailure::QuotientNotTwoSemilattice: return "quotient_not_two_semilattice";
    }
    return "unknown";
}

std::variant<Partition, ThetaFailureReport> theta_witness(const FiniteAlgebra & alg, const Term & dot)
{
    const auto t = binary_table(alg, dot);
    const std::size_t n = alg.size();
    auto related = [&](Element a, Element b) { return t(a, b) == a && t(b, a) == b; };

    for (Element a = 0; a < n; ++a)
        if (! related(a, a))
            return ThetaFailureReport{ThetaFailure::NotReflexive, "a.a != a for a=" + std::to_string(a)};

    // Symmetric by definition; check transitivity via union-find closure.
    UnionFind uf(n);
    for (Element a = 0; a < n; ++a)
        for (Element b = a + 1; b < n; ++b)
            if (related(a, b))
                uf.unite(a, b);
    auto theta = Partition::from_union_find(uf);
    for (const auto & block : theta.blocks())
        for (Element a : block)
            for (Element b : block)
                if (! related(a, b))
                    return ThetaFailureReport{ThetaFailure::NotTransitive,
                        "pair (" + std::to_string(a) + "," + std::to_string(b) + ") lies in the transitive closure only"};

    if (! is_congruence(alg, theta))
        return ThetaFailureReport{ThetaFailure::NotCongruence, "theta is not compatible with the basic operations"};

    for (const auto & block : theta.blocks())
        for (Element a : block)
            for (Element b : block)
                if (t(a, b) != a)
                    return ThetaFailureReport{ThetaFailure::NotProjectionOnBlocks,
                        "a.b != a for a=" + std::to_string(a) + ", b=" + std::to_string(b)};

    const auto quotient = quotient_algebra(alg, theta);
    if (! is_two_semilattice(quotient.algebra, dot))
        return ThetaFailureReport{ThetaFailure::QuotientNotTwoSemilattice, "dot is not a 2-semilattice operation on A/theta"};
    return theta;
}

} // namespace mcsp
