#pragma once

// Independent oracles shared by the unit and acceptance tests. None of them
// call into the solver code they are used to check.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "mcsp/algebra.hpp"
#include "mcsp/instance.hpp"
#include "mcsp/partition.hpp"

namespace mcsp::testing {

// Every partition of {0..n-1}, as label vectors (restricted growth strings).
inline std::vector<std::vector<std::size_t>> all_partition_labels(std::size_t n)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> labels(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
        if (i == n) {
            out.push_back(labels);
            return;
        }
        for (std::size_t l = 0; l <= used && l < n; ++l) {
            labels[i] = l;
            rec(i + 1, std::max(used, l + 1));
        }
    };
    if (n == 0)
        out.push_back({});
    else
        rec(0, 0);
    return out;
}

// Congruence test straight from the definition: every operation applied to
// two argument tuples that are related coordinatewise gives related values.
inline bool congruence_by_definition(const FiniteAlgebra & alg, const std::vector<std::size_t> & label)
{
    const std::size_t n = alg.size();
    for (std::size_t s = 0; s < alg.signature().size(); ++s) {
        const std::size_t k = alg.signature()[s].arity;
        std::size_t total = 1;
        for (std::size_t i = 0; i < k; ++i)
            total *= n;
        std::vector<Element> a(k), b(k);
        for (std::size_t ia = 0; ia < total; ++ia)
            for (std::size_t ib = 0; ib < total; ++ib) {
                bool related = true;
                for (std::size_t i = 0, ra = ia, rb = ib; i < k; ++i, ra /= n, rb /= n) {
                    a[k - 1 - i] = static_cast<Element>(ra % n);
                    b[k - 1 - i] = static_cast<Element>(rb % n);
                }
                for (std::size_t i = 0; i < k && related; ++i)
                    related = label[a[i]] == label[b[i]];
                if (related && label[alg.apply(s, a)] != label[alg.apply(s, b)])
                    return false;
            }
    }
    return true;
}

// Canonical block lists of all congruences, by exhaustive search.
inline std::set<std::vector<std::vector<Element>>> congruences_by_enumeration(const FiniteAlgebra & alg)
{
    std::set<std::vector<std::vector<Element>>> out;
    for (const auto & label : all_partition_labels(alg.size())) {
        if (! congruence_by_definition(alg, label))
            continue;
        std::vector<std::vector<Element>> blocks;
        for (std::size_t l = 0;; ++l) {
            std::vector<Element> block;
            for (Element e = 0; e < alg.size(); ++e)
                if (label[e] == l)
                    block.push_back(e);
            if (block.empty())
                break;
            blocks.push_back(block);
        }
        out.insert(blocks);
    }
    return out;
}

inline std::vector<std::vector<Element>> block_lists(const Partition & p)
{
    std::vector<std::vector<Element>> out;
    for (const auto & b : p.blocks())
        out.emplace_back(b.begin(), b.end());
    return out;
}

// All assignments D^X satisfying every raw constraint, by plain enumeration.
inline std::vector<Assignment> raw_solutions(const RawInstance & raw, std::size_t cap = 200'000)
{
    const std::size_t n = raw.variables.size();
    const std::size_t d = raw.algebra->size();
    std::vector<Assignment> out;
    Assignment a(n, 0);
    std::size_t visited = 0;
    while (true) {
        if (++visited > cap)
            throw std::runtime_error("raw_solutions: search space too large");
        bool ok = true;
        for (const auto & c : raw.binary)
            if (! c.relation.contains(a[c.first], a[c.second])) {
                ok = false;
                break;
            }
        for (const auto & c : raw.unary)
            if (ok && ! c.allowed.contains(a[c.variable]))
                ok = false;
        if (ok)
            out.push_back(a);
        std::size_t i = n;
        while (i > 0 && a[i - 1] + 1 == d)
            a[--i] = 0;
        if (i == 0)
            break;
        ++a[i - 1];
    }
    return out;
}

// All assignments of an instance by plain enumeration of the potato product.
inline std::vector<Assignment> instance_solutions(const Instance & inst)
{
    const std::size_t n = inst.variable_count();
    std::vector<Assignment> out;
    if (inst.is_empty())
        return out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        Assignment a(n);
        for (std::size_t x = 0; x < n; ++x)
            a[x] = inst.potato(x)[idx[x]];
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            for (std::size_t y = 0; y < n && ok; ++y)
                ok = inst.relation(x, y).contains(a[x], a[y]);
        if (ok)
            out.push_back(a);
        std::size_t i = n;
        while (i > 0 && idx[i - 1] + 1 == inst.potato(i - 1).size())
            idx[--i] = 0;
        if (i == 0)
            break;
        ++idx[i - 1];
    }
    return out;
}

// Solvability of a linear system over GF(2). Each row is a bitmask of
// coefficients plus a right-hand side bit.
struct Gf2Row {
    std::uint64_t coefficients = 0;
    bool rhs = false;
};

inline bool gf2_solvable(std::vector<Gf2Row> rows, std::size_t unknowns)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && ! ((rows[pivot].coefficients >> col) & 1U))
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && ((rows[r].coefficients >> col) & 1U)) {
                rows[r].coefficients ^= rows[rank].coefficients;
                rows[r].rhs ^= rows[rank].rhs;
            }
        ++rank;
    }
    for (const auto & r : rows)
        if (r.coefficients == 0 && r.rhs)
            return false;
    return true;
}

} // namespace mcsp::testing
