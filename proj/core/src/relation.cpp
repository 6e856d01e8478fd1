#include "mcsp/relation.hpp"

#include <algorithm>

#include "closure.hpp"
#include "mcsp/error.hpp"
#include "mcsp/semilattice_digraph.hpp"

namespace mcsp {

Relation::Relation(std::initializer_list<ElementPair> pairs) :
    Relation(std::vector<ElementPair>(pairs))
{
}

Relation::Relation(std::vector<ElementPair> pairs) :
    pairs_(std::move(pairs))
{
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Relation Relation::product(const ElementSet & left, const ElementSet & right)
{
    Relation r;
    r.pairs_.reserve(left.size() * right.size());
    for (Element a : left)
        for (Element b : right)
            r.pairs_.emplace_back(a, b);
    return r;
}

Relation Relation::diagonal(const ElementSet & elements)
{
    Relation r;
    for (Element a : elements)
        r.pairs_.emplace_back(a, a);
    return r;
}

bool Relation::contains(Element a, Element b) const
{
    return std::binary_search(pairs_.begin(), pairs_.end(), ElementPair{a, b});
}

std::size_t Relation::index_of(const ElementPair & p) const
{
    return static_cast<std::size_t>(std::lower_bound(pairs_.begin(), pairs_.end(), p) - pairs_.begin());
}

Relation Relation::inverse() const
{
    std::vector<ElementPair> swapped;
    swapped.reserve(pairs_.size());
    for (auto [a, b] : pairs_)
        swapped.emplace_back(b, a);
    return Relation(std::move(swapped));
}

ElementSet Relation::first_projection() const
{
    std::vector<Element> out;
    for (auto [a, b] : pairs_)
        out.push_back(a);
    return ElementSet(std::move(out));
}

ElementSet Relation::second_projection() const
{
    std::vector<Element> out;
    for (auto [a, b] : pairs_)
        out.push_back(b);
    return ElementSet(std::move(out));
}

Relation Relation::intersect(const Relation & other) const
{
    Relation r;
    std::set_intersection(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end(), std::back_inserter(r.pairs_));
    return r;
}

Relation Relation::restrict(const ElementSet & left, const ElementSet & right) const
{
    Relation r;
    for (auto p : pairs_)
        if (left.contains(p.first) && right.contains(p.second))
            r.pairs_.push_back(p);
    return r;
}

bool Relation::is_subset_of(const Relation & other) const
{
    return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end());
}

bool Relation::is_subset_of_product(const ElementSet & left, const ElementSet & right) const
{
    return std::all_of(pairs_.begin(), pairs_.end(), [&](const ElementPair & p) {
        return left.contains(p.first) && right.contains(p.second);
    });
}

Relation relation_closure(const FiniteAlgebra & alg, const Relation & seed)
{
    const std::size_t n = alg.size();
    std::vector<std::size_t> codes;
    for (auto [a, b] : seed) {
        if (a >= n || b >= n)
            fail(ErrorCode::ElementOutOfRange, "relation pair outside universe");
        codes.push_back(a * n + b);
    }
    std::vector<std::size_t> arities;
    for (const auto & s : alg.signature())
        arities.push_back(s.arity);
    std::vector<Element> left, right;
    const auto closed = detail::semi_naive_closure(n * n, codes, arities,
        [&](std::size_t s, std::span<const std::size_t> args) -> std::size_t {
            left.clear();
            right.clear();
            for (std::size_t c : args) {
                left.push_back(static_cast<Element>(c / n));
                right.push_back(static_cast<Element>(c % n));
            }
            return alg.apply(s, left) * n + alg.apply(s, right);
        });
    std::vector<ElementPair> pairs;
    for (std::size_t c : closed)
        pairs.emplace_back(static_cast<Element>(c / n), static_cast<Element>(c % n));
    return Relation(std::move(pairs));
}

bool is_closed_relation(const FiniteAlgebra & alg, const Relation & r)
{
    return relation_closure(alg, r).size() == r.size();
}

Digraph arrow_digraph(const BinaryTable & dot, const Relation & r)
{
    Digraph g(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j)
            if (dot(r[i].first, r[j].first) == r[j].first && dot(r[i].second, r[j].second) == r[j].second)
                g.add_edge(i, j);
    return g;
}

Relation minimal_component(const BinaryTable & dot, const Relation & r)
{
    if (r.empty())
        return r;
    std::vector<ElementPair> kept;
    for (std::size_t i : unique_minimal_component(arrow_digraph(dot, r)))
        kept.push_back(r[i]);
    return Relation(std::move(kept));
}

bool is_closed_under(const BinaryTable & dot, const Relation & r)
{
    for (auto [a, b] : r)
        for (auto [c, d] : r)
            if (! r.contains(dot(a, c), dot(b, d)))
                return false;
    return true;
}

} // namespace mcsp
