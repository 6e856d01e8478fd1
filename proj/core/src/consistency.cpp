#include "mcsp/consistency.hpp"

#include <bit>
#include <cstdint>

namespace mcsp {

namespace {

// n*n relation matrices over D, each row a bitmask over D.
class BitRelations {
public:
    BitRelations(std::size_t vars, std::size_t d) :
        vars_(vars), d_(d), words_((d + 63) / 64), bits_(vars * vars * d * words_, 0)
    {
    }

    std::uint64_t * row(std::size_t x, std::size_t y, Element a) { return &bits_[((x * vars_ + y) * d_ + a) * words_]; }
    const std::uint64_t * row(std::size_t x, std::size_t y, Element a) const
    {
        return &bits_[((x * vars_ + y) * d_ + a) * words_];
    }

    bool test(std::size_t x, std::size_t y, Element a, Element b) const { return (row(x, y, a)[b / 64] >> (b % 64)) & 1U; }
    void set(std::size_t x, std::size_t y, Element a, Element b) { row(x, y, a)[b / 64] |= std::uint64_t{1} << (b % 64); }
    void reset(std::size_t x, std::size_t y, Element a, Element b) { row(x, y, a)[b / 64] &= ~(std::uint64_t{1} << (b % 64)); }

    bool rows_meet(std::size_t x, std::size_t z, Element a, std::size_t y, Element b) const
    {
        const auto * p = row(x, z, a);
        const auto * q = row(y, z, b);
        for (std::size_t w = 0; w < words_; ++w)
            if (p[w] & q[w])
                return true;
        return false;
    }

    // Keeps only the pairs of (x,y) that r (read as a set of pairs) contains.
    void intersect(std::size_t x, std::size_t y, const Relation & r)
    {
        std::vector<std::uint64_t> mask(d_ * words_, 0);
        for (auto [a, b] : r)
            mask[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
        for (Element a = 0; a < d_; ++a) {
            auto * p = row(x, y, a);
            for (std::size_t w = 0; w < words_; ++w)
                p[w] &= mask[a * words_ + w];
        }
    }

    Relation to_relation(std::size_t x, std::size_t y) const
    {
        std::vector<ElementPair> pairs;
        for (Element a = 0; a < d_; ++a) {
            const auto * p = row(x, y, a);
            for (std::size_t w = 0; w < words_; ++w)
                for (std::uint64_t bits = p[w]; bits != 0; bits &= bits - 1)
                    pairs.emplace_back(a, static_cast<Element>(w * 64 + std::countr_zero(bits)));
        }
        return Relation(std::move(pairs));
    }

private:
    std::size_t vars_;
    std::size_t d_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

BitRelations initial_relations(const RawInstance & raw)
{
    const std::size_t n = raw.variables.size();
    const std::size_t d = raw.algebra->size();
    BitRelations rel(n, d);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (Element a = 0; a < d; ++a)
                for (Element b = 0; b < d; ++b)
                    if (x != y || a == b)
                        rel.set(x, y, a, b);
    for (const auto & c : raw.binary) {
        rel.intersect(c.first, c.second, c.relation);
        rel.intersect(c.second, c.first, c.relation.inverse());
    }
    for (const auto & c : raw.unary)
        rel.intersect(c.variable, c.variable, Relation::diagonal(c.allowed));
    return rel;
}

Instance to_instance(const RawInstance & raw, const BitRelations & rel, bool prune_to_potatoes)
{
    const std::size_t n = raw.variables.size();
    std::vector<ElementSet> potatoes;
    potatoes.reserve(n);
    for (std::size_t x = 0; x < n; ++x)
        potatoes.push_back(rel.to_relation(x, x).first_projection());

    bool empty = false;
    for (const auto & p : potatoes)
        empty = empty || p.empty();
    if (empty && prune_to_potatoes) {
        // One empty potato empties everything.
        std::vector<ElementSet> none(n);
        return Instance(raw.algebra, raw.variables, none, std::vector<Relation>(n * n));
    }

    std::vector<Relation> relations;
    relations.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto r = rel.to_relation(x, y);
            relations.push_back(prune_to_potatoes ? std::move(r) : r.restrict(potatoes[x], potatoes[y]));
        }
    return Instance(raw.algebra, raw.variables, std::move(potatoes), std::move(relations));
}

} // namespace

Instance two_three_consistency(const RawInstance & raw, ConsistencyStats * stats)
{
    raw.validate();
    const std::size_t n = raw.variables.size();
    const std::size_t d = raw.algebra->size();
    BitRelations rel = initial_relations(raw);

    ConsistencyStats local;
    bool changed = true;
    while (changed) {
        changed = false;
        ++local.sweeps;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    for (Element a = 0; a < d; ++a)
                        for (Element b = 0; b < d; ++b) {
                            if (! rel.test(x, y, a, b) || rel.rows_meet(x, z, a, y, b))
                                continue;
                            rel.reset(x, y, a, b);
                            ++local.deletions;
                            if (x != y || a != b) {
                                rel.reset(y, x, b, a);
                                ++local.deletions;
                            }
                            changed = true;
                        }
    }
    if (stats)
        *stats = local;
    // After the fixpoint R_xy already lies in P_x x P_y (take z = x and z = y).
    return to_instance(raw, rel, true);
}

Instance interpret_raw(const RawInstance & raw)
{
    raw.validate();
    return to_instance(raw, initial_relations(raw), false);
}

} // namespace mcsp
