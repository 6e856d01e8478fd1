#include "mcsp/partition.hpp"

#include <map>

#include "mcsp/error.hpp"

namespace mcsp {

UnionFind::UnionFind(std::size_t n) :
    parent_(n)
{
    for (std::size_t i = 0; i < n; ++i)
        parent_[i] = static_cast<Element>(i);
}

Element UnionFind::find(Element e)
{
    while (parent_[e] != e) {
        parent_[e] = parent_[parent_[e]];
        e = parent_[e];
    }
    return e;
}

bool UnionFind::unite(Element a, Element b)
{
    a = find(a);
    b = find(b);
    if (a == b)
        return false;
    // keep the smaller index as root so roots are block minima
    if (b < a)
        std::swap(a, b);
    parent_[b] = a;
    return true;
}

Partition Partition::discrete(std::size_t n)
{
    Partition p;
    p.representative_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        p.representative_[i] = static_cast<Element>(i);
    p.rebuild_from_representatives();
    return p;
}

Partition Partition::indiscrete(std::size_t n)
{
    Partition p;
    p.representative_.assign(n, 0);
    p.rebuild_from_representatives();
    return p;
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<Element>> & blocks)
{
    std::vector<bool> seen(n, false);
    UnionFind uf(n);
    for (const auto & block : blocks) {
        for (Element e : block) {
            if (e >= n)
                fail(ErrorCode::ElementOutOfRange, "partition block element " + std::to_string(e) + " >= " + std::to_string(n));
            if (seen[e])
                fail(ErrorCode::PreconditionFailed, "element " + std::to_string(e) + " appears in two blocks");
            seen[e] = true;
            uf.unite(block.front(), e);
        }
    }
    for (std::size_t e = 0; e < n; ++e)
        if (! seen[e])
            fail(ErrorCode::PreconditionFailed, "element " + std::to_string(e) + " is not covered by any block");
    return from_union_find(uf);
}

Partition Partition::from_labels(const std::vector<std::size_t> & labels)
{
    UnionFind uf(labels.size());
    std::map<std::size_t, Element> first;
    for (std::size_t e = 0; e < labels.size(); ++e) {
        auto [it, inserted] = first.emplace(labels[e], static_cast<Element>(e));
        if (! inserted)
            uf.unite(it->second, static_cast<Element>(e));
    }
    return from_union_find(uf);
}

Partition Partition::from_union_find(UnionFind & uf)
{
    Partition p;
    p.representative_.resize(uf.size());
    for (std::size_t e = 0; e < uf.size(); ++e)
        p.representative_[e] = uf.find(static_cast<Element>(e));
    p.rebuild_from_representatives();
    return p;
}

void Partition::rebuild_from_representatives()
{
    const std::size_t n = representative_.size();
    // Normalise to block minima regardless of how representatives were chosen.
    std::vector<Element> minimum(n, static_cast<Element>(n));
    for (std::size_t e = 0; e < n; ++e)
        minimum[representative_[e]] = std::min(minimum[representative_[e]], static_cast<Element>(e));
    for (std::size_t e = 0; e < n; ++e)
        representative_[e] = minimum[representative_[e]];

    block_index_.assign(n, 0);
    std::vector<std::vector<Element>> members;
    std::vector<std::size_t> index_of_rep(n, n);
    for (std::size_t e = 0; e < n; ++e) {
        Element r = representative_[e];
        if (index_of_rep[r] == n) {
            index_of_rep[r] = members.size();
            members.emplace_back();
        }
        members[index_of_rep[r]].push_back(static_cast<Element>(e));
        block_index_[e] = index_of_rep[r];
    }
    blocks_.clear();
    blocks_.reserve(members.size());
    for (auto & m : members)
        blocks_.emplace_back(std::move(m));
}

bool Partition::refines(const Partition & other) const
{
    if (other.universe_size() != universe_size())
        fail(ErrorCode::SizeMismatch, "partitions over different universes");
    for (std::size_t e = 0; e < representative_.size(); ++e)
        if (! other.same_block(static_cast<Element>(e), representative_[e]))
            return false;
    return true;
}

Partition join(const Partition & a, const Partition & b)
{
    if (a.universe_size() != b.universe_size())
        fail(ErrorCode::SizeMismatch, "join of partitions over different universes");
    UnionFind uf(a.universe_size());
    for (std::size_t e = 0; e < a.universe_size(); ++e) {
        uf.unite(static_cast<Element>(e), a.representative(static_cast<Element>(e)));
        uf.unite(static_cast<Element>(e), b.representative(static_cast<Element>(e)));
    }
    return Partition::from_union_find(uf);
}

} // namespace mcsp
