#pragma once

#include <cstddef>
#include <vector>

#include "mcsp/element_set.hpp"

namespace mcsp {

// Plain union-find with path halving; used to build partitions.
class UnionFind {
public:
    explicit UnionFind(std::size_t n);

    Element find(Element e);
    // Returns true if a and b were in different classes.
    bool unite(Element a, Element b);
    std::size_t size() const noexcept { return parent_.size(); }

private:
    std::vector<Element> parent_;
};

// An equivalence relation on 0..n-1. Canonical form: every element maps to
// the least element of its block, and blocks are sorted by least element.
class Partition {
public:
    Partition() = default;

    static Partition discrete(std::size_t n);
    static Partition indiscrete(std::size_t n);
    static Partition from_blocks(std::size_t n, const std::vector<std::vector<Element>> & blocks);
    // labels[e] is an arbitrary class label; equal labels mean same block.
    static Partition from_labels(const std::vector<std::size_t> & labels);
    static Partition from_union_find(UnionFind & uf);

    std::size_t universe_size() const noexcept { return representative_.size(); }
    std::size_t block_count() const noexcept { return blocks_.size(); }

    Element representative(Element e) const { return representative_[e]; }
    std::size_t block_index(Element e) const { return block_index_[e]; }
    const ElementSet & block(std::size_t i) const { return blocks_[i]; }
    const std::vector<ElementSet> & blocks() const noexcept { return blocks_; }
    bool same_block(Element a, Element b) const { return representative_[a] == representative_[b]; }

    bool is_discrete() const noexcept { return blocks_.size() == representative_.size(); }
    bool is_indiscrete() const noexcept { return blocks_.size() <= 1; }

    // True iff every block of *this lies inside a block of other.
    bool refines(const Partition & other) const;

    friend bool operator==(const Partition & a, const Partition & b) { return a.representative_ == b.representative_; }
    friend auto operator<=>(const Partition & a, const Partition & b) { return a.blocks_ <=> b.blocks_; }

private:
    void rebuild_from_representatives();

    std::vector<Element> representative_;
    std::vector<std::size_t> block_index_;
    std::vector<ElementSet> blocks_;
};

// Least equivalence relation containing both.
Partition join(const Partition & a, const Partition & b);

} // namespace mcsp
