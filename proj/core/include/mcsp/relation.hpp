#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "mcsp/algebra.hpp"
#include "mcsp/digraph.hpp"
#include "mcsp/element_set.hpp"
#include "mcsp/term.hpp"

namespace mcsp {

using ElementPair = std::pair<Element, Element>;

// A binary relation stored as a sorted, duplicate-free list of pairs.
class Relation {
public:
    Relation() = default;
    Relation(std::initializer_list<ElementPair> pairs);
    explicit Relation(std::vector<ElementPair> pairs);

    static Relation product(const ElementSet & left, const ElementSet & right);
    static Relation diagonal(const ElementSet & elements);

    bool contains(Element a, Element b) const;
    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }
    const ElementPair & operator[](std::size_t i) const { return pairs_[i]; }
    std::size_t index_of(const ElementPair & p) const; // requires contains
    std::span<const ElementPair> pairs() const noexcept { return pairs_; }
    auto begin() const noexcept { return pairs_.begin(); }
    auto end() const noexcept { return pairs_.end(); }

    Relation inverse() const;
    ElementSet first_projection() const;
    ElementSet second_projection() const;
    Relation intersect(const Relation & other) const;
    // R intersected with left x right.
    Relation restrict(const ElementSet & left, const ElementSet & right) const;
    bool is_subset_of(const Relation & other) const;
    bool is_subset_of_product(const ElementSet & left, const ElementSet & right) const;

    friend bool operator==(const Relation &, const Relation &) = default;
    friend auto operator<=>(const Relation &, const Relation &) = default;

private:
    std::vector<ElementPair> pairs_;
};

// Subuniverse of alg x alg generated by the pairs (operations coordinate-wise).
Relation relation_closure(const FiniteAlgebra & alg, const Relation & seed);
bool is_closed_relation(const FiniteAlgebra & alg, const Relation & r);

// Coordinate-wise arrow digraph of r; vertex i stands for r[i].
Digraph arrow_digraph(const BinaryTable & dot, const Relation & r);

// The unique minimal strongly connected component of r's arrow digraph.
Relation minimal_component(const BinaryTable & dot, const Relation & r);

// True iff r is closed under dot coordinate-wise.
bool is_closed_under(const BinaryTable & dot, const Relation & r);

} // namespace mcsp
