#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace mcsp {

// Elements of a finite universe are dense indices 0..n-1.
using Element = std::uint32_t;

// Sorted, duplicate-free set of elements. Used for subuniverses, potatoes and
// congruence blocks.
class ElementSet {
public:
    ElementSet() = default;
    ElementSet(std::initializer_list<Element> elements);
    explicit ElementSet(std::vector<Element> elements);

    static ElementSet full(std::size_t universe_size);

    bool contains(Element e) const;
    std::size_t index_of(Element e) const; // position in sorted order; requires contains(e)
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    Element front() const { return elements_.front(); }
    Element operator[](std::size_t i) const { return elements_[i]; }

    bool is_subset_of(const ElementSet & other) const;
    ElementSet intersect(const ElementSet & other) const;

    std::span<const Element> elements() const noexcept { return elements_; }
    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    friend bool operator==(const ElementSet &, const ElementSet &) = default;
    friend auto operator<=>(const ElementSet &, const ElementSet &) = default;

private:
    std::vector<Element> elements_;
};

} // namespace mcsp
