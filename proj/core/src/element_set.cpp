#include "mcsp/element_set.hpp"

#include <algorithm>
#include <iterator>

namespace mcsp {

ElementSet::ElementSet(std::initializer_list<Element> elements) :
    ElementSet(std::vector<Element>(elements))
{
}

ElementSet::ElementSet(std::vector<Element> elements) :
    elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

ElementSet ElementSet::full(std::size_t universe_size)
{
    std::vector<Element> all(universe_size);
    for (std::size_t i = 0; i < universe_size; ++i)
        all[i] = static_cast<Element>(i);
    ElementSet result;
    result.elements_ = std::move(all);
    return result;
}

bool ElementSet::contains(Element e) const
{
    return std::binary_search(elements_.begin(), elements_.end(), e);
}

std::size_t ElementSet::index_of(Element e) const
{
    return static_cast<std::size_t>(std::lower_bound(elements_.begin(), elements_.end(), e) - elements_.begin());
}

bool ElementSet::is_subset_of(const ElementSet & other) const
{
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

ElementSet ElementSet::intersect(const ElementSet & other) const
{
    ElementSet result;
    std::set_intersection(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end(),
        std::back_inserter(result.elements_));
    return result;
}

} // namespace mcsp
