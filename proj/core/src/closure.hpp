#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace mcsp::detail {

using ApplyFn = std::function<std::size_t(std::size_t symbol, std::span<const std::size_t> args)>;

// Closure of `seed` (codes below universe_size) under operations of the given
// arities. Each round visits only tuples that use an element added in the
// previous round. Returns codes in discovery order.
std::vector<std::size_t> semi_naive_closure(std::size_t universe_size, const std::vector<std::size_t> & seed,
    const std::vector<std::size_t> & arities, const ApplyFn & apply);

} // namespace mcsp::detail
