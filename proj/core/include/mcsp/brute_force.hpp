#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mcsp/instance.hpp"

namespace mcsp {

struct BruteForceOptions {
    // Upper limit on the product of potato sizes; exceeding it throws BoundExceeded.
    std::size_t bound = 10'000'000;
};

// Product of potato sizes, saturating at SIZE_MAX.
std::size_t search_space_size(const Instance & inst);

// Backtracking in variable order with forward pruning along R_xy. Returns
// the lexicographically least solution, if any.
std::optional<Assignment> brute_force_solve(const Instance & inst, const BruteForceOptions & options = {});

// All solutions in lexicographic order. Throws BoundExceeded once more than
// max_solutions are found (or the search space exceeds options.bound).
std::vector<Assignment> enumerate_solutions(const Instance & inst, std::size_t max_solutions,
    const BruteForceOptions & options = {});

} // namespace mcsp
