#include "mcsp/brute_force.hpp"

#include <functional>
#include <limits>

#include "mcsp/error.hpp"

namespace mcsp {

std::size_t search_space_size(const Instance & inst)
{
    constexpr std::size_t cap = std::numeric_limits<std::size_t>::max();
    std::size_t total = 1;
    for (const auto & p : inst.potatoes()) {
        if (p.empty())
            return 0;
        if (total > cap / p.size())
            return cap;
        total *= p.size();
    }
    return total;
}

namespace {

// Calls visit on each solution in lexicographic order until it returns false.
void search(const Instance & inst, const BruteForceOptions & options, const std::function<bool(const Assignment &)> & visit)
{
    const std::size_t space = search_space_size(inst);
    if (space > options.bound)
        fail(ErrorCode::BoundExceeded,
            "search space " + std::to_string(space) + " exceeds the brute-force bound " + std::to_string(options.bound));
    const std::size_t n = inst.variable_count();
    if (space == 0)
        return;

    // domains[depth][y] is the set of values still allowed for y >= depth.
    std::vector<std::vector<std::vector<Element>>> domains(n + 1, std::vector<std::vector<Element>>(n));
    for (std::size_t y = 0; y < n; ++y)
        domains[0][y].assign(inst.potato(y).begin(), inst.potato(y).end());
    Assignment current(n);

    std::function<bool(std::size_t)> step = [&](std::size_t x) -> bool {
        if (x == n)
            return visit(current);
        for (Element a : domains[x][x]) {
            if (! inst.relation(x, x).contains(a, a))
                continue;
            current[x] = a;
            bool wiped = false;
            for (std::size_t y = x + 1; y < n && ! wiped; ++y) {
                auto & next = domains[x + 1][y];
                next.clear();
                const auto & r = inst.relation(x, y);
                for (Element b : domains[x][y])
                    if (r.contains(a, b) && inst.relation(y, x).contains(b, a))
                        next.push_back(b);
                wiped = next.empty();
            }
            if (! wiped && ! step(x + 1))
                return false;
        }
        return true;
    };
    step(0);
}

} // namespace

std::optional<Assignment> brute_force_solve(const Instance & inst, const BruteForceOptions & options)
{
    std::optional<Assignment> found;
    search(inst, options, [&](const Assignment & s) {
        found = s;
        return false;
    });
    return found;
}

std::vector<Assignment> enumerate_solutions(const Instance & inst, std::size_t max_solutions, const BruteForceOptions & options)
{
    std::vector<Assignment> out;
    search(inst, options, [&](const Assignment & s) {
        if (out.size() == max_solutions)
            fail(ErrorCode::BoundExceeded, "more than " + std::to_string(max_solutions) + " solutions");
        out.push_back(s);
        return true;
    });
    return out;
}

} // namespace mcsp
