#include "closure.hpp"

namespace mcsp::detail {

std::vector<std::size_t> semi_naive_closure(std::size_t universe_size, const std::vector<std::size_t> & seed,
    const std::vector<std::size_t> & arities, const ApplyFn & apply)
{
    std::vector<bool> member(universe_size, false);
    std::vector<std::size_t> members;
    auto add = [&](std::size_t v) {
        if (! member[v]) {
            member[v] = true;
            members.push_back(v);
        }
    };
    for (std::size_t e : seed)
        add(e);
    for (std::size_t s = 0; s < arities.size(); ++s)
        if (arities[s] == 0)
            add(apply(s, {}));

    std::size_t old_end = 0;
    std::size_t frontier_end = members.size();
    std::vector<std::size_t> args, idx, lo, hi;
    // Nothing can be added to a full universe, so stop there.
    while (old_end < frontier_end && members.size() < universe_size) {
        for (std::size_t s = 0; s < arities.size(); ++s) {
            const std::size_t arity = arities[s];
            if (arity == 0)
                continue;
            // first_new is the first position holding a frontier element;
            // earlier positions use old elements, later ones anything known.
            for (std::size_t first_new = 0; first_new < arity; ++first_new) {
                if (first_new > 0 && old_end == 0)
                    break;
                lo.assign(arity, 0);
                hi.assign(arity, frontier_end);
                for (std::size_t p = 0; p < first_new; ++p)
                    hi[p] = old_end;
                lo[first_new] = old_end;
                idx = lo;
                args.assign(arity, 0);
                while (true) {
                    for (std::size_t p = 0; p < arity; ++p)
                        args[p] = members[idx[p]];
                    add(apply(s, args));
                    if (members.size() == universe_size)
                        return members;
                    std::size_t p = arity;
                    bool done = true;
                    while (p > 0) {
                        --p;
                        if (++idx[p] < hi[p]) {
                            done = false;
                            break;
                        }
                        idx[p] = lo[p];
                    }
                    if (done)
                        break;
                }
            }
        }
        old_end = frontier_end;
        frontier_end = members.size();
    }
    return members;
}

} // namespace mcsp::detail
