#include "mcsp/digraph.hpp"

#include <algorithm>
#include <sstream>

namespace mcsp {

bool Digraph::has_edge(std::size_t from, std::size_t to) const
{
    const auto & s = out_[from];
    return std::find(s.begin(), s.end(), to) != s.end();
}

std::vector<std::size_t> SccDecomposition::minimal_components() const
{
    std::vector<std::size_t> result;
    for (std::size_t c = 0; c < components.size(); ++c)
        if (order_edges[c].empty())
            result.push_back(c);
    return result;
}

SccDecomposition strongly_connected_components(const Digraph & g)
{
    // Iterative Tarjan.
    const std::size_t n = g.vertex_count();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0), raw_component(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call; // vertex, next successor position
    std::size_t counter = 0, raw_count = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited)
            continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (! call.empty()) {
            auto & [v, pos] = call.back();
            const auto & succ = g.successors(v);
            if (pos < succ.size()) {
                const std::size_t w = succ[pos++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                }
                else if (on_stack[w])
                    low[v] = std::min(low[v], index[w]);
                continue;
            }
            if (low[v] == index[v]) {
                while (true) {
                    const std::size_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    raw_component[w] = raw_count;
                    if (w == v)
                        break;
                }
                ++raw_count;
            }
            const std::size_t finished = v;
            call.pop_back();
            if (! call.empty())
                low[call.back().first] = std::min(low[call.back().first], low[finished]);
        }
    }

    // Renumber by least vertex.
    std::vector<std::size_t> renumber(raw_count, unvisited);
    SccDecomposition result;
    result.component_of.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        auto & r = renumber[raw_component[v]];
        if (r == unvisited) {
            r = result.components.size();
            result.components.emplace_back();
        }
        result.component_of[v] = r;
        result.components[r].push_back(v);
    }
    result.order_edges.resize(result.components.size());
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w : g.successors(v))
            if (result.component_of[v] != result.component_of[w])
                result.order_edges[result.component_of[v]].push_back(result.component_of[w]);
    for (auto & e : result.order_edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    return result;
}

std::vector<std::size_t> universal_sinks(const Digraph & g)
{
    const std::size_t n = g.vertex_count();
    // reverse reachability from each vertex is quadratic; fine at desk scale
    Digraph reverse(n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w : g.successors(v))
            reverse.add_edge(w, v);
    std::vector<std::size_t> result;
    std::vector<bool> seen;
    std::vector<std::size_t> queue;
    for (std::size_t target = 0; target < n; ++target) {
        seen.assign(n, false);
        queue.assign(1, target);
        seen[target] = true;
        std::size_t reached = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (std::size_t w : reverse.successors(queue[head]))
                if (! seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                    ++reached;
                }
        if (reached == n)
            result.push_back(target);
    }
    return result;
}

std::string to_dot(const Digraph & g, const std::vector<std::string> & labels, const std::string & name)
{
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        out << "  v" << v << " [label=\"" << (v < labels.size() ? labels[v] : std::to_string(v)) << "\"];\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (std::size_t w : g.successors(v))
            out << "  v" << v << " -> v" << w << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace mcsp
