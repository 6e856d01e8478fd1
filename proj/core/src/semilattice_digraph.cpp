#include "mcsp/semilattice_digraph.hpp"

#include <algorithm>

#include "mcsp/error.hpp"
#include "mcsp/identities.hpp"

namespace mcsp {

Digraph arrow_digraph(const BinaryTable & dot, const ElementSet & elements)
{
    Digraph g(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j < elements.size(); ++j)
            if (dot(elements[i], elements[j]) == elements[j])
                g.add_edge(i, j);
    return g;
}

SemilatticeDigraph build_digraph(const FiniteAlgebra & alg, const Term & dot)
{
    auto table = binary_table(alg, dot);
    if (! is_two_semilattice_on(table))
        fail(ErrorCode::NotTwoSemilattice, to_string(dot) + " is not a 2-semilattice operation");
    auto graph = arrow_digraph(table, ElementSet::full(alg.size()));
    return SemilatticeDigraph{std::move(table), std::move(graph)};
}

SccDecomposition scc(const SemilatticeDigraph & dg)
{
    return strongly_connected_components(dg.graph);
}

std::vector<std::size_t> unique_minimal_component(const Digraph & g)
{
    const auto decomposition = strongly_connected_components(g);
    const auto minimal = decomposition.minimal_components();
    if (minimal.size() != 1)
        fail(ErrorCode::InternalInconsistency,
            "expected a unique minimal strongly connected component, found " + std::to_string(minimal.size()));
    auto component = decomposition.components[minimal.front()];
    if (component != universal_sinks(g))
        fail(ErrorCode::InternalInconsistency, "minimal component differs from the set of vertices reachable from everywhere");
    return component;
}

ElementSet minimal_component(const SemilatticeDigraph & dg)
{
    const auto vertices = unique_minimal_component(dg.graph);
    return ElementSet(std::vector<Element>(vertices.begin(), vertices.end()));
}

bool is_strongly_connected(const Digraph & g)
{
    return strongly_connected_components(g).size() <= 1;
}

bool is_strongly_connected(const SemilatticeDigraph & dg)
{
    return is_strongly_connected(dg.graph);
}

bool check_binary_absorption_free(const FiniteAlgebra & alg, const Term & dot, const AbsorptionOptions & options)
{
    const std::size_t n = alg.size();
    if (n > options.max_size)
        fail(ErrorCode::BoundExceeded, "absorption check limited to algebras of size " + std::to_string(options.max_size));
    const auto t = binary_table(alg, dot);
    const std::size_t full = (std::size_t{1} << n) - 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
        std::vector<Element> members;
        for (Element e = 0; e < n; ++e)
            if (mask >> e & 1)
                members.push_back(e);
        bool absorbing = true;
        for (Element b : members) {
            for (Element a = 0; a < n && absorbing; ++a)
                if (! (mask >> t(b, a) & 1) || ! (mask >> t(a, b) & 1))
                    absorbing = false;
            if (! absorbing)
                break;
        }
        if (absorbing && is_subuniverse(alg, ElementSet(members)))
            return false;
    }
    return true;
}

} // namespace mcsp
