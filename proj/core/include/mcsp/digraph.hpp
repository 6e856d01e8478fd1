#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mcsp {

// Adjacency-list digraph on vertices 0..n-1.
class Digraph {
public:
    explicit Digraph(std::size_t vertex_count = 0) : out_(vertex_count) {}

    void add_edge(std::size_t from, std::size_t to) { out_[from].push_back(to); }

    std::size_t vertex_count() const noexcept { return out_.size(); }
    const std::vector<std::size_t> & successors(std::size_t v) const { return out_[v]; }
    bool has_edge(std::size_t from, std::size_t to) const;

private:
    std::vector<std::vector<std::size_t>> out_;
};

// Strongly connected components. Components are numbered in increasing order
// of their least vertex.
struct SccDecomposition {
    std::vector<std::size_t> component_of;
    std::vector<std::vector<std::size_t>> components; // each sorted
    // order_edges[c] lists components d != c with an arc from c into d
    // (the quasi-order c >= d), sorted, without duplicates.
    std::vector<std::vector<std::size_t>> order_edges;

    std::size_t size() const noexcept { return components.size(); }
    // Components with no arc leaving them.
    std::vector<std::size_t> minimal_components() const;
};

SccDecomposition strongly_connected_components(const Digraph & g);

// Vertices reachable from every vertex.
std::vector<std::size_t> universal_sinks(const Digraph & g);

// Plain-text DOT rendering with vertex labels.
std::string to_dot(const Digraph & g, const std::vector<std::string> & labels, const std::string & name = "G");

} // namespace mcsp
