#pragma once

// Finite directed graphs with clause-labelled edges and the cycle analyses
// that decide the rank condition.

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace pbes::graph {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct Edge {
    std::size_t to = 0;
    std::size_t label = 0;
};

struct Digraph {
    std::vector<std::vector<Edge>> out;

    explicit Digraph(std::size_t n = 0) : out(n) {}
    [[nodiscard]] std::size_t size() const noexcept { return out.size(); }
    void add_edge(std::size_t from, std::size_t to, std::size_t label) { out.at(from).push_back({to, label}); }
};

struct Components {
    /// Component per vertex, npos for vertices outside the mask.
    std::vector<std::size_t> id;
    std::size_t count = 0;
};

/// Tarjan's algorithm restricted to vertices with mask[v] set.
Components strongly_connected_components(const Digraph& g, const std::vector<bool>& mask);

/// Vertices on some cycle whose minimum rank has the given parity.
std::vector<bool> cycle_vertices_with_min_parity(const Digraph& g, const std::vector<unsigned>& ranks, unsigned parity);

/// The smallest rank r of the wanted parity such that v lies on a cycle
/// with minimum rank r, together with v's component at that level.
struct CycleWitness {
    unsigned rank = 0;
    std::vector<std::size_t> component;
};
std::optional<CycleWitness> min_parity_cycle(const Digraph& g, const std::vector<unsigned>& ranks, std::size_t v,
                                             unsigned parity);

/// `vertices[i] -labels[i]-> vertices[i+1]`; the last edge returns to
/// vertices[cycle_start].
struct Lasso {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> labels;
    std::size_t cycle_start = 0;
};

/// Shortest-stem lasso from `start` whose cycle has even minimum rank.
std::optional<Lasso> find_even_lasso(const Digraph& g, const std::vector<unsigned>& ranks, std::size_t start);

} // namespace pbes::graph
