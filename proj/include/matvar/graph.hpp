#pragma once

#include <utility>
#include <vector>

#include "matvar/errors.hpp"

namespace matvar {

/// Simple loopless graph on vertices 0..vertices-1.
struct Graph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;  // stored with u < v

    /// Throws input_error on loops, parallel edges or out-of-range endpoints.
    void validate() const;

    int components() const;

    /// Rank of the cycle matroid: vertices - components.
    int rank() const { return vertices - components(); }

    Graph delete_edge(int e) const;
    /// Contract edge e, merging endpoints and dropping parallels (stays simple).
    Graph contract_edge(int e) const;

    /// Canonical (vertex-permutation minimal) edge bitmask; exhaustive, meant
    /// for small graphs only.
    unsigned long canonical_key() const;
};

/// All simple graphs with 1..max_vertices vertices, one per isomorphism class.
std::vector<Graph> all_graphs_up_to(int max_vertices);

Graph complete_graph(int n);

}  // namespace matvar
