#include "matvar/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace matvar {

namespace {

int find(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

int pair_index(int v, int i, int j) {
    // index of edge {i,j}, i<j, among all pairs of a v-vertex graph
    (void)v;
    return j * (j - 1) / 2 + i;
}

}  // namespace

void Graph::validate() const {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u == v) throw input_error("graph has a loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= vertices || v >= vertices)
            throw input_error("edge endpoint out of range");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw input_error("graph has parallel edges");
    }
}

int Graph::components() const {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    for (auto [u, v] : edges) {
        int a = find(parent, u), b = find(parent, v);
        if (a != b) parent[a] = b;
    }
    int c = 0;
    for (int i = 0; i < vertices; ++i)
        if (find(parent, i) == i) ++c;
    return c;
}

Graph Graph::delete_edge(int e) const {
    Graph g = *this;
    g.edges.erase(g.edges.begin() + e);
    return g;
}

Graph Graph::contract_edge(int e) const {
    auto [u, v] = edges[e];
    Graph g;
    g.vertices = vertices - 1;
    auto relabel = [&](int w) {
        if (w == v) w = u;
        return w > v ? w - 1 : w;
    };
    std::set<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        if (i == e) continue;
        int a = relabel(edges[i].first), b = relabel(edges[i].second);
        if (a == b) continue;  // cannot happen in a simple graph, kept as a guard
        out.insert(std::minmax(a, b));
    }
    g.edges.assign(out.begin(), out.end());
    return g;
}

unsigned long Graph::canonical_key() const {
    std::vector<int> perm(vertices);
    std::iota(perm.begin(), perm.end(), 0);
    unsigned long best = ~0ul;
    do {
        unsigned long mask = 0;
        for (auto [u, v] : edges) {
            auto [a, b] = std::minmax(perm[u], perm[v]);
            mask |= 1ul << pair_index(vertices, a, b);
        }
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best | (static_cast<unsigned long>(vertices) << 48);
}

std::vector<Graph> all_graphs_up_to(int max_vertices) {
    std::vector<Graph> out;
    for (int v = 1; v <= max_vertices; ++v) {
        int npairs = v * (v - 1) / 2;
        std::set<unsigned long> seen;
        for (unsigned long mask = 0; mask < (1ul << npairs); ++mask) {
            Graph g;
            g.vertices = v;
            for (int j = 1; j < v; ++j)
                for (int i = 0; i < j; ++i)
                    if (mask & (1ul << pair_index(v, i, j))) g.edges.emplace_back(i, j);
            unsigned long key = g.canonical_key();
            if (seen.insert(key).second) out.push_back(std::move(g));
        }
    }
    return out;
}

Graph complete_graph(int n) {
    Graph g;
    g.vertices = n;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) g.edges.emplace_back(i, j);
    return g;
}

}  // namespace matvar
