#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hglab/linegraph.hpp"

namespace hglab {

// Plain undirected graph; the expansion machinery runs on this view so it
// serves both line graphs and ordinary test graphs (paths, cycles, cliques).
class SimpleGraph {
public:
    explicit SimpleGraph(int n) : adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    int size() const { return static_cast<int>(adj_.size()); }

    void add_edge(int a, int b) {
        if (a == b) throw std::invalid_argument("self loop");
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
    }

    void finalize() {
        for (auto& nb : adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
    }

    const std::vector<int>& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

private:
    std::vector<std::vector<int>> adj_;
};

// Adjacency of an r-line-graph: tuples differing in exactly one coordinate,
// i.e. block-mates. Each pair lies in exactly one direction's block.
inline SimpleGraph line_graph_adjacency(const LineGraph& g) {
    SimpleGraph out(g.size());
    for (int dir = 0; dir < g.r(); ++dir) {
        for (const Block& b : g.blocks(dir)) {
            for (std::size_t i = 0; i < b.members.size(); ++i)
                for (std::size_t j = i + 1; j < b.members.size(); ++j)
                    out.add_edge(b.members[i], b.members[j]);
        }
    }
    out.finalize();
    return out;
}

inline SimpleGraph make_path_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.finalize();
    return g;
}

inline SimpleGraph make_cycle_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    g.finalize();
    return g;
}

inline SimpleGraph make_complete_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    g.finalize();
    return g;
}

}  // namespace hglab
