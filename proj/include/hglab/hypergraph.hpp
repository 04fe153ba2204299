#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "hglab/rng.hpp"

namespace hglab {

using Edge = std::vector<int>;  // sorted, distinct vertex ids

struct EdgeHash {
    std::size_t operator()(const Edge& e) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (int v : e) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

// r-uniform hypergraph on vertices 0..N-1. Edges are kept in canonical form:
// sorted within each edge, edges sorted lexicographically. N is the declared
// vertex count, not the max used vertex.
class Hypergraph {
public:
    Hypergraph(int r, int vertex_count, std::vector<Edge> edges)
        : r_(r), n_(vertex_count) {
        if (r < 2) throw std::invalid_argument("uniformity must be >= 2");
        if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
        for (auto& e : edges) {
            std::sort(e.begin(), e.end());
            if (static_cast<int>(e.size()) != r)
                throw std::invalid_argument("edge of wrong arity");
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw std::invalid_argument("repeated vertex in edge");
            if (e.front() < 0 || e.back() >= vertex_count)
                throw std::invalid_argument("vertex out of range");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("duplicate edge");
        edges_ = std::move(edges);
        edge_set_.reserve(edges_.size() * 2);
        for (const auto& e : edges_) edge_set_.insert(e);
    }

    int r() const { return r_; }
    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }

    bool has_edge(const Edge& sorted_edge) const { return edge_set_.count(sorted_edge) > 0; }

    bool has_edge_of(std::vector<int> vertices) const {
        std::sort(vertices.begin(), vertices.end());
        return has_edge(vertices);
    }

    bool operator==(const Hypergraph& other) const {
        return r_ == other.r_ && n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int r_;
    int n_;
    std::vector<Edge> edges_;
    std::unordered_set<Edge, EdgeHash> edge_set_;
};

// Assignment of every vertex to a part in 1..r.
struct Partition {
    int r = 0;
    std::vector<int> part_of;  // size N, values 1..r

    int part(int v) const { return part_of.at(static_cast<std::size_t>(v)); }
};

// ---------------------------------------------------------------------------
// Witnesses and their validators. Validators are direct transcriptions of the
// definitions and are independent of any search code.
// ---------------------------------------------------------------------------

struct TightCycleWitness {
    std::vector<int> vertices;  // v_1..v_len, cyclic

    int length() const { return static_cast<int>(vertices.size()); }
};

inline bool validate_tight_cycle(const Hypergraph& h, const TightCycleWitness& w,
                                 std::string* why = nullptr) {
    const int len = w.length();
    const int r = h.r();
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (len < r + 1) return fail("length below r+1");
    std::set<int> distinct(w.vertices.begin(), w.vertices.end());
    if (static_cast<int>(distinct.size()) != len) return fail("repeated vertex");
    for (int v : w.vertices)
        if (v < 0 || v >= h.vertex_count()) return fail("vertex out of range");
    for (int i = 0; i < len; ++i) {
        std::vector<int> window(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j) window[static_cast<std::size_t>(j)] = w.vertices[static_cast<std::size_t>((i + j) % len)];
        if (!h.has_edge_of(window)) return fail("window " + std::to_string(i) + " is not an edge");
    }
    return true;
}

// (v_1, e_1, ..., v_len, e_len) with v_i in e_{i-1} ∩ e_i cyclically.
struct BergeWitness {
    std::vector<int> vertices;
    std::vector<std::size_t> edge_indices;  // into Hypergraph::edges()

    int length() const { return static_cast<int>(vertices.size()); }
};

inline bool validate_berge_cycle(const Hypergraph& h, const BergeWitness& w,
                                 std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int len = w.length();
    if (len < 2) return fail("length below 2");
    if (w.edge_indices.size() != w.vertices.size()) return fail("vertex/edge count mismatch");
    if (std::set<int>(w.vertices.begin(), w.vertices.end()).size() != w.vertices.size())
        return fail("repeated vertex");
    if (std::set<std::size_t>(w.edge_indices.begin(), w.edge_indices.end()).size() !=
        w.edge_indices.size())
        return fail("repeated edge");
    for (int i = 0; i < len; ++i) {
        if (w.edge_indices[static_cast<std::size_t>(i)] >= h.edge_count()) return fail("edge index out of range");
        const Edge& cur = h.edge(w.edge_indices[static_cast<std::size_t>(i)]);
        const Edge& prev = h.edge(w.edge_indices[static_cast<std::size_t>((i + len - 1) % len)]);
        int v = w.vertices[static_cast<std::size_t>(i)];
        if (!std::binary_search(cur.begin(), cur.end(), v) ||
            !std::binary_search(prev.begin(), prev.end(), v))
            return fail("vertex " + std::to_string(v) + " not in both incident edges");
    }
    return true;
}

// (e_1, ..., e_len): consecutive edges share exactly one vertex, the
// connectors are pairwise distinct, non-consecutive edges are disjoint.
struct LooseWitness {
    std::vector<std::size_t> edge_indices;
    std::vector<int> connectors;  // connector i joins e_i and e_{i+1} (cyclic)

    int length() const { return static_cast<int>(edge_indices.size()); }
};

inline bool validate_loose_cycle(const Hypergraph& h, const LooseWitness& w,
                                 std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int len = w.length();
    if (len < 3) return fail("length below 3");
    if (w.connectors.size() != w.edge_indices.size()) return fail("connector count mismatch");
    if (std::set<std::size_t>(w.edge_indices.begin(), w.edge_indices.end()).size() !=
        w.edge_indices.size())
        return fail("repeated edge");
    if (std::set<int>(w.connectors.begin(), w.connectors.end()).size() != w.connectors.size())
        return fail("repeated connector vertex");
    for (int i = 0; i < len; ++i) {
        for (int j = i + 1; j < len; ++j) {
            const Edge& a = h.edge(w.edge_indices[static_cast<std::size_t>(i)]);
            const Edge& b = h.edge(w.edge_indices[static_cast<std::size_t>(j)]);
            std::vector<int> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(common));
            const bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (consecutive) {
                if (common.size() != 1) return fail("consecutive edges do not share exactly one vertex");
                const int expected = (j == i + 1) ? w.connectors[static_cast<std::size_t>(i)]
                                                  : w.connectors[static_cast<std::size_t>(j)];
                if (common.front() != expected) return fail("connector mismatch");
            } else if (!common.empty()) {
                return fail("non-consecutive edges intersect");
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Classical constructions from the introduction.
// ---------------------------------------------------------------------------

enum class ConstructionKind { Star, BergeFree };

// Star: all r-sets containing vertex 0 (binom(n-1, r-1) edges, no tight or
// loose cycles). BergeFree: floor((n-1)/(r-1)) pairwise disjoint (r-1)-sets,
// each joined to vertex 0.
inline Hypergraph construct(ConstructionKind kind, int n, int r) {
    if (r < 2 || n < r) throw std::invalid_argument("construct requires n >= r >= 2");
    std::vector<Edge> edges;
    if (kind == ConstructionKind::Star) {
        // enumerate (r-1)-subsets of {1..n-1}
        std::vector<int> pick(static_cast<std::size_t>(r - 1));
        for (int i = 0; i < r - 1; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            Edge e;
            e.push_back(0);
            e.insert(e.end(), pick.begin(), pick.end());
            edges.push_back(e);
            int i = r - 2;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - 1 - (r - 2 - i)) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < r - 1; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    } else {
        const int groups = (n - 1) / (r - 1);
        for (int g = 0; g < groups; ++g) {
            Edge e;
            e.push_back(0);
            for (int j = 0; j < r - 1; ++j) e.push_back(1 + g * (r - 1) + j);
            edges.push_back(e);
        }
    }
    return Hypergraph(r, n, std::move(edges));
}

// Uniform seeded assignment of vertices to r parts; keeps the transversal
// edges (exactly one vertex per part). Part of vertex v is a pure function
// of (seed, v), so the result is seed-reproducible.
inline std::pair<Partition, Hypergraph> random_r_partition(const Hypergraph& h,
                                                           std::uint64_t seed) {
    const int r = h.r();
    Partition p;
    p.r = r;
    p.part_of.resize(static_cast<std::size_t>(h.vertex_count()));
    for (int v = 0; v < h.vertex_count(); ++v) {
        SplitMix64 g(derive_stream(seed, static_cast<std::uint64_t>(v)));
        p.part_of[static_cast<std::size_t>(v)] = static_cast<int>(g.next_below(static_cast<std::uint64_t>(r))) + 1;
    }
    std::vector<Edge> kept;
    for (const auto& e : h.edges()) {
        std::vector<bool> seen(static_cast<std::size_t>(r) + 1, false);
        bool transversal = true;
        for (int v : e) {
            int pt = p.part(v);
            if (seen[static_cast<std::size_t>(pt)]) {
                transversal = false;
                break;
            }
            seen[static_cast<std::size_t>(pt)] = true;
        }
        if (transversal) kept.push_back(e);
    }
    return {std::move(p), Hypergraph(r, h.vertex_count(), std::move(kept))};
}

}  // namespace hglab
