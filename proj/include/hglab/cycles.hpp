#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hglab/hypergraph.hpp"

namespace hglab {

enum class SearchStatus {
    Found,           // witness attached
    ExhaustedNone,   // complete search, conclusively no witness
    BudgetExceeded,  // inconclusive: budget tripped before exhaustion
};

template <typename Witness>
struct SearchResult {
    SearchStatus status = SearchStatus::ExhaustedNone;
    std::optional<Witness> witness;
    std::uint64_t nodes = 0;

    bool found() const { return status == SearchStatus::Found; }
    bool conclusive() const { return status != SearchStatus::BudgetExceeded; }
};

struct SearchLimits {
    std::uint64_t node_budget = 50'000'000;
    int max_length = 0;  // 0 = unbounded
};

namespace detail {

// Extension index for tight-path search: maps the sorted (r-1)-set formed by
// the last r-1 path vertices to the vertices completing it to an edge.
// Candidate lists are ordered by (degree, id) — low-degree first.
class WindowIndex {
public:
    explicit WindowIndex(const Hypergraph& h) {
        std::vector<int> degree(static_cast<std::size_t>(h.vertex_count()), 0);
        for (const auto& e : h.edges())
            for (int v : e) ++degree[static_cast<std::size_t>(v)];
        for (const auto& e : h.edges()) {
            for (std::size_t skip = 0; skip < e.size(); ++skip) {
                Edge key;
                key.reserve(e.size() - 1);
                for (std::size_t j = 0; j < e.size(); ++j)
                    if (j != skip) key.push_back(e[j]);
                map_[key].push_back(e[skip]);
            }
        }
        for (auto& [key, cands] : map_) {
            std::sort(cands.begin(), cands.end(), [&](int a, int b) {
                return std::pair(degree[static_cast<std::size_t>(a)], a) < std::pair(degree[static_cast<std::size_t>(b)], b);
            });
        }
    }

    static const std::vector<int>& empty_list() {
        static const std::vector<int> none;
        return none;
    }

    const std::vector<int>& completions(const Edge& sorted_key) const {
        auto it = map_.find(sorted_key);
        return it == map_.end() ? empty_list() : it->second;
    }

private:
    std::unordered_map<Edge, std::vector<int>, EdgeHash> map_;
};

struct TightSearch {
    const Hypergraph& h;
    const WindowIndex& index;
    int min_len;
    int max_len;  // inclusive; 0 = unbounded
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool tripped = false;
    std::vector<int> path;
    std::vector<bool> used;
    bool require_above_start;  // canonical mode: all vertices > path[0]

    bool closes_cycle() const {
        const int r = h.r();
        const int len = static_cast<int>(path.size());
        // Consecutive windows hold by construction; check the r-1 wrapping ones.
        std::vector<int> window(static_cast<std::size_t>(r));
        for (int start = len - r + 1; start < len; ++start) {
            for (int j = 0; j < r; ++j) window[static_cast<std::size_t>(j)] = path[static_cast<std::size_t>((start + j) % len)];
            std::vector<int> sorted = window;
            std::sort(sorted.begin(), sorted.end());
            if (!h.has_edge(sorted)) return false;
        }
        return true;
    }

    // Returns true when a witness is complete in `path`.
    bool extend() {
        if (nodes >= budget) {
            tripped = true;
            return false;
        }
        ++nodes;
        const int r = h.r();
        const int len = static_cast<int>(path.size());
        if (len >= min_len && (max_len == 0 || len <= max_len) && closes_cycle()) return true;
        if (max_len != 0 && len >= max_len) return false;

        Edge key(path.end() - (r - 1), path.end());
        std::sort(key.begin(), key.end());
        for (int cand : index.completions(key)) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            if (require_above_start && cand <= path.front()) continue;
            path.push_back(cand);
            used[static_cast<std::size_t>(cand)] = true;
            if (extend()) return true;
            used[static_cast<std::size_t>(cand)] = false;
            path.pop_back();
            if (tripped) return false;
        }
        return false;
    }
};

}  // namespace detail

// Depth-first window-extension search for a tight cycle of length >= r+1
// (and <= limits.max_length when given). Complete unless the node budget
// trips. Every tight cycle has a rotation starting at its minimum vertex, so
// start windows are the orderings of each edge led by a vertex smaller than
// all other cycle vertices.
inline SearchResult<TightCycleWitness> find_tight_cycle(const Hypergraph& h,
                                                        SearchLimits limits = {}) {
    const int r = h.r();
    if (limits.max_length != 0 && limits.max_length < r + 1)
        throw std::invalid_argument("max_length below r+1");
    SearchResult<TightCycleWitness> result;
    detail::WindowIndex index(h);
    detail::TightSearch search{h,    index, r + 1, limits.max_length, limits.node_budget, 0, false,
                               {},   {},    true};
    search.used.assign(static_cast<std::size_t>(h.vertex_count()), false);

    for (const auto& e : h.edges()) {
        const int start = e.front();  // minimum vertex of this edge
        std::vector<int> rest(e.begin() + 1, e.end());
        std::sort(rest.begin(), rest.end());
        do {
            search.path.clear();
            search.path.push_back(start);
            search.path.insert(search.path.end(), rest.begin(), rest.end());
            for (int v : search.path) search.used[static_cast<std::size_t>(v)] = true;
            const bool hit = search.extend();
            for (int v : search.path) search.used[static_cast<std::size_t>(v)] = false;
            if (hit) {
                result.status = SearchStatus::Found;
                result.witness = TightCycleWitness{search.path};
                result.nodes = search.nodes;
                return result;
            }
            if (search.tripped) {
                result.status = SearchStatus::BudgetExceeded;
                result.nodes = search.nodes;
                return result;
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    result.status = SearchStatus::ExhaustedNone;
    result.nodes = search.nodes;
    return result;
}

// Variant used by the extremal oracle: searches only cycles through
// `through_edge` (all start-window orderings of that edge, no minimum-vertex
// canonicalization). Sound for incremental checks: if H minus the edge is
// tight-cycle-free, any tight cycle of H passes through it.
inline SearchResult<TightCycleWitness> find_tight_cycle_through(const Hypergraph& h,
                                                                const Edge& through_edge,
                                                                SearchLimits limits = {}) {
    const int r = h.r();
    SearchResult<TightCycleWitness> result;
    detail::WindowIndex index(h);
    detail::TightSearch search{h,    index, r + 1, limits.max_length, limits.node_budget, 0, false,
                               {},   {},    false};
    search.used.assign(static_cast<std::size_t>(h.vertex_count()), false);

    std::vector<int> order(through_edge);
    std::sort(order.begin(), order.end());
    do {
        search.path.assign(order.begin(), order.end());
        for (int v : search.path) search.used[static_cast<std::size_t>(v)] = true;
        const bool hit = search.extend();
        for (int v : search.path) search.used[static_cast<std::size_t>(v)] = false;
        if (hit) {
            result.status = SearchStatus::Found;
            result.witness = TightCycleWitness{search.path};
            result.nodes = search.nodes;
            return result;
        }
        if (search.tripped) {
            result.status = SearchStatus::BudgetExceeded;
            result.nodes = search.nodes;
            return result;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    result.status = SearchStatus::ExhaustedNone;
    result.nodes = search.nodes;
    return result;
}

// A Berge cycle is exactly a cycle in the bipartite vertex/edge incidence
// graph, so detection is a linear-time DFS, no budget needed.
inline SearchResult<BergeWitness> find_berge_cycle(const Hypergraph& h) {
    SearchResult<BergeWitness> result;
    const int nv = h.vertex_count();
    const int total = nv + static_cast<int>(h.edge_count());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
    for (std::size_t ei = 0; ei < h.edge_count(); ++ei) {
        for (int v : h.edge(ei)) {
            adj[static_cast<std::size_t>(v)].push_back(nv + static_cast<int>(ei));
            adj[static_cast<std::size_t>(nv) + ei].push_back(v);
        }
    }
    std::vector<int> parent(static_cast<std::size_t>(total), -2);
    for (int root = 0; root < total; ++root) {
        if (parent[static_cast<std::size_t>(root)] != -2) continue;
        std::vector<std::pair<int, int>> stack{{root, -1}};
        while (!stack.empty()) {
            auto [u, from] = stack.back();
            stack.pop_back();
            if (parent[static_cast<std::size_t>(u)] != -2) continue;
            parent[static_cast<std::size_t>(u)] = from;
            ++result.nodes;
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (w == from) continue;
                if (parent[static_cast<std::size_t>(w)] == -2) {
                    stack.push_back({w, u});
                    continue;
                }
                // Back/cross edge inside the DFS tree: walk both endpoints up
                // to their lowest common ancestor to extract the cycle.
                std::vector<int> pu, pw;
                for (int a = u; a != -1; a = parent[static_cast<std::size_t>(a)]) pu.push_back(a);
                for (int a = w; a != -1; a = parent[static_cast<std::size_t>(a)]) pw.push_back(a);
                std::reverse(pu.begin(), pu.end());
                std::reverse(pw.begin(), pw.end());
                std::size_t common = 0;
                while (common + 1 < pu.size() && common + 1 < pw.size() &&
                       pu[common + 1] == pw[common + 1])
                    ++common;
                std::vector<int> cycle(pu.begin() + static_cast<long>(common), pu.end());
                for (auto it = pw.rbegin(); *it != pu[common]; ++it) cycle.push_back(*it);
                BergeWitness witness;
                std::size_t offset = (cycle.front() < nv) ? 0 : 1;  // start at a vertex node
                for (std::size_t i = 0; i < cycle.size(); i += 2) {
                    witness.vertices.push_back(cycle[(offset + i) % cycle.size()]);
                    witness.edge_indices.push_back(
                        static_cast<std::size_t>(cycle[(offset + i + 1) % cycle.size()] - nv));
                }
                result.status = SearchStatus::Found;
                result.witness = std::move(witness);
                return result;
            }
        }
    }
    result.status = SearchStatus::ExhaustedNone;
    return result;
}

namespace detail {

struct LooseSearch {
    const Hypergraph& h;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool tripped = false;
    std::vector<std::size_t> seq;
    std::vector<int> connectors;
    std::vector<bool> edge_used;
    std::vector<bool> connector_used;

    static std::vector<int> intersect(const Edge& a, const Edge& b) {
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        return common;
    }

    bool extend() {
        if (nodes >= budget) {
            tripped = true;
            return false;
        }
        ++nodes;
        const Edge& first = h.edge(seq.front());
        const Edge& last = h.edge(seq.back());
        for (std::size_t cand = seq.front() + 1; cand < h.edge_count(); ++cand) {
            if (edge_used[cand]) continue;
            const Edge& e = h.edge(cand);
            auto with_last = intersect(e, last);
            if (with_last.size() != 1) continue;
            const int connector = with_last.front();
            if (connector_used[static_cast<std::size_t>(connector)]) continue;
            // Interior edges (all but first and last of the current sequence)
            // must be disjoint from the candidate.
            bool clash = false;
            for (std::size_t i = 1; i + 1 < seq.size() && !clash; ++i)
                if (!intersect(e, h.edge(seq[i])).empty()) clash = true;
            if (clash) continue;

            auto with_first = intersect(e, first);
            // Close the cycle: candidate meets the first edge in exactly one
            // vertex, distinct from every connector used so far.
            if (seq.size() >= 2 && with_first.size() == 1 &&
                !connector_used[static_cast<std::size_t>(with_first.front())] && with_first.front() != connector) {
                seq.push_back(cand);
                connectors.push_back(connector);
                connectors.push_back(with_first.front());
                return true;
            }
            // Extend: the candidate must avoid the first edge entirely, since
            // they become non-consecutive once another edge is appended.
            if (with_first.empty()) {
                seq.push_back(cand);
                connectors.push_back(connector);
                edge_used[cand] = true;
                connector_used[static_cast<std::size_t>(connector)] = true;
                if (extend()) return true;
                edge_used[cand] = false;
                connector_used[static_cast<std::size_t>(connector)] = false;
                connectors.pop_back();
                seq.pop_back();
                if (tripped) return false;
            }
        }
        return false;
    }
};

}  // namespace detail

// Loose cycle: length >= 3, consecutive edges share exactly one vertex,
// connectors pairwise distinct, non-consecutive edges disjoint. Canonical
// search roots the cycle at its minimum edge index.
inline SearchResult<LooseWitness> find_loose_cycle(const Hypergraph& h, SearchLimits limits = {}) {
    SearchResult<LooseWitness> result;
    detail::LooseSearch search{h, limits.node_budget};
    search.edge_used.assign(h.edge_count(), false);
    search.connector_used.assign(static_cast<std::size_t>(h.vertex_count()), false);
    for (std::size_t start = 0; start < h.edge_count(); ++start) {
        search.seq.assign(1, start);
        search.connectors.clear();
        search.edge_used[start] = true;
        const bool hit = search.extend();
        search.edge_used[start] = false;
        if (hit) {
            LooseWitness witness;
            witness.edge_indices = search.seq;
            // connectors[i] joins e_i,e_{i+1}; the closing connector (last
            // pushed) joins e_last,e_first and belongs at the cyclic end.
            witness.connectors = search.connectors;
            result.status = SearchStatus::Found;
            result.witness = std::move(witness);
            result.nodes = search.nodes;
            return result;
        }
        if (search.tripped) {
            result.status = SearchStatus::BudgetExceeded;
            result.nodes = search.nodes;
            return result;
        }
    }
    result.status = SearchStatus::ExhaustedNone;
    result.nodes = search.nodes;
    return result;
}

}  // namespace hglab
