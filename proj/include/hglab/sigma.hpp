#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hglab/bitset_util.hpp"
#include "hglab/hypergraph.hpp"
#include "hglab/linegraph.hpp"

namespace hglab {

// Permutations of coordinate positions are 0-based internally; external
// formats (CLI, JSON) use the 1..r convention.
inline std::vector<int> identity_permutation(int r) {
    std::vector<int> sigma(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) sigma[static_cast<std::size_t>(i)] = i;
    return sigma;
}

inline void validate_permutation(const std::vector<int>& sigma, int r) {
    if (static_cast<int>(sigma.size()) != r) throw std::invalid_argument("permutation arity mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    for (int v : sigma) {
        if (v < 0 || v >= r || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of the coordinate positions");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

inline std::vector<int> invert_permutation(const std::vector<int>& sigma) {
    std::vector<int> inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) inv[static_cast<std::size_t>(sigma[i])] = static_cast<int>(i);
    return inv;
}

struct SigmaSequence {
    std::vector<int> sigma;       // 0-based image
    std::vector<Tuple> vertices;  // pairwise coordinate-disjoint
    bool closed = false;

    int order() const { return static_cast<int>(vertices.size()); }
};

inline bool tuples_coord_disjoint(const Tuple& a, const Tuple& b) {
    // Parts partition the coordinate space, so a shared coordinate means an
    // equal entry at the same position.
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == b[i]) return false;
    return true;
}

// The interpolation tuples z_0..z_r between coordinate-disjoint x and y:
// (z_i)_j = y_j iff sigma^{-1}(j) < i (0-based), else x_j. z_0 = x, z_r = y,
// and z_i differs from z_{i-1} exactly in coordinate sigma(i-1).
inline std::vector<Tuple> interpolation_tuples(const Tuple& x, const Tuple& y,
                                               const std::vector<int>& sigma) {
    const int r = static_cast<int>(x.size());
    validate_permutation(sigma, r);
    if (static_cast<int>(y.size()) != r) throw std::invalid_argument("tuple arity mismatch");
    if (!tuples_coord_disjoint(x, y)) throw std::invalid_argument("tuples share a coordinate");
    const std::vector<int> inv = invert_permutation(sigma);
    std::vector<Tuple> z(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) {
        Tuple t(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j)
            t[static_cast<std::size_t>(j)] = inv[static_cast<std::size_t>(j)] < i ? y[static_cast<std::size_t>(j)] : x[static_cast<std::size_t>(j)];
        z[static_cast<std::size_t>(i)] = std::move(t);
    }
    return z;
}

struct SigmaNeighbourResult {
    bool is_neighbour = false;
    std::vector<Tuple> interpolants;  // on success: z_0..z_r
    std::optional<Tuple> missing;     // on failure: first absent tuple
    std::string reason;
};

// y is a sigma-neighbour of x iff their coordinate sets are disjoint and all
// r+1 interpolation tuples are vertices of G.
inline SigmaNeighbourResult is_sigma_neighbour(const LineGraph& g, const Tuple& x, const Tuple& y,
                                               const std::vector<int>& sigma) {
    if (!g.contains(x)) throw std::invalid_argument("x is not a vertex of the line graph");
    if (!g.contains(y)) throw std::invalid_argument("y is not a vertex of the line graph");
    SigmaNeighbourResult result;
    if (!tuples_coord_disjoint(x, y)) {
        result.reason = "coordinate sets intersect";
        return result;
    }
    auto z = interpolation_tuples(x, y, sigma);
    for (const auto& t : z) {
        if (!g.contains(t)) {
            result.missing = t;
            result.reason = "interpolation tuple missing from G";
            return result;
        }
    }
    result.is_neighbour = true;
    result.interpolants = std::move(z);
    return result;
}

struct SequenceValidation {
    bool valid = false;
    std::string reason;
    int failing_index = -1;  // vertex or step index of the first failure
};

// Checks global coordinate disjointness and all consecutive sigma-neighbour
// relations (cyclically when closed). Reports the first failure.
inline SequenceValidation validate_sigma_sequence(const LineGraph& g, const SigmaSequence& seq) {
    SequenceValidation v;
    const int k = seq.order();
    if (k == 0) {
        v.reason = "empty sequence";
        return v;
    }
    if (seq.closed && k < 2) {
        v.reason = "closed sequence needs order >= 2";
        return v;
    }
    validate_permutation(seq.sigma, g.r());
    DynBitset used(static_cast<std::size_t>(g.coords()->size()));
    for (int i = 0; i < k; ++i) {
        const Tuple& t = seq.vertices[static_cast<std::size_t>(i)];
        if (!g.contains(t)) {
            v.reason = "vertex not in line graph";
            v.failing_index = i;
            return v;
        }
        for (int c : t) {
            if (used.test(static_cast<std::size_t>(c))) {
                v.reason = "coordinate " + g.coords()->name(c) + " used twice";
                v.failing_index = i;
                return v;
            }
            used.set(static_cast<std::size_t>(c));
        }
    }
    const int steps = seq.closed ? k : k - 1;
    for (int i = 0; i < steps; ++i) {
        const Tuple& a = seq.vertices[static_cast<std::size_t>(i)];
        const Tuple& b = seq.vertices[static_cast<std::size_t>((i + 1) % k)];
        auto nb = is_sigma_neighbour(g, a, b, seq.sigma);
        if (!nb.is_neighbour) {
            v.reason = "step " + std::to_string(i) + ": " + nb.reason;
            v.failing_index = i;
            return v;
        }
    }
    v.valid = true;
    return v;
}

// ---------------------------------------------------------------------------
// Reachability searches. A sigma-path is globally coordinate-disjoint, so
// this is self-avoiding search: iterative deepening DFS with coordinate
// bitmaps, complete whenever the budget does not trip.
// ---------------------------------------------------------------------------

struct SigmaReachOptions {
    int max_order = 0;  // <= 0 means bounded only by the graph
    std::uint64_t node_budget = 2'000'000;
};

struct SigmaReachResult {
    int source = -1;                    // vid in the searched graph
    std::map<int, SigmaSequence> paths; // target vid -> one path (incl. trivial source path)
    bool complete = true;
    std::uint64_t nodes = 0;
};

// Out-neighbour lists of the sigma-neighbour relation (directed; the
// relation is not symmetric for general sigma).
inline std::vector<std::vector<int>> sigma_adjacency(const LineGraph& g,
                                                     const std::vector<int>& sigma) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(g.size()));
    for (int a = 0; a < g.size(); ++a) {
        for (int b = 0; b < g.size(); ++b) {
            if (a == b) continue;
            const Tuple& x = g.tuple(a);
            const Tuple& y = g.tuple(b);
            if (!tuples_coord_disjoint(x, y)) continue;
            bool ok = true;
            for (const auto& z : interpolation_tuples(x, y, sigma)) {
                if (!g.contains(z)) {
                    ok = false;
                    break;
                }
            }
            if (ok) out[static_cast<std::size_t>(a)].push_back(b);
        }
    }
    return out;
}

namespace detail {

struct SigmaDfs {
    const LineGraph& g;
    const std::vector<std::vector<int>>& adj;
    std::map<int, SigmaSequence>& paths;
    const std::vector<int>& sigma;
    int depth_limit;
    std::uint64_t budget;
    std::uint64_t& nodes;
    bool tripped = false;
    bool cut_off = false;  // some branch hit the depth limit
    std::vector<int> stack;
    DynBitset used_coords;

    void record(int vid) {
        if (paths.count(vid)) return;
        SigmaSequence seq;
        seq.sigma = sigma;
        for (int v : stack) seq.vertices.push_back(g.tuple(v));
        paths.emplace(vid, std::move(seq));
    }

    void run(int v) {
        if (nodes >= budget) {
            tripped = true;
            return;
        }
        ++nodes;
        record(v);
        if (static_cast<int>(stack.size()) >= depth_limit) {
            cut_off = true;
            return;
        }
        for (int w : adj[static_cast<std::size_t>(v)]) {
            const Tuple& t = g.tuple(w);
            bool clash = false;
            for (int c : t)
                if (used_coords.test(static_cast<std::size_t>(c))) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            stack.push_back(w);
            for (int c : t) used_coords.set(static_cast<std::size_t>(c));
            run(w);
            for (int c : t) used_coords.reset(static_cast<std::size_t>(c));
            stack.pop_back();
            if (tripped) return;
        }
    }
};

}  // namespace detail

// Every vertex reachable from `source` by a sigma-path of order <= max_order,
// with one (shortest-first) path each. `complete` is true iff the search
// exhausted the path space within budget, in which case the reached set is
// exact; otherwise it is a lower bound.
inline SigmaReachResult sigma_reachable(const LineGraph& g, int source,
                                        const std::vector<int>& sigma,
                                        SigmaReachOptions options = {}) {
    if (source < 0 || source >= g.size())
        throw std::invalid_argument("source vertex not in line graph");
    validate_permutation(sigma, g.r());
    SigmaReachResult result;
    result.source = source;
    const auto adj = sigma_adjacency(g, sigma);
    int cap = min_part_usage(g);
    if (options.max_order > 0) cap = std::min(cap, options.max_order);
    cap = std::max(cap, 1);

    for (int limit = 1; limit <= cap; ++limit) {
        detail::SigmaDfs dfs{g,     adj,  result.paths, sigma, limit, options.node_budget,
                             result.nodes};
        dfs.used_coords = DynBitset(static_cast<std::size_t>(g.coords()->size()));
        dfs.stack.push_back(source);
        for (int c : g.tuple(source)) dfs.used_coords.set(static_cast<std::size_t>(c));
        dfs.run(source);
        if (dfs.tripped) {
            result.complete = false;
            break;
        }
        if (!dfs.cut_off) break;  // no branch was depth-limited: path space exhausted
        if (static_cast<int>(result.paths.size()) == g.size()) break;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Robust reachability: the maximal-collection iteration. Maintains target
// set Y with paths P(y) of order <= ell such that every coordinate outside
// coords(x) lies on at most `cap` of them; repeatedly removes the saturated
// coordinate set F and searches for new targets in G - F.
// ---------------------------------------------------------------------------

struct RobustReachOptions {
    int ell = 0;                 // max path order; <= 0 means graph-bounded
    long long cap = 0;           // per-coordinate load cap, floor(n/t)
    std::uint64_t node_budget = 2'000'000;
};

struct RobustReachResult {
    int source = -1;
    std::vector<int> reached;            // vids in the input graph, ascending
    std::map<int, SigmaSequence> paths;  // vid -> path from source
    std::map<int, long long> coord_load; // coord id -> #paths through it (excl. source coords)
    long long cap = 0;
    int iterations = 0;
    bool complete = true;
    std::uint64_t nodes = 0;

    // Saturated coordinates: load == cap.
    std::vector<int> saturated() const {
        std::vector<int> f;
        for (const auto& [c, load] : coord_load)
            if (load >= cap) f.push_back(c);
        return f;
    }
};

inline RobustReachResult robust_reach(const LineGraph& g, int source,
                                      const std::vector<int>& sigma, RobustReachOptions options) {
    if (source < 0 || source >= g.size())
        throw std::invalid_argument("source vertex not in line graph");
    if (options.cap < 1) throw std::invalid_argument("coordinate load cap must be >= 1");
    RobustReachResult result;
    result.source = source;
    result.cap = options.cap;

    const Tuple& src = g.tuple(source);
    DynBitset src_coords = g.coord_bitset(src);
    SigmaSequence trivial;
    trivial.sigma = sigma;
    trivial.vertices.push_back(src);
    result.paths.emplace(source, std::move(trivial));

    while (true) {
        ++result.iterations;
        std::vector<int> f = result.saturated();
        LineGraph h = remove_coordinates(g, f);
        auto src_in_h = h.find(src);
        if (!src_in_h) break;  // cannot happen: F excludes source coords
        SigmaReachOptions ropt;
        ropt.max_order = options.ell;
        ropt.node_budget = options.node_budget;
        SigmaReachResult reach = sigma_reachable(h, *src_in_h, sigma, ropt);
        result.nodes += reach.nodes;
        if (!reach.complete) result.complete = false;

        // Candidates ordered by their vid in g for determinism.
        std::vector<std::pair<int, const SigmaSequence*>> candidates;
        for (const auto& [hvid, path] : reach.paths) {
            auto gvid = g.find(h.tuple(hvid));
            if (!result.paths.count(*gvid)) candidates.emplace_back(*gvid, &path);
        }
        std::sort(candidates.begin(), candidates.end());

        bool added = false;
        for (auto& [gvid, path] : candidates) {
            std::vector<int> touched;
            bool blocked = false;
            for (const auto& t : path->vertices) {
                for (int c : t) {
                    if (src_coords.test(static_cast<std::size_t>(c))) continue;
                    auto it = result.coord_load.find(c);
                    if (it != result.coord_load.end() && it->second >= options.cap) {
                        blocked = true;
                        break;
                    }
                    touched.push_back(c);
                }
                if (blocked) break;
            }
            if (blocked) continue;  // retried next round in the pruned graph
            for (int c : touched) ++result.coord_load[c];
            result.paths.emplace(gvid, *path);
            added = true;
        }
        if (!added) break;
    }

    for (const auto& [vid, path] : result.paths) result.reached.push_back(vid);
    std::sort(result.reached.begin(), result.reached.end());
    return result;
}

// ---------------------------------------------------------------------------
// The reach digraph D(x) and the sigma-cycle construction.
// ---------------------------------------------------------------------------

struct ReachDigraph {
    int source = -1;
    std::vector<std::vector<int>> out;  // vid -> successors, ascending
    std::vector<std::vector<int>> in;   // vid -> predecessors, ascending
    std::uint64_t edges = 0;
};

inline DynBitset sequence_coords(const LineGraph& g, const SigmaSequence& seq) {
    DynBitset bits(static_cast<std::size_t>(g.coords()->size()));
    for (const auto& t : seq.vertices)
        for (int c : t) bits.set(static_cast<std::size_t>(c));
    return bits;
}

// P1 from a to b, P2 from b to c: the joined sequence a..b..c.
inline SigmaSequence join_paths(const SigmaSequence& p1, const SigmaSequence& p2) {
    SigmaSequence out;
    out.sigma = p1.sigma;
    out.vertices = p1.vertices;
    out.vertices.insert(out.vertices.end(), p2.vertices.begin() + 1, p2.vertices.end());
    return out;
}

// D(x): edge y->z iff P(x,y) and P(y,z) are defined and
// coords(P(x,y)) ∩ coords(P(y,z)) = coords(y) — equivalently their
// concatenation is a sigma-path from x to z. Every emitted edge is
// revalidated.
inline ReachDigraph build_reach_digraph(const LineGraph& g, int x,
                                        const std::map<int, RobustReachResult>& reach) {
    ReachDigraph d;
    d.source = x;
    d.out.assign(static_cast<std::size_t>(g.size()), {});
    d.in.assign(static_cast<std::size_t>(g.size()), {});
    auto x_it = reach.find(x);
    if (x_it == reach.end()) return d;
    for (const auto& [y, pxy] : x_it->second.paths) {
        if (y == x) continue;
        auto y_it = reach.find(y);
        if (y_it == reach.end()) continue;
        DynBitset pxy_coords = sequence_coords(g, pxy);
        DynBitset y_coords = g.coord_bitset(g.tuple(y));
        for (const auto& [z, pyz] : y_it->second.paths) {
            if (z == y) continue;
            DynBitset overlap = pxy_coords;
            overlap &= sequence_coords(g, pyz);
            if (!(overlap == y_coords)) continue;
            SigmaSequence joined = join_paths(pxy, pyz);
            if (!validate_sigma_sequence(g, joined).valid)
                throw std::logic_error("reach digraph edge failed revalidation");
            d.out[static_cast<std::size_t>(y)].push_back(z);
            d.in[static_cast<std::size_t>(z)].push_back(y);
            ++d.edges;
        }
    }
    for (auto& v : d.out) std::sort(v.begin(), v.end());
    for (auto& v : d.in) std::sort(v.begin(), v.end());
    return d;
}

struct SigmaCycleOptions {
    int ell = 0;                  // robust/plain search order bound
    long long t = 1;              // load parameter; cap = floor(n/t)
    std::uint64_t node_budget = 2'000'000;
};

struct SigmaCycleResult {
    std::optional<SigmaSequence> cycle;  // closed, validated
    bool conclusive_none = false;        // proved: no coordinate-disjoint pair
    bool complete = true;                // no budget trips anywhere
    std::uint64_t nodes = 0;
    std::uint64_t pairs_tried = 0;
    long long max_forbidden = 0;         // max |F(y)| observed
    bool indegree_half_met = false;      // paper's n/2 in-degree threshold (informational)
    std::string route;                   // "", "two-cycle", "concatenation"
};

// Executes the cycles-in-expanders proof as a search: robust reach from
// every source, per-target forbidden sets F(y), pruned graphs G(y), return
// paths Q(y,x), digraphs D(x), then the P(x,z) P(z,y) Q(y,x) concatenation.
// An order-2 scan runs first (the concatenation has order >= 3 and would
// miss cycles in products with a part of size 2). The paper's in-degree
// >= n/2 selection rule is applied as a descending ordering, not a filter:
// at this scale the theorem's hypotheses never hold.
inline SigmaCycleResult find_sigma_cycle(const LineGraph& g, const std::vector<int>& sigma,
                                         SigmaCycleOptions options = {}) {
    if (g.size() == 0) throw std::invalid_argument("find_sigma_cycle on empty line graph");
    validate_permutation(sigma, g.r());
    if (options.t < 1) throw std::invalid_argument("t must be >= 1 (paper regime unreachable)");
    SigmaCycleResult result;
    const int n = g.size();

    // Conclusive impossibility: a sigma-cycle needs two coordinate-disjoint
    // vertices.
    bool any_disjoint = false;
    for (int a = 0; a < n && !any_disjoint; ++a)
        for (int b = a + 1; b < n && !any_disjoint; ++b)
            if (tuples_coord_disjoint(g.tuple(a), g.tuple(b))) any_disjoint = true;
    if (!any_disjoint) {
        result.conclusive_none = true;
        return result;
    }

    // Order-2 cycles: mutually sigma-neighbouring disjoint pairs.
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!tuples_coord_disjoint(g.tuple(a), g.tuple(b))) continue;
            ++result.nodes;
            if (is_sigma_neighbour(g, g.tuple(a), g.tuple(b), sigma).is_neighbour &&
                is_sigma_neighbour(g, g.tuple(b), g.tuple(a), sigma).is_neighbour) {
                SigmaSequence cycle;
                cycle.sigma = sigma;
                cycle.vertices = {g.tuple(a), g.tuple(b)};
                cycle.closed = true;
                if (validate_sigma_sequence(g, cycle).valid) {
                    result.cycle = std::move(cycle);
                    result.route = "two-cycle";
                    return result;
                }
            }
        }
    }

    const long long cap = std::max<long long>(1, n / options.t);

    // Robust reach from every source.
    std::map<int, RobustReachResult> reach;
    for (int x = 0; x < n; ++x) {
        RobustReachOptions ropt;
        ropt.ell = options.ell;
        ropt.cap = cap;
        ropt.node_budget = options.node_budget;
        auto rr = robust_reach(g, x, sigma, ropt);
        result.nodes += rr.nodes;
        if (!rr.complete) result.complete = false;
        reach.emplace(x, std::move(rr));
    }

    // F(y): coordinates outside coords(y) on more than `cap` of the paths
    // P(x,y) over sources x. Q(y, .): plain reach inside G - F(y).
    std::map<int, std::map<int, SigmaSequence>> q_paths;  // y -> (x -> Q(y,x))
    for (int y = 0; y < n; ++y) {
        std::map<int, long long> hit_count;
        for (int x = 0; x < n; ++x) {
            auto it = reach.at(x).paths.find(y);
            if (it == reach.at(x).paths.end() || x == y) continue;
            for (const auto& t : it->second.vertices)
                for (int c : t) ++hit_count[c];
        }
        std::vector<int> f;
        DynBitset y_coords = g.coord_bitset(g.tuple(y));
        for (const auto& [c, count] : hit_count)
            if (!y_coords.test(static_cast<std::size_t>(c)) && count > cap) f.push_back(c);
        result.max_forbidden = std::max(result.max_forbidden, static_cast<long long>(f.size()));

        LineGraph gy = remove_coordinates(g, f);
        auto y_in = gy.find(g.tuple(y));
        if (!y_in) continue;  // y itself meets F(y)? cannot: F avoids coords(y)
        SigmaReachOptions ropt;
        ropt.max_order = options.ell;
        ropt.node_budget = options.node_budget;
        auto back = sigma_reachable(gy, *y_in, sigma, ropt);
        result.nodes += back.nodes;
        if (!back.complete) result.complete = false;
        auto& qmap = q_paths[y];
        for (auto& [hvid, path] : back.paths) {
            const int gvid = *g.find(gy.tuple(hvid));  // tuples are stable across removal
            if (gvid != y) qmap.emplace(gvid, std::move(path));
        }
    }

    // Sources in descending robust-reach size; targets by in-degree in D(x).
    std::vector<int> sources(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) sources[static_cast<std::size_t>(x)] = x;
    std::sort(sources.begin(), sources.end(), [&](int a, int b) {
        return std::pair(-(long long)reach.at(a).reached.size(), a) <
               std::pair(-(long long)reach.at(b).reached.size(), b);
    });

    for (int x : sources) {
        ReachDigraph d = build_reach_digraph(g, x, reach);
        std::vector<int> targets;
        for (int y = 0; y < n; ++y)
            if (y != x && !d.in[static_cast<std::size_t>(y)].empty()) targets.push_back(y);
        std::sort(targets.begin(), targets.end(), [&](int a, int b) {
            return std::pair(-(long long)d.in[static_cast<std::size_t>(a)].size(), a) <
                   std::pair(-(long long)d.in[static_cast<std::size_t>(b)].size(), b);
        });
        for (int y : targets) {
            if (2 * static_cast<long long>(d.in[static_cast<std::size_t>(y)].size()) >= n)
                result.indegree_half_met = true;
            auto qy = q_paths.find(y);
            if (qy == q_paths.end()) continue;
            auto qx = qy->second.find(x);
            if (qx == qy->second.end()) continue;  // Q(y,x) undefined
            ++result.pairs_tried;
            const SigmaSequence& q = qx->second;
            DynBitset s = sequence_coords(g, q);
            DynBitset xy = g.coord_bitset(g.tuple(x));
            xy |= g.coord_bitset(g.tuple(y));
            // S = coords(Q(y,x)) minus coords(x) and coords(y)
            for (std::size_t c = 0; c < static_cast<std::size_t>(g.coords()->size()); ++c)
                if (xy.test(c)) s.reset(c);

            for (int z : d.in[static_cast<std::size_t>(y)]) {
                if (z == x) continue;
                const SigmaSequence& pxz = reach.at(x).paths.at(z);
                const SigmaSequence& pzy = reach.at(z).paths.at(y);
                if (sequence_coords(g, pxz).intersects(s)) continue;
                if (sequence_coords(g, pzy).intersects(s)) continue;
                SigmaSequence cycle = join_paths(join_paths(pxz, pzy), q);
                cycle.vertices.pop_back();  // Q ends back at x
                cycle.closed = true;
                if (validate_sigma_sequence(g, cycle).valid) {
                    result.cycle = std::move(cycle);
                    result.route = "concatenation";
                    return result;
                }
            }
        }
    }
    return result;
}

// Expands a closed sigma-sequence of order k into the tight cycle of length
// r*k in the corresponding r-graph: each tuple contributes its coordinates
// in sigma order. The map argument selects the vertex numbering.
inline TightCycleWitness expand_sigma_cycle(const SigmaSequence& seq,
                                            const std::unordered_map<int, int>& coord_to_vertex) {
    TightCycleWitness w;
    for (const auto& t : seq.vertices)
        for (std::size_t j = 0; j < seq.sigma.size(); ++j)
            w.vertices.push_back(coord_to_vertex.at(t[static_cast<std::size_t>(seq.sigma[j])]));
    return w;
}

// Tight-cycle witness in to_hypergraph(G); throws if the input does not
// validate as a sigma-cycle.
inline TightCycleWitness sigma_cycle_to_tight(const LineGraph& g, const SigmaSequence& seq) {
    if (!seq.closed) throw std::invalid_argument("sequence is not closed");
    auto check = validate_sigma_sequence(g, seq);
    if (!check.valid) throw std::invalid_argument("invalid sigma-cycle: " + check.reason);
    return expand_sigma_cycle(seq, export_vertex_map(g));
}

}  // namespace hglab
