#pragma once

// Shared fixtures and the independent oracles the tests check against. The
// oracles are deliberately written as direct transcriptions of definitions
// (plain enumeration, no pruning, no shared code with the library search
// paths).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hglab/expansion.hpp"
#include "hglab/extremal.hpp"
#include "hglab/hypergraph.hpp"
#include "hglab/linegraph.hpp"
#include "hglab/rng.hpp"
#include "hglab/simple_graph.hpp"

namespace testutil {

// Pascal's triangle; independent of hglab::binomial.
inline long long binom_pascal(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::vector<long long>> row(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        row[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            row[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                row[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    return row[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

inline hglab::Hypergraph complete_hypergraph(int r, int n) {
    std::vector<hglab::Edge> edges;
    std::vector<int> pick(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        edges.emplace_back(pick.begin(), pick.end());
        int i = r - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - 1 - (r - 1 - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return hglab::Hypergraph(r, n, std::move(edges));
}

inline hglab::Hypergraph random_hypergraph(int r, int n, double edge_prob, std::uint64_t seed) {
    hglab::SplitMix64 rng(hglab::derive_stream(seed, 0x9987));
    auto all = complete_hypergraph(r, n);
    std::vector<hglab::Edge> edges;
    for (const auto& e : all.edges())
        if (rng.next_unit() < edge_prob) edges.push_back(e);
    return hglab::Hypergraph(r, n, std::move(edges));
}

inline hglab::SimpleGraph random_simple_graph(int n, double edge_prob, std::uint64_t seed) {
    hglab::SplitMix64 rng(hglab::derive_stream(seed, 0x517e));
    hglab::SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_unit() < edge_prob) g.add_edge(i, j);
    g.finalize();
    return g;
}

// Random sub-product line graph: complete product on the given part sizes,
// each tuple kept with probability keep_prob.
inline hglab::LineGraph random_line_graph(const std::vector<int>& part_sizes, double keep_prob,
                                          std::uint64_t seed) {
    hglab::SplitMix64 rng(hglab::derive_stream(seed, 0x11f3));
    auto full = hglab::make_complete_product(part_sizes);
    std::vector<hglab::Tuple> kept;
    for (const auto& t : full.tuples())
        if (rng.next_unit() < keep_prob) kept.push_back(t);
    return hglab::LineGraph(full.coords(), std::move(kept));
}

// ---------------------------------------------------------------------------
// Tight-cycle oracle: enumerate vertex sequences directly.
// ---------------------------------------------------------------------------

inline bool oracle_sequence_is_tight_cycle(const hglab::Hypergraph& h,
                                           const std::vector<int>& seq) {
    const int r = h.r();
    const int len = static_cast<int>(seq.size());
    for (int i = 0; i < len; ++i) {
        std::vector<int> window;
        for (int j = 0; j < r; ++j) window.push_back(seq[static_cast<std::size_t>((i + j) % len)]);
        std::sort(window.begin(), window.end());
        if (!h.has_edge(window)) return false;
    }
    return true;
}

namespace detail {
inline bool oracle_extend(const hglab::Hypergraph& h, std::vector<int>& seq,
                          std::vector<bool>& used, int target_len) {
    if (static_cast<int>(seq.size()) == target_len)
        return oracle_sequence_is_tight_cycle(h, seq);
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        used[static_cast<std::size_t>(v)] = true;
        seq.push_back(v);
        if (oracle_extend(h, seq, used, target_len)) return true;
        seq.pop_back();
        used[static_cast<std::size_t>(v)] = false;
    }
    return false;
}
}  // namespace detail

// True iff H contains a tight cycle: tries every vertex sequence of every
// admissible length. Exponential; fine for n <= 8.
inline bool oracle_has_tight_cycle(const hglab::Hypergraph& h) {
    for (int len = h.r() + 1; len <= h.vertex_count(); ++len) {
        std::vector<int> seq;
        std::vector<bool> used(static_cast<std::size_t>(h.vertex_count()), false);
        if (detail::oracle_extend(h, seq, used, len)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Extremal oracle: all tight cycles as edge-subset masks, then a scan over
// all 2^m hypergraphs. Independent of the library detector and strategies.
// ---------------------------------------------------------------------------

inline std::vector<std::uint64_t> oracle_cycle_masks(int r, int n,
                                                     const std::vector<hglab::Edge>& slots) {
    std::map<hglab::Edge, int> slot_index;
    for (std::size_t i = 0; i < slots.size(); ++i) slot_index[slots[i]] = static_cast<int>(i);
    std::set<std::uint64_t> masks;
    std::vector<int> seq;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    // Enumerate all vertex sequences of each length; collect window masks of
    // the valid cycles. Rotations/reflections coincide as masks.
    auto rec = [&](auto&& self, int target_len) -> void {
        if (static_cast<int>(seq.size()) == target_len) {
            std::uint64_t mask = 0;
            for (int i = 0; i < target_len; ++i) {
                std::vector<int> window;
                for (int j = 0; j < r; ++j)
                    window.push_back(seq[static_cast<std::size_t>((i + j) % target_len)]);
                std::sort(window.begin(), window.end());
                auto it = slot_index.find(window);
                if (it == slot_index.end()) return;  // repeated vertex in window: not a valid cycle
                mask |= std::uint64_t{1} << it->second;
            }
            masks.insert(mask);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            seq.push_back(v);
            self(self, target_len);
            seq.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    for (int len = r + 1; len <= n; ++len) rec(rec, len);
    return {masks.begin(), masks.end()};
}

// Exact ex_r(n, C) by scanning all edge subsets against the cycle masks.
inline long long oracle_ex(int r, int n) {
    const auto slots = hglab::edge_slots(r, n);
    const auto masks = oracle_cycle_masks(r, n, slots);
    const int m = static_cast<int>(slots.size());
    long long best = 0;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << m); ++sub) {
        bool free_of_cycles = true;
        for (std::uint64_t cm : masks) {
            if ((sub & cm) == cm) {
                free_of_cycles = false;
                break;
            }
        }
        if (free_of_cycles) best = std::max<long long>(best, std::popcount(sub));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Expansion oracle: literal all-subsets scan with a recount of N(X).
// ---------------------------------------------------------------------------

inline std::optional<std::vector<int>> oracle_expansion_violation(const hglab::SimpleGraph& g,
                                                                  const hglab::Rational& lambda) {
    const int n = g.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> x;
        for (int v = 0; v < n; ++v)
            if (mask & (std::uint64_t{1} << v)) x.push_back(v);
        if (2 * static_cast<int>(x.size()) > n) continue;
        std::set<int> nbhd;
        for (int v : x)
            for (int w : g.neighbours(v)) nbhd.insert(w);
        for (int v : x) nbhd.erase(v);
        if (hglab::Rational(static_cast<long long>(nbhd.size())) <
            lambda * hglab::Rational(static_cast<long long>(x.size())))
            return x;
    }
    return std::nullopt;
}

}  // namespace testutil
