#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hglab/cycles.hpp"
#include "hglab/hypergraph.hpp"
#include "hglab/hypergraph_io.hpp"

namespace hglab {

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

// All r-subsets of {0..n-1} in colex order.
inline std::vector<Edge> edge_slots(int r, int n) {
    std::vector<Edge> slots;
    if (n < r) return slots;
    std::vector<int> pick(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        slots.emplace_back(pick.begin(), pick.end());
        int i = 0;
        while (i + 1 < r && pick[static_cast<std::size_t>(i)] + 1 == pick[static_cast<std::size_t>(i) + 1]) {
            pick[static_cast<std::size_t>(i)] = i;
            ++i;
        }
        if (i == r - 1 && pick[static_cast<std::size_t>(i)] + 1 == n) break;
        ++pick[static_cast<std::size_t>(i)];
    }
    return slots;
}

enum class ExStrategy { Auto, Exhaustive, Backtracking };

inline const char* strategy_name(ExStrategy s) {
    switch (s) {
        case ExStrategy::Exhaustive: return "exhaustive";
        case ExStrategy::Backtracking: return "backtracking";
        default: return "auto";
    }
}

struct ExtremalResult {
    long long value = 0;
    std::optional<Hypergraph> witness;  // one maximizer
    bool conclusive = true;
    std::uint64_t nodes = 0;
    std::string strategy;
};

// 20 edge slots = 2^20 subsets; beyond that only backtracking is admitted.
inline constexpr long long kExhaustiveSlotCap = 20;

namespace detail {

inline ExtremalResult brute_force_exhaustive(int r, int n, std::uint64_t budget) {
    ExtremalResult result;
    result.strategy = "exhaustive";
    const auto slots = edge_slots(r, n);
    const int m = static_cast<int>(slots.size());
    long long best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        const int count = std::popcount(mask);
        if (count <= best) continue;
        ++result.nodes;
        if (result.nodes > budget) {
            result.conclusive = false;
            break;
        }
        std::vector<Edge> edges;
        for (int i = 0; i < m; ++i)
            if (mask & (std::uint64_t{1} << i)) edges.push_back(slots[static_cast<std::size_t>(i)]);
        Hypergraph h(r, n, std::move(edges));
        auto cycle = find_tight_cycle(h);
        if (cycle.status == SearchStatus::ExhaustedNone) {
            best = count;
            result.witness = std::move(h);
        } else if (cycle.status == SearchStatus::BudgetExceeded) {
            result.conclusive = false;
        }
    }
    result.value = std::max<long long>(best, 0);
    if (!result.witness) result.witness = Hypergraph(r, n, {});
    return result;
}

struct BacktrackState {
    int r;
    int n;
    const std::vector<Edge>& slots;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool tripped = false;
    std::vector<Edge> current;
    long long best = -1;
    std::optional<Hypergraph> witness;

    void dfs(std::size_t idx) {
        if (nodes++ >= budget) {
            tripped = true;
            return;
        }
        if (static_cast<long long>(current.size()) > best) {
            best = static_cast<long long>(current.size());
            witness = Hypergraph(r, n, current);
        }
        if (idx == slots.size()) return;
        // Bound: even taking every remaining slot cannot beat the best.
        if (static_cast<long long>(current.size() + (slots.size() - idx)) <= best) return;

        // Include slots[idx] if it does not close a tight cycle. The graph so
        // far is cycle-free, so any new cycle passes through the new edge.
        current.push_back(slots[idx]);
        Hypergraph h(r, n, current);
        auto through = find_tight_cycle_through(h, slots[idx], {budget - std::min(budget, nodes)});
        nodes += through.nodes;
        if (through.status == SearchStatus::BudgetExceeded) tripped = true;
        if (through.status == SearchStatus::ExhaustedNone && !tripped) {
            dfs(idx + 1);
        }
        current.pop_back();
        if (tripped) return;

        dfs(idx + 1);
    }
};

inline ExtremalResult brute_force_backtracking(int r, int n, std::uint64_t budget) {
    ExtremalResult result;
    result.strategy = "backtracking";
    const auto slots = edge_slots(r, n);
    detail::BacktrackState state{r, n, slots, budget};
    state.dfs(0);
    result.value = std::max<long long>(state.best, 0);
    result.witness = state.witness ? state.witness : Hypergraph(r, n, {});
    result.conclusive = !state.tripped;
    result.nodes = state.nodes;
    return result;
}

}  // namespace detail

// Exact maximum edge count of a tight-cycle-free r-graph on n vertices, with
// one maximizer. Exhaustive strategy enumerates all edge subsets (complete
// for C(n,r) <= 20); backtracking explores edge-inclusion order with
// through-edge cycle pruning and is exact when it completes within budget,
// otherwise a lower bound flagged inconclusive.
inline ExtremalResult brute_force_ex(int r, int n, ExStrategy strategy = ExStrategy::Auto,
                                     std::uint64_t budget = 500'000'000) {
    if (r < 2) throw std::invalid_argument("r must be >= 2");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    const long long m = binomial(n, r);
    if (strategy == ExStrategy::Auto)
        strategy = m <= kExhaustiveSlotCap ? ExStrategy::Exhaustive : ExStrategy::Backtracking;
    if (strategy == ExStrategy::Exhaustive && m > kExhaustiveSlotCap)
        throw std::invalid_argument("exhaustive strategy capped at " +
                                    std::to_string(kExhaustiveSlotCap) + " edge slots");
    return strategy == ExStrategy::Exhaustive ? detail::brute_force_exhaustive(r, n, budget)
                                              : detail::brute_force_backtracking(r, n, budget);
}

// Opt-in result cache keyed by (r, n, strategy, budget), rooted at
// HG_CACHE_DIR. Unset env: no caching.
inline std::optional<std::string> cache_dir() {
    const char* dir = std::getenv("HG_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    return std::string(dir);
}

inline std::string cache_key(int r, int n, ExStrategy strategy, std::uint64_t budget) {
    std::ostringstream key;
    key << "ex_r" << r << "_n" << n << "_" << strategy_name(strategy) << "_b" << budget << ".txt";
    return key.str();
}

inline ExtremalResult brute_force_ex_cached(int r, int n, ExStrategy strategy = ExStrategy::Auto,
                                            std::uint64_t budget = 500'000'000) {
    auto dir = cache_dir();
    if (!dir) return brute_force_ex(r, n, strategy, budget);
    namespace fs = std::filesystem;
    fs::create_directories(*dir);
    const fs::path path = fs::path(*dir) / cache_key(r, n, strategy, budget);
    if (fs::exists(path)) {
        std::istringstream in(read_file(path.string()));
        std::string header;
        std::getline(in, header);
        std::istringstream hs(header);
        ExtremalResult cached;
        int conclusive = 0;
        hs >> cached.value >> conclusive >> cached.nodes >> cached.strategy;
        cached.conclusive = conclusive != 0;
        std::ostringstream rest;
        rest << in.rdbuf();
        cached.witness = load_hypergraph(rest.str());
        return cached;
    }
    ExtremalResult result = brute_force_ex(r, n, strategy, budget);
    std::ostringstream out;
    out << result.value << ' ' << (result.conclusive ? 1 : 0) << ' ' << result.nodes << ' '
        << result.strategy << '\n'
        << serialize_hypergraph(*result.witness);
    write_file(path.string(), out.str());
    return result;
}

}  // namespace hglab
