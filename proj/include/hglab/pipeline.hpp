#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hglab/cycles.hpp"
#include "hglab/expansion.hpp"
#include "hglab/hypergraph.hpp"
#include "hglab/linegraph.hpp"
#include "hglab/params.hpp"
#include "hglab/sigma.hpp"

namespace hglab {

struct PipelineConfig {
    int max_partition_attempts = 40;
    std::uint64_t node_budget = 2'000'000;    // per sigma-stage search
    std::uint64_t direct_budget = 50'000'000; // fallback detector budget
    bool fallback_direct = true;
    std::optional<Rational> lambda_override;
};

struct PipelineAttempt {
    std::uint64_t seed = 0;
    std::vector<long long> part_sizes;  // by part 1..r
    long long transversal_edges = 0;
    bool below_expectation = false;
    bool skipped = false;               // stopped before the sigma stage
    std::string note;
    long long linegraph_vertices = 0;
    std::optional<ExpanderCertificate> certificate;
    long long expander_vertices = 0;
    bool sigma_found = false;
    bool sigma_conclusive_none = false;
    bool sigma_complete = true;
    std::uint64_t nodes = 0;
};

struct PipelineResult {
    // "structural": all edges share a vertex (or no edges) — conclusively no
    // tight cycle, no partitions needed. "sigma": witness via the line-graph
    // machinery. "direct": witness or conclusive answer from the exact
    // detector fallback.
    std::string route;
    bool found = false;
    bool conclusive = false;
    std::optional<TightCycleWitness> witness;
    bool witness_revalidated = false;
    std::optional<SigmaSequence> sigma_cycle;
    std::vector<PipelineAttempt> attempts;
    std::uint64_t total_nodes = 0;

    // Theorem accounting, informational: e(H') = d N^{r-1} on the best
    // attempt, the paper's d <= 10^9 r^6 (log n)^5 chain.
    Rational partite_density = 0;       // d = e(H') / N^{r-1}
    Rational theorem_bound = 0;         // 10^9 r^6 (log2 n)^5, n = e(H')
    bool within_theorem_bound = false;

    long long expected_transversal = 0;  // ceil(r!/r^r * e(H))
};

namespace detail {

inline long long ceil_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;
    if (q * den != num) ++q;
    return q.convert_to<long long>();
}

inline std::optional<int> common_vertex(const Hypergraph& h) {
    if (h.edge_count() == 0) return std::nullopt;
    std::vector<int> common = h.edge(0);
    for (std::size_t i = 1; i < h.edge_count() && !common.empty(); ++i) {
        std::vector<int> next;
        const Edge& e = h.edge(i);
        std::set_intersection(common.begin(), common.end(), e.begin(), e.end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    if (common.empty()) return std::nullopt;
    return common.front();
}

}  // namespace detail

// Proof-of-the-main-theorem as a runnable pipeline:
//   random_r_partition -> from_partite -> extract_expander(lambda = 1/(2 log n))
//   -> find_sigma_cycle -> expand to a tight cycle of the ORIGINAL hypergraph.
// Partitions are retried (seed+1, ...) when the transversal subgraph falls
// below the r!/r^r expectation or when the sigma stage fails; after the
// retry budget the exact detector runs on H directly (the sigma machinery
// is an existence argument at astronomical scale, not a decision procedure,
// and e.g. K_5^(3) admits no usable 3-partition at all). A vertex common to
// all edges short-circuits: no window of a length >= r+1 cycle could contain
// it, so H is conclusively tight-cycle-free.
inline PipelineResult pipeline_run(const Hypergraph& h, std::uint64_t seed,
                                   const PipelineConfig& config = {}) {
    PipelineResult result;
    const int r = h.r();

    BigInt r_fact = 1, r_pow = 1;
    for (int i = 1; i <= r; ++i) {
        r_fact *= i;
        r_pow *= r;
    }
    result.expected_transversal =
        h.edge_count() == 0 ? 0 : detail::ceil_div(r_fact * h.edge_count(), r_pow);

    if (h.edge_count() == 0 || detail::common_vertex(h)) {
        result.route = "structural";
        result.conclusive = true;
        return result;
    }

    for (int attempt = 0; attempt < config.max_partition_attempts; ++attempt) {
        PipelineAttempt rec;
        rec.seed = seed + static_cast<std::uint64_t>(attempt);
        auto [partition, transversal] = random_r_partition(h, rec.seed);
        rec.part_sizes.assign(static_cast<std::size_t>(r), 0);
        for (int part : partition.part_of) ++rec.part_sizes[static_cast<std::size_t>(part - 1)];
        rec.transversal_edges = static_cast<long long>(transversal.edge_count());
        rec.below_expectation = rec.transversal_edges < result.expected_transversal;
        if (rec.below_expectation || rec.transversal_edges == 0) {
            rec.skipped = true;
            rec.note = "transversal subgraph below r!/r^r expectation";
            result.attempts.push_back(std::move(rec));
            continue;
        }

        LineGraph g = from_partite(transversal, partition);
        rec.linegraph_vertices = g.size();
        if (g.size() < 2) {
            rec.skipped = true;
            rec.note = "line graph too small";
            result.attempts.push_back(std::move(rec));
            continue;
        }

        const Rational dens = density(g);
        ParameterOverrides overrides;
        overrides.lambda = config.lambda_override
                               ? *config.lambda_override
                               : Rational(1) / (2 * log2_dyadic(static_cast<unsigned long long>(g.size())));
        if (*overrides.lambda > 1) overrides.lambda = Rational(1);  // tiny graphs: 2 log n < 1
        ParameterSet params =
            parameter_set(r, g.size(), floor_to_ll(dens), overrides);

        ExpanderCheck check;
        check.lambda = params.lambda;
        check.mode = CheckMode::Auto;
        check.seed = rec.seed;
        ExtractResult extracted = extract_expander(g, check);
        rec.certificate = extracted.certificate;
        rec.expander_vertices = extracted.graph.size();

        if (extracted.graph.size() < 2) {
            rec.skipped = true;
            rec.note = "expander stage left fewer than two vertices";
            result.attempts.push_back(std::move(rec));
            continue;
        }

        SigmaCycleOptions copt;
        copt.ell = params.t_positive() ? static_cast<int>(std::min<long long>(params.ell_floor(),
                                                                              extracted.graph.size()))
                                       : extracted.graph.size();
        copt.t = params.t_positive() ? params.t : 1;
        copt.node_budget = config.node_budget;
        SigmaCycleResult cycle = find_sigma_cycle(extracted.graph, identity_permutation(r), copt);
        rec.nodes = cycle.nodes;
        result.total_nodes += cycle.nodes;
        rec.sigma_conclusive_none = cycle.conclusive_none;
        rec.sigma_complete = cycle.complete;

        if (cycle.cycle) {
            rec.sigma_found = true;
            // Coordinates carry the original vertex ids as labels.
            std::unordered_map<int, int> to_vertex;
            const auto& table = *extracted.graph.coords();
            for (int c = 0; c < table.size(); ++c)
                to_vertex[c] = static_cast<int>(table.label(c));
            TightCycleWitness witness = expand_sigma_cycle(*cycle.cycle, to_vertex);
            result.witness_revalidated = validate_tight_cycle(h, witness);
            result.witness = std::move(witness);
            result.sigma_cycle = std::move(cycle.cycle);
            result.route = "sigma";
            result.found = true;
            result.conclusive = true;
            result.partite_density =
                Rational(rec.transversal_edges) /
                boost::multiprecision::pow(BigInt(h.vertex_count()), static_cast<unsigned>(r - 1));
            result.attempts.push_back(std::move(rec));
            break;
        }
        result.attempts.push_back(std::move(rec));
    }

    if (!result.found) {
        if (config.fallback_direct) {
            SearchLimits limits;
            limits.node_budget = config.direct_budget;
            auto direct = find_tight_cycle(h, limits);
            result.total_nodes += direct.nodes;
            result.route = "direct";
            if (direct.found()) {
                result.found = true;
                result.conclusive = true;
                result.witness_revalidated = validate_tight_cycle(h, *direct.witness);
                result.witness = std::move(direct.witness);
            } else {
                result.conclusive = direct.conclusive();
            }
        } else {
            result.route = "none";
            result.conclusive = false;
        }
    }

    // Informational theorem chain on the instance: n = e(H'), the bound
    // d <= 10^9 r^6 (log n)^5 that a conclusive sigma failure would imply.
    long long best_transversal = 0;
    for (const auto& a : result.attempts)
        best_transversal = std::max(best_transversal, a.transversal_edges);
    if (best_transversal > 1) {
        const Rational log_n = log2_dyadic(static_cast<unsigned long long>(best_transversal));
        Rational r6 = 1;
        for (int i = 0; i < 6; ++i) r6 *= r;
        Rational log5 = 1;
        for (int i = 0; i < 5; ++i) log5 *= log_n;
        result.theorem_bound = Rational(1'000'000'000) * r6 * log5;
        result.partite_density =
            Rational(best_transversal) /
            boost::multiprecision::pow(BigInt(h.vertex_count()), static_cast<unsigned>(r - 1));
        result.within_theorem_bound = result.partite_density <= result.theorem_bound;
    }
    return result;
}

}  // namespace hglab
