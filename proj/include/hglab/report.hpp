#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hglab/expansion.hpp"
#include "hglab/extremal.hpp"
#include "hglab/linegraph.hpp"
#include "hglab/params.hpp"
#include "hglab/pipeline.hpp"
#include "hglab/sigma.hpp"

namespace hglab {

using Json = nlohmann::json;

// FNV-1a; stable digest for report input blocks.
inline std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

inline Json rational_json(const Rational& q) { return rational_to_string(q); }

// Reports deliberately carry no wall-clock fields: identical argv + seed
// must be byte-identical.
inline Json report_envelope(const std::string& command, std::uint64_t seed, int workers) {
    Json j;
    j["schema"] = "hglab.report.v1";
    j["command"] = command;
    j["seed"] = seed;
    j["workers"] = workers;
    j["inputs"] = Json::object();
    j["counters"] = Json::object();
    return j;
}

inline Json witness_json(const TightCycleWitness& w) {
    return Json{{"type", "tight_cycle"}, {"vertices", w.vertices}, {"length", w.length()}};
}

inline Json witness_json(const Hypergraph& h, const BergeWitness& w) {
    Json edges = Json::array();
    for (auto ei : w.edge_indices) edges.push_back(h.edge(ei));
    return Json{{"type", "berge_cycle"},
                {"vertices", w.vertices},
                {"edges", edges},
                {"length", w.length()}};
}

inline Json witness_json(const Hypergraph& h, const LooseWitness& w) {
    Json edges = Json::array();
    for (auto ei : w.edge_indices) edges.push_back(h.edge(ei));
    return Json{{"type", "loose_cycle"},
                {"edges", edges},
                {"connectors", w.connectors},
                {"length", w.length()}};
}

inline Json tuple_json(const LineGraph& g, const Tuple& t) {
    Json coords = Json::array();
    for (int c : t) coords.push_back(g.coords()->name(c));
    return coords;
}

// {sigma: [..], closed: bool, vertices: [[coord,...],...]} with sigma 1-based.
inline Json sigma_sequence_json(const LineGraph& g, const SigmaSequence& seq) {
    Json sigma = Json::array();
    for (int s : seq.sigma) sigma.push_back(s + 1);
    Json vertices = Json::array();
    for (const auto& t : seq.vertices) vertices.push_back(tuple_json(g, t));
    return Json{{"sigma", sigma}, {"closed", seq.closed}, {"vertices", vertices}};
}

inline Json violation_json(const ViolationWitness& w) {
    return Json{{"set", w.vertices},
                {"set_size", w.vertices.size()},
                {"neighbourhood_size", w.neighbourhood_size}};
}

// Certificate: {lambda, mode, witness?, density, min_degree, vertices}.
inline Json certificate_json(const ExpanderCertificate& cert) {
    return Json{{"lambda", rational_json(cert.lambda)},
                {"mode", cert.mode},
                {"level", cert.level},
                {"density", rational_json(cert.density)},
                {"min_degree", cert.min_deg},
                {"vertices", cert.vertices},
                {"steps", cert.steps},
                {"lambda_hypothesis_ok", cert.lambda_hypothesis_ok},
                {"target_density", rational_json(cert.target_density)},
                {"density_guarantee_ok", cert.density_guarantee_ok},
                {"target_min_degree", rational_json(cert.target_min_degree)},
                {"min_degree_guarantee_ok", cert.min_degree_guarantee_ok}};
}

inline Json parameter_set_json(const ParameterSet& p) {
    return Json{{"r", p.r},
                {"n", p.n},
                {"d", p.d},
                {"lambda", rational_json(p.lambda)},
                {"epsilon", rational_json(p.epsilon)},
                {"log2_n", rational_json(p.log2_n)},
                {"ell", rational_json(p.ell)},
                {"ell_floor", p.ell_floor()},
                {"t", p.t},
                {"t_positive", p.t_positive()},
                {"u", rational_json(p.u)},
                {"u_floor", p.u_floor()},
                {"d_threshold", rational_json(p.d_threshold)},
                {"theorem_hypothesis_ok", p.theorem_hypothesis_ok()},
                {"robust_hypothesis_ok", p.robust_hypothesis_ok()},
                {"overrides",
                 Json{{"lambda", p.lambda_overridden},
                      {"epsilon", p.epsilon_overridden},
                      {"ell", p.ell_overridden},
                      {"t", p.t_overridden}}}};
}

inline Json pipeline_json(const Hypergraph& h, const PipelineResult& res) {
    Json attempts = Json::array();
    for (const auto& a : res.attempts) {
        Json ja{{"seed", a.seed},
                {"part_sizes", a.part_sizes},
                {"transversal_edges", a.transversal_edges},
                {"below_expectation", a.below_expectation},
                {"skipped", a.skipped},
                {"linegraph_vertices", a.linegraph_vertices},
                {"expander_vertices", a.expander_vertices},
                {"sigma_found", a.sigma_found},
                {"sigma_conclusive_none", a.sigma_conclusive_none},
                {"sigma_complete", a.sigma_complete},
                {"nodes", a.nodes}};
        if (!a.note.empty()) ja["note"] = a.note;
        if (a.certificate) ja["expander_certificate"] = certificate_json(*a.certificate);
        attempts.push_back(std::move(ja));
    }
    Json j{{"route", res.route},
           {"found", res.found},
           {"conclusive", res.conclusive},
           {"attempts", attempts},
           {"expected_transversal", res.expected_transversal},
           {"total_nodes", res.total_nodes}};
    if (res.witness) {
        j["witness"] = witness_json(*res.witness);
        j["witness_revalidated"] = res.witness_revalidated;
    }
    if (res.partite_density != 0) {
        j["partite_density"] = rational_json(res.partite_density);
        j["theorem_bound"] = rational_json(res.theorem_bound);
        j["within_theorem_bound"] = res.within_theorem_bound;
    }
    (void)h;
    return j;
}

inline Json extremal_json(const ExtremalResult& res) {
    Json j{{"value", res.value},
           {"strategy", res.strategy},
           {"conclusive", res.conclusive},
           {"nodes", res.nodes}};
    if (res.witness) {
        Json edges = Json::array();
        for (const auto& e : res.witness->edges()) edges.push_back(e);
        j["witness"] = Json{{"r", res.witness->r()},
                            {"vertex_count", res.witness->vertex_count()},
                            {"edges", edges}};
    }
    return j;
}

}  // namespace hglab
