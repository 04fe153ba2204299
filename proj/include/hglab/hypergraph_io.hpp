#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hglab/hypergraph.hpp"

namespace hglab {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

// Strips '#' comments, returns the whitespace-split tokens of each
// meaningful line together with its 1-based line number.
inline std::vector<std::pair<int, std::vector<std::string>>> tokenize_lines(const std::string& text) {
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) out.emplace_back(lineno, std::move(tokens));
    }
    return out;
}

inline long long parse_int(const std::string& tok, int lineno, const char* what) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(lineno, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(lineno, std::string("expected ") + what + ", got '" + tok + "'");
    return v;
}

}  // namespace detail

// File format: header "r N m", then m lines of r vertex ids (0-based).
// '#' starts a comment.
inline Hypergraph load_hypergraph(const std::string& text) {
    auto lines = detail::tokenize_lines(text);
    if (lines.empty()) throw ParseError(1, "missing header 'r N m'");
    const auto& [hline, htok] = lines.front();
    if (htok.size() != 3) throw ParseError(hline, "malformed header, expected 'r N m'");
    const long long r = detail::parse_int(htok[0], hline, "uniformity r");
    const long long n = detail::parse_int(htok[1], hline, "vertex count N");
    const long long m = detail::parse_int(htok[2], hline, "edge count m");
    if (r < 2) throw ParseError(hline, "uniformity must be >= 2");
    if (n < 0) throw ParseError(hline, "vertex count must be >= 0");
    if (m < 0) throw ParseError(hline, "edge count must be >= 0");

    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError(lines.back().first,
                         "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [lineno, toks] = lines[i];
        if (static_cast<long long>(toks.size()) != r)
            throw ParseError(lineno, "edge of wrong arity: expected " + std::to_string(r) +
                                         " vertices, got " + std::to_string(toks.size()));
        Edge e;
        for (const auto& t : toks) {
            long long v = detail::parse_int(t, lineno, "vertex id");
            if (v < 0 || v >= n)
                throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range [0," +
                                             std::to_string(n) + ")");
            e.push_back(static_cast<int>(v));
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw ParseError(lineno, "repeated vertex in edge");
        if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
        edges.push_back(std::move(e));
    }
    return Hypergraph(static_cast<int>(r), static_cast<int>(n), std::move(edges));
}

// Canonical form: sorted vertices within edges, edges lexicographic.
inline std::string serialize_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << h.r() << ' ' << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

// Partition file: one "vertex part" line per vertex, parts in 1..r.
inline Partition load_partition(const std::string& text, int r, int vertex_count) {
    auto lines = detail::tokenize_lines(text);
    Partition p;
    p.r = r;
    p.part_of.assign(static_cast<std::size_t>(vertex_count), 0);
    std::vector<bool> assigned(static_cast<std::size_t>(vertex_count), false);
    for (const auto& [lineno, toks] : lines) {
        if (toks.size() != 2) throw ParseError(lineno, "expected 'vertex part'");
        long long v = detail::parse_int(toks[0], lineno, "vertex id");
        long long part = detail::parse_int(toks[1], lineno, "part index");
        if (v < 0 || v >= vertex_count)
            throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
        if (part < 1 || part > r)
            throw ParseError(lineno, "part " + std::to_string(part) + " out of range [1," +
                                         std::to_string(r) + "]");
        if (assigned[static_cast<std::size_t>(v)])
            throw ParseError(lineno, "vertex " + std::to_string(v) + " assigned twice");
        assigned[static_cast<std::size_t>(v)] = true;
        p.part_of[static_cast<std::size_t>(v)] = static_cast<int>(part);
    }
    for (int v = 0; v < vertex_count; ++v)
        if (!assigned[static_cast<std::size_t>(v)])
            throw ParseError(lines.empty() ? 1 : lines.back().first,
                             "vertex " + std::to_string(v) + " has no part");
    return p;
}

inline std::string serialize_partition(const Partition& p) {
    std::ostringstream out;
    for (std::size_t v = 0; v < p.part_of.size(); ++v) out << v << ' ' << p.part_of[v] << '\n';
    return out.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace hglab
