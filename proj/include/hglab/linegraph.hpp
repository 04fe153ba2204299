#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hglab/bitset_util.hpp"
#include "hglab/hypergraph.hpp"
#include "hglab/rational.hpp"

namespace hglab {

using Tuple = std::vector<int>;  // coordinate ids, one per part, position = part

struct TupleHash {
    std::size_t operator()(const Tuple& t) const { return EdgeHash{}(t); }
};

// Immutable registry of coordinate labels. Parts are disjoint by
// construction: a coordinate is the pair (part, label), displayed as
// "part:label" with parts numbered from 1. Subgraphs share the table, so
// coordinate ids stay comparable across removals and induced subgraphs.
class CoordTable {
public:
    explicit CoordTable(int r) : r_(r) {
        if (r < 2) throw std::invalid_argument("line graph needs r >= 2");
    }

    int r() const { return r_; }
    int size() const { return static_cast<int>(infos_.size()); }

    int add(int part, long long label) {
        if (part < 0 || part >= r_) throw std::invalid_argument("part out of range");
        auto key = std::pair(part, label);
        if (lookup_.count(key)) throw std::invalid_argument("duplicate coordinate label");
        lookup_[key] = size();
        infos_.push_back({part, label});
        return size() - 1;
    }

    int part(int coord) const { return infos_[static_cast<std::size_t>(coord)].part; }
    long long label(int coord) const { return infos_[static_cast<std::size_t>(coord)].label; }

    std::string name(int coord) const {
        return std::to_string(part(coord) + 1) + ":" + std::to_string(label(coord));
    }

    std::optional<int> find(int part, long long label) const {
        auto it = lookup_.find(std::pair(part, label));
        if (it == lookup_.end()) return std::nullopt;
        return it->second;
    }

    // Parses "part:label" with part in 1..r.
    int parse(const std::string& text) const {
        auto colon = text.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("coordinate '" + text + "' is not of the form part:label");
        int part = std::stoi(text.substr(0, colon)) - 1;
        long long label = std::stoll(text.substr(colon + 1));
        auto id = find(part, label);
        if (!id) throw std::invalid_argument("unknown coordinate label '" + text + "'");
        return *id;
    }

private:
    struct Info {
        int part;
        long long label;
    };
    int r_;
    std::vector<Info> infos_;
    std::map<std::pair<int, long long>, int> lookup_;
};

// Blocks in one direction: the classes of "equal outside coordinate i".
struct Block {
    int direction;            // 0-based
    std::vector<int> members; // vertex ids, ascending
};

// r-line-graph: vertices are r-tuples over disjoint parts A_1..A_r, two
// tuples adjacent iff they differ in exactly one coordinate. Vertices are
// stored lexicographically sorted; ids are positions in that order.
class LineGraph {
public:
    LineGraph(std::shared_ptr<const CoordTable> coords, std::vector<Tuple> tuples)
        : coords_(std::move(coords)) {
        const int r = coords_->r();
        for (const auto& t : tuples) {
            if (static_cast<int>(t.size()) != r) throw std::invalid_argument("tuple of wrong arity");
            for (int pos = 0; pos < r; ++pos) {
                int c = t[static_cast<std::size_t>(pos)];
                if (c < 0 || c >= coords_->size()) throw std::invalid_argument("coordinate id out of range");
                if (coords_->part(c) != pos)
                    throw std::invalid_argument("tuple entry " + coords_->name(c) +
                                                " in wrong position " + std::to_string(pos + 1));
            }
        }
        std::sort(tuples.begin(), tuples.end());
        if (std::adjacent_find(tuples.begin(), tuples.end()) != tuples.end())
            throw std::invalid_argument("duplicate tuple");
        tuples_ = std::move(tuples);
        index_.reserve(tuples_.size() * 2);
        for (std::size_t i = 0; i < tuples_.size(); ++i) index_[tuples_[i]] = static_cast<int>(i);
    }

    int r() const { return coords_->r(); }
    int size() const { return static_cast<int>(tuples_.size()); }
    const std::shared_ptr<const CoordTable>& coords() const { return coords_; }
    const std::vector<Tuple>& tuples() const { return tuples_; }
    const Tuple& tuple(int vid) const { return tuples_[static_cast<std::size_t>(vid)]; }

    std::optional<int> find(const Tuple& t) const {
        auto it = index_.find(t);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const Tuple& t) const { return index_.count(t) > 0; }

    // Coordinate ids present in some tuple, ascending.
    std::vector<int> used_coords() const {
        std::vector<bool> seen(static_cast<std::size_t>(coords_->size()), false);
        for (const auto& t : tuples_)
            for (int c : t) seen[static_cast<std::size_t>(c)] = true;
        std::vector<int> out;
        for (int c = 0; c < coords_->size(); ++c)
            if (seen[static_cast<std::size_t>(c)]) out.push_back(c);
        return out;
    }

    DynBitset coord_bitset(const Tuple& t) const {
        DynBitset bits(static_cast<std::size_t>(coords_->size()));
        for (int c : t) bits.set(static_cast<std::size_t>(c));
        return bits;
    }

    // i-blocks of one direction; they partition the vertex set.
    std::vector<Block> blocks(int direction) const {
        std::unordered_map<Tuple, std::vector<int>, TupleHash> classes;
        for (std::size_t vid = 0; vid < tuples_.size(); ++vid) {
            Tuple key = tuples_[vid];
            key[static_cast<std::size_t>(direction)] = -1;
            classes[key].push_back(static_cast<int>(vid));
        }
        std::vector<Block> out;
        out.reserve(classes.size());
        for (auto& [key, members] : classes) out.push_back({direction, std::move(members)});
        std::sort(out.begin(), out.end(),
                  [](const Block& a, const Block& b) { return a.members < b.members; });
        return out;
    }

    // p(G): blocks counted per direction, as (direction, class) pairs.
    long long block_count() const {
        long long p = 0;
        for (int i = 0; i < r(); ++i) p += static_cast<long long>(blocks(i).size());
        return p;
    }

    // N^{(i)}(x): vertices differing from x in coordinate `direction` only.
    std::vector<int> direction_neighbours(int vid, int direction) const {
        std::vector<int> out;
        for (const Block& b : blocks(direction)) {
            if (std::binary_search(b.members.begin(), b.members.end(), vid)) {
                for (int m : b.members)
                    if (m != vid) out.push_back(m);
                break;
            }
        }
        return out;
    }

    LineGraph induced(std::vector<int> vids) const {
        std::sort(vids.begin(), vids.end());
        vids.erase(std::unique(vids.begin(), vids.end()), vids.end());
        std::vector<Tuple> kept;
        kept.reserve(vids.size());
        for (int v : vids) kept.push_back(tuples_[static_cast<std::size_t>(v)]);
        return LineGraph(coords_, std::move(kept));
    }

private:
    std::shared_ptr<const CoordTable> coords_;
    std::vector<Tuple> tuples_;
    std::unordered_map<Tuple, int, TupleHash> index_;
};

// Average block size: dens(G) = sum_B |B| / p(G) = r|G| / p(G), exact.
inline Rational density(const LineGraph& g) {
    if (g.size() == 0) throw std::invalid_argument("density of empty line graph");
    return Rational(BigInt(g.r()) * g.size(), BigInt(g.block_count()));
}

// Minimum over vertices and directions of |N^{(i)}(x)| + 1, i.e. the
// smallest block size.
inline int min_degree(const LineGraph& g) {
    if (g.size() == 0) throw std::invalid_argument("min degree of empty line graph");
    std::size_t best = static_cast<std::size_t>(g.size());
    for (int i = 0; i < g.r(); ++i)
        for (const Block& b : g.blocks(i)) best = std::min(best, b.members.size());
    return static_cast<int>(best);
}

// Builds the line graph of an r-partite hypergraph: one vertex per edge,
// coordinate i = the edge's vertex in part i+1, labelled by the original
// vertex id.
inline LineGraph from_partite(const Hypergraph& h, const Partition& p) {
    const int r = h.r();
    if (p.r != r) throw std::invalid_argument("partition arity mismatch");
    auto table = std::make_shared<CoordTable>(r);
    std::vector<bool> registered(static_cast<std::size_t>(h.vertex_count()), false);
    std::vector<int> coord_of(static_cast<std::size_t>(h.vertex_count()), -1);
    std::vector<Tuple> tuples;
    tuples.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
        Tuple t(static_cast<std::size_t>(r), -1);
        for (int v : e) {
            const int part = p.part(v) - 1;
            if (t[static_cast<std::size_t>(part)] != -1) {
                std::string desc;
                for (int w : e) desc += (desc.empty() ? "" : " ") + std::to_string(w);
                throw std::invalid_argument("non-transversal edge {" + desc + "}");
            }
            if (!registered[static_cast<std::size_t>(v)]) {
                coord_of[static_cast<std::size_t>(v)] = table->add(part, v);
                registered[static_cast<std::size_t>(v)] = true;
            }
            t[static_cast<std::size_t>(part)] = coord_of[static_cast<std::size_t>(v)];
        }
        tuples.push_back(std::move(t));
    }
    return LineGraph(std::static_pointer_cast<const CoordTable>(table), std::move(tuples));
}

// Dense re-indexing of used coordinates for export. Ordered by
// (label, part): from_partite labels coordinates with source vertex ids, so
// this ordering makes to_hypergraph(from_partite(H, P)) reproduce H exactly
// whenever H uses all its vertices.
inline std::vector<int> export_order(const LineGraph& g) {
    std::vector<int> used = g.used_coords();
    std::sort(used.begin(), used.end(), [&](int a, int b) {
        const auto& t = *g.coords();
        return std::pair(t.label(a), t.part(a)) < std::pair(t.label(b), t.part(b));
    });
    return used;
}

// Coordinate id -> dense exported vertex id.
inline std::unordered_map<int, int> export_vertex_map(const LineGraph& g) {
    std::unordered_map<int, int> map;
    auto order = export_order(g);
    for (std::size_t i = 0; i < order.size(); ++i) map[order[i]] = static_cast<int>(i);
    return map;
}

// The r-graph corresponding to G: vertices = used coordinates (densely
// re-indexed), one edge per tuple.
inline Hypergraph to_hypergraph(const LineGraph& g) {
    auto vmap = export_vertex_map(g);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.size()));
    for (const auto& t : g.tuples()) {
        Edge e;
        e.reserve(t.size());
        for (int c : t) e.push_back(vmap.at(c));
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    return Hypergraph(g.r(), static_cast<int>(vmap.size()), std::move(edges));
}

// Removes every tuple meeting a coordinate in `remove`; the coordinate table
// is shared so ids remain stable.
inline LineGraph remove_coordinates(const LineGraph& g, const std::vector<int>& remove) {
    std::vector<bool> banned(static_cast<std::size_t>(g.coords()->size()), false);
    for (int c : remove) {
        if (c < 0 || c >= g.coords()->size())
            throw std::invalid_argument("unknown coordinate id " + std::to_string(c));
        banned[static_cast<std::size_t>(c)] = true;
    }
    std::vector<Tuple> kept;
    for (const auto& t : g.tuples()) {
        bool hit = false;
        for (int c : t)
            if (banned[static_cast<std::size_t>(c)]) {
                hit = true;
                break;
            }
        if (!hit) kept.push_back(t);
    }
    return LineGraph(g.coords(), std::move(kept));
}

// Complete product line graph with the given part sizes (labels 0..size-1
// per part). The workhorse fixture: every block is a full line.
inline LineGraph make_complete_product(const std::vector<int>& part_sizes) {
    const int r = static_cast<int>(part_sizes.size());
    auto table = std::make_shared<CoordTable>(r);
    std::vector<std::vector<int>> ids(static_cast<std::size_t>(r));
    for (int part = 0; part < r; ++part)
        for (int k = 0; k < part_sizes[static_cast<std::size_t>(part)]; ++k)
            ids[static_cast<std::size_t>(part)].push_back(table->add(part, k));
    std::vector<Tuple> tuples;
    Tuple cur(static_cast<std::size_t>(r));
    std::vector<int> pos(static_cast<std::size_t>(r), 0);
    if (std::all_of(part_sizes.begin(), part_sizes.end(), [](int s) { return s > 0; })) {
        while (true) {
            for (int i = 0; i < r; ++i) cur[static_cast<std::size_t>(i)] = ids[static_cast<std::size_t>(i)][static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])];
            tuples.push_back(cur);
            int i = r - 1;
            while (i >= 0 && pos[static_cast<std::size_t>(i)] + 1 == part_sizes[static_cast<std::size_t>(i)]) {
                pos[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++pos[static_cast<std::size_t>(i)];
        }
    }
    return LineGraph(std::static_pointer_cast<const CoordTable>(table), std::move(tuples));
}

// Smallest number of distinct labels used in any single part; an upper bound
// on the order of any sigma-path (pairwise disjoint coordinate sets need one
// fresh label per part per tuple).
inline int min_part_usage(const LineGraph& g) {
    std::vector<std::vector<long long>> labels(static_cast<std::size_t>(g.r()));
    for (int c : g.used_coords())
        labels[static_cast<std::size_t>(g.coords()->part(c))].push_back(g.coords()->label(c));
    int best = g.size() == 0 ? 0 : g.size();
    for (const auto& l : labels) best = std::min<int>(best, static_cast<int>(l.size()));
    return best;
}

}  // namespace hglab
