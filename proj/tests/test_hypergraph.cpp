#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "hglab/hypergraph.hpp"
#include "hglab/hypergraph_io.hpp"
#include "helpers.hpp"

using namespace hglab;

TEST_CASE("load_hypergraph parses the basic example", "[hypergraph]") {
    Hypergraph h = load_hypergraph("3 4 1\n0 1 2\n");
    REQUIRE(h.r() == 3);
    REQUIRE(h.vertex_count() == 4);
    REQUIRE(h.edge_count() == 1);
    REQUIRE(h.edge(0) == Edge{0, 1, 2});
}

TEST_CASE("load_hypergraph rejects malformed input with line numbers", "[hypergraph]") {
    auto line_of = [](const auto& fn) {
        try {
            fn();
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    // repeated vertex in an edge
    REQUIRE(line_of([] { load_hypergraph("3 4 1\n0 1 1\n"); }) == 2);
    // malformed header
    REQUIRE(line_of([] { load_hypergraph("3 4\n"); }) == 1);
    REQUIRE(line_of([] { load_hypergraph("x 4 0\n"); }) == 1);
    // wrong arity
    REQUIRE(line_of([] { load_hypergraph("3 4 1\n0 1\n"); }) == 2);
    // vertex out of range
    REQUIRE(line_of([] { load_hypergraph("3 4 1\n0 1 7\n"); }) == 2);
    // duplicate edge (set equality, not line equality)
    REQUIRE(line_of([] { load_hypergraph("3 4 2\n0 1 2\n2 1 0\n"); }) == 3);
    // edge count mismatch
    REQUIRE(line_of([] { load_hypergraph("3 4 2\n0 1 2\n"); }) == 2);
}

TEST_CASE("comments and canonical serialization", "[hypergraph]") {
    const std::string text = "# header comment\n3 5 2\n2 1 0 # trailing\n\n0 3 4\n";
    Hypergraph h = load_hypergraph(text);
    REQUIRE(serialize_hypergraph(h) == "3 5 2\n0 1 2\n0 3 4\n");
    // round-trip is the identity on canonical form
    REQUIRE(serialize_hypergraph(load_hypergraph(serialize_hypergraph(h))) ==
            serialize_hypergraph(h));
}

TEST_CASE("K_5^(3) enumeration round-trips", "[hypergraph]") {
    // oracle: enumerate the C(5,3) = 10 triples directly
    std::string text = "3 5 10\n";
    int count = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c) {
                text += std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) + "\n";
                ++count;
            }
    REQUIRE(count == 10);
    Hypergraph h = load_hypergraph(text);
    REQUIRE(h.edge_count() == 10);
    REQUIRE(serialize_hypergraph(h) == text);
    REQUIRE(h == testutil::complete_hypergraph(3, 5));
}

TEST_CASE("construct star has binom(n-1, r-1) edges", "[hypergraph]") {
    for (int r = 2; r <= 4; ++r) {
        for (int n = r; n <= 9; ++n) {
            Hypergraph star = construct(ConstructionKind::Star, n, r);
            REQUIRE(static_cast<long long>(star.edge_count()) ==
                    testutil::binom_pascal(n - 1, r - 1));
            for (const auto& e : star.edges()) REQUIRE(e.front() == 0);
        }
    }
    REQUIRE(construct(ConstructionKind::Star, 6, 3).edge_count() == 10);
    REQUIRE(construct(ConstructionKind::Star, 3, 3).edge_count() == 1);  // C(r-1, r-1)
}

TEST_CASE("construct berge_free has floor((n-1)/(r-1)) disjoint-leaf edges", "[hypergraph]") {
    for (int r = 2; r <= 4; ++r) {
        for (int n = r; n <= 11; ++n) {
            Hypergraph h = construct(ConstructionKind::BergeFree, n, r);
            REQUIRE(static_cast<long long>(h.edge_count()) == (n - 1) / (r - 1));
            // pairwise: edges share exactly the apex
            for (std::size_t i = 0; i < h.edge_count(); ++i)
                for (std::size_t j = i + 1; j < h.edge_count(); ++j) {
                    std::vector<int> common;
                    std::set_intersection(h.edge(i).begin(), h.edge(i).end(), h.edge(j).begin(),
                                          h.edge(j).end(), std::back_inserter(common));
                    REQUIRE(common == std::vector<int>{0});
                }
        }
    }
    REQUIRE(construct(ConstructionKind::BergeFree, 10, 3).edge_count() == 4);
}

TEST_CASE("construct rejects bad parameters", "[hypergraph]") {
    REQUIRE_THROWS_AS(construct(ConstructionKind::Star, 2, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(construct(ConstructionKind::Star, 4, 1), std::invalid_argument);
}

TEST_CASE("random_r_partition is deterministic and keeps transversal edges", "[hypergraph]") {
    Hypergraph h = testutil::complete_hypergraph(3, 7);
    auto [p1, t1] = random_r_partition(h, 42);
    auto [p2, t2] = random_r_partition(h, 42);
    REQUIRE(p1.part_of == p2.part_of);
    REQUIRE(t1 == t2);
    auto [p3, t3] = random_r_partition(h, 43);
    REQUIRE((p1.part_of != p3.part_of || t1 == t3));  // different seed, (almost surely) different

    for (const auto& e : t1.edges()) {
        std::set<int> parts;
        for (int v : e) parts.insert(p1.part(v));
        REQUIRE(parts.size() == e.size());
    }
}

TEST_CASE("empty hypergraph partitions to empty result", "[hypergraph]") {
    Hypergraph h(3, 0, {});
    auto [p, t] = random_r_partition(h, 1);
    REQUIRE(p.part_of.empty());
    REQUIRE(t.edge_count() == 0);
}

TEST_CASE("single edge survives partition with probability r!/r^r", "[hypergraph]") {
    // oracle: of the 27 equiprobable assignments of 3 vertices to 3 parts,
    // exactly 3! are transversal
    int transversal_assignments = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                if (a != b && b != c && a != c) ++transversal_assignments;
    REQUIRE(transversal_assignments == 6);

    Hypergraph h(3, 3, {{0, 1, 2}});
    int survived = 0;
    const int trials = 2000;
    for (int s = 0; s < trials; ++s) {
        auto [p, t] = random_r_partition(h, static_cast<std::uint64_t>(s));
        survived += static_cast<int>(t.edge_count());
    }
    const double rate = static_cast<double>(survived) / trials;
    const double expect = 6.0 / 27.0;
    const double se = std::sqrt(expect * (1 - expect) / trials);
    REQUIRE(std::abs(rate - expect) < 3 * se);
}

TEST_CASE("mean transversal fraction within 3 standard errors of r!/r^r", "[hypergraph]") {
    Hypergraph h = testutil::complete_hypergraph(3, 9);  // 84 edges
    const int seeds = 300;
    std::vector<double> fractions;
    for (int s = 0; s < seeds; ++s) {
        auto [p, t] = random_r_partition(h, static_cast<std::uint64_t>(s));
        fractions.push_back(static_cast<double>(t.edge_count()) /
                            static_cast<double>(h.edge_count()));
    }
    double mean = 0;
    for (double f : fractions) mean += f;
    mean /= seeds;
    double var = 0;
    for (double f : fractions) var += (f - mean) * (f - mean);
    var /= (seeds - 1);
    const double se = std::sqrt(var / seeds);
    const double expect = 6.0 / 27.0;
    REQUIRE(std::abs(mean - expect) < 3 * se);
}

TEST_CASE("partition file round-trip", "[hypergraph]") {
    Hypergraph h = construct(ConstructionKind::Star, 5, 3);
    auto [p, t] = random_r_partition(h, 7);
    std::string text = serialize_partition(p);
    Partition q = load_partition(text, 3, h.vertex_count());
    REQUIRE(q.part_of == p.part_of);

    REQUIRE_THROWS_AS(load_partition("0 1\n", 3, 2), ParseError);        // missing vertex
    REQUIRE_THROWS_AS(load_partition("0 1\n1 4\n", 3, 2), ParseError);   // part out of range
    REQUIRE_THROWS_AS(load_partition("0 1\n0 2\n", 3, 2), ParseError);   // assigned twice
}

TEST_CASE("witness validators reject corrupted witnesses", "[hypergraph]") {
    Hypergraph k4 = testutil::complete_hypergraph(3, 4);
    TightCycleWitness good{{0, 1, 2, 3}};
    REQUIRE(validate_tight_cycle(k4, good));
    TightCycleWitness repeated{{0, 1, 2, 0}};
    REQUIRE_FALSE(validate_tight_cycle(k4, repeated));
    TightCycleWitness short_one{{0, 1, 2}};
    REQUIRE_FALSE(validate_tight_cycle(k4, short_one));
    Hypergraph star = construct(ConstructionKind::Star, 6, 3);
    REQUIRE_FALSE(validate_tight_cycle(star, good));  // windows missing
}
