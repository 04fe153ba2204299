#include <catch2/catch_amalgamated.hpp>

#include "hglab/rational.hpp"

using namespace hglab;

TEST_CASE("rational basics", "[rational]") {
    REQUIRE(make_rational(2, 4) == make_rational(1, 2));
    REQUIRE(make_rational(3, 2) > make_rational(4, 3));
    REQUIRE_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    REQUIRE(rational_to_string(make_rational(6, 4)) == "3/2");
    REQUIRE(rational_to_string(make_rational(8, 4)) == "2");
}

TEST_CASE("floor of rationals", "[rational]") {
    REQUIRE(floor_to_ll(make_rational(7, 2)) == 3);
    REQUIRE(floor_to_ll(make_rational(8, 2)) == 4);
    REQUIRE(floor_to_ll(make_rational(-7, 2)) == -4);
    REQUIRE(floor_to_ll(make_rational(0, 5)) == 0);
}

TEST_CASE("rational parsing", "[rational]") {
    REQUIRE(parse_rational("1/2") == make_rational(1, 2));
    REQUIRE(parse_rational("10") == make_rational(10));
    REQUIRE_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("dyadic log2 exact on powers of two", "[rational]") {
    REQUIRE(log2_dyadic(1) == 0);
    REQUIRE(log2_dyadic(2) == 1);
    REQUIRE(log2_dyadic(1024) == 10);
    REQUIRE(log2_dyadic(1ULL << 40) == 40);
}

TEST_CASE("dyadic log2 brackets the real value", "[rational]") {
    // 2^floor <= n < 2^(floor+1) and the approximation sits inside.
    for (unsigned long long n : {3ULL, 5ULL, 27ULL, 100ULL, 1000ULL, 123456789ULL}) {
        Rational l = log2_dyadic(n);
        long long lo = floor_to_ll(l);
        REQUIRE((1ULL << lo) <= n);
        REQUIRE(n < (1ULL << (lo + 1)));
        // Squaring check: n^2's log is 2x n's log up to the dyadic grid.
        Rational l2 = log2_dyadic(n * n);
        Rational diff = l2 - 2 * l;
        Rational grid = make_rational(4, 1 << 30);  // a few ulps of 2^-32
        REQUIRE(diff < grid);
        REQUIRE(diff > -grid);
    }
}

TEST_CASE("dyadic log2 is monotone", "[rational]") {
    Rational prev = log2_dyadic(2);
    for (unsigned long long n = 3; n < 200; ++n) {
        Rational cur = log2_dyadic(n);
        REQUIRE(cur >= prev);
        prev = cur;
    }
}
