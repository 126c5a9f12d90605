#include "eazeta/composition.hpp"
#include "eazeta/finite_sums.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace eazeta;

TEST_CASE("finite zeta examples") {
    CHECK(finite_zeta<Rational>(1, Composition{5}, false) == Rational(1));
    CHECK(finite_zeta<Rational>(2, Composition{1, 1}, true) == Rational(7, 4));
    // zeta*_n(empty; x) = x^n
    CHECK(finite_zeta<Rational>(3, std::span<const int>{}, true, Rational(1, 2)) == Rational(1, 8));
}

TEST_CASE("finite t examples") {
    CHECK(finite_t<Rational>(1, Composition{3}, false) == Rational(1));
    CHECK(finite_t<Rational>(2, Composition{1}, true) == Rational(4, 3));
    CHECK(finite_t<Rational>(1, Composition{2}, true, Rational(7, 10)) == Rational(7, 10));
}

TEST_CASE("central binomial ratio") {
    CHECK(central_binomial_ratio<Rational>(1) == Rational(1, 2));
    CHECK(central_binomial_ratio<Rational>(2) == Rational(3, 8));
    // direct factorial evaluation
    BigInt num(1), den(1);
    for (int i = 0; i < 10; ++i) {
        num *= 20 - i;
        den *= i + 1;
    }
    Rational direct(num / den);
    for (int i = 0; i < 10; ++i) direct /= 4;
    CHECK(central_binomial_ratio<Rational>(10) == direct);
}

TEST_CASE("odd harmonic numbers") {
    CHECK(odd_harmonic<Rational>(1) == Rational(1));
    CHECK(odd_harmonic<Rational>(2) == Rational(4, 3));
    CHECK(odd_harmonic<Rational>(3) == Rational(23, 15));
}

TEST_CASE("degenerate strict sums vanish, star sums do not") {
    CHECK(finite_zeta<Rational>(2, Composition{1, 1, 1}, false) == Rational(0));
    CHECK(finite_zeta<Rational>(1, Composition{2, 3}, false) == Rational(0));
    CHECK(finite_t<Rational>(2, Composition{1, 1, 1}, false) == Rational(0));
    CHECK(finite_zeta<Rational>(1, Composition{1, 1, 1}, true) > 0);
    CHECK(finite_zeta<Rational>(2, Composition{1, 1}, true, Rational(1, 100)) > 0);
}

TEST_CASE("star sums nondecreasing in n at x = 1") {
    Composition k{2, 1};
    Rational prev(0);
    for (long n = 1; n <= 20; ++n) {
        Rational cur = finite_zeta<Rational>(n, k, true);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("parametric sums at x = 1 match the plain star sums exactly") {
    for (long n : {1L, 2L, 5L, 11L}) {
        CHECK(finite_zeta<Rational>(n, Composition{2, 1}, true, Rational(1)) ==
              finite_zeta<Rational>(n, Composition{2, 1}, true));
        CHECK(finite_t<Rational>(n, Composition{1, 2}, true, Rational(1)) ==
              finite_t<Rational>(n, Composition{1, 2}, true));
    }
}

TEST_CASE("DP equals nested-loop enumeration exactly") {
    std::vector<Composition> comps{{1}, {3}, {1, 1}, {2, 1}, {1, 2}, {2, 2, 1}, {1, 1, 2}, {3, 1, 1}};
    for (const Composition& k : comps) {
        for (long n = 1; n <= 12; ++n) {
            for (bool star : {false, true}) {
                CHECK(finite_zeta<Rational>(n, k, star) ==
                      oracle::brute_harmonic(n, k.parts(), star, false));
                CHECK(finite_t<Rational>(n, k, star) ==
                      oracle::brute_harmonic(n, k.parts(), star, true));
            }
            Rational x(3, 7);
            CHECK(finite_zeta<Rational>(n, k, true, x) ==
                  oracle::brute_harmonic(n, k.parts(), true, false, x));
            CHECK(finite_t<Rational>(n, k, true, x) ==
                  oracle::brute_harmonic(n, k.parts(), true, true, x));
        }
    }
}

TEST_CASE("stuffle cross-check through finite_zeta") {
    std::mt19937 rng(7);
    auto random_comp = [&](int maxw) {
        std::uniform_int_distribution<int> wd(1, maxw);
        int w = wd(rng);
        std::vector<int> parts;
        while (w > 0) {
            std::uniform_int_distribution<int> pd(1, w);
            int p = pd(rng);
            parts.push_back(p);
            w -= p;
        }
        return Composition(parts);
    };
    for (int trial = 0; trial < 8; ++trial) {
        Composition a = random_comp(4), b = random_comp(4);
        FormalSum prod = quasi_shuffle(a, b);
        for (long n = 1; n <= 30; ++n) {
            Rational lhs = finite_zeta<Rational>(n, a, false) * finite_zeta<Rational>(n, b, false);
            Rational rhs(0);
            for (const auto& [c, parts] : prod.terms())
                rhs += Rational(c) * finite_zeta<Rational>(n, std::span<const int>(parts), false);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("parametric preconditions") {
    CHECK_THROWS_AS(finite_zeta<Rational>(3, Composition{2}, false, Rational(1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(finite_zeta<Rational>(0, Composition{2}, true), std::invalid_argument);
}

TEST_CASE("parametric t-star empty convention t*_n(empty;x) = x^(2n)") {
    CHECK(finite_t<Rational>(2, std::span<const int>{}, true, Rational(1, 2)) == Rational(1, 16));
    CHECK(finite_t<Rational>(1, std::span<const int>{}, true, Rational(0)) == Rational(0));
}
