#include "hvlab/macaulay.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hvlab;

TEST_CASE("binomial basics and zero convention") {
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(3, 5) == 0);   // m < c
    CHECK(binomial(4, -1) == 0);  // c < 0
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(12, 12) == 1);
}

TEST_CASE("binomial agrees with the Pascal-triangle oracle") {
    for (unsigned n = 0; n <= 34; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == oracles::pascal_binomial(n, k));
}

TEST_CASE("binomial overflow is detected, not wrapped") {
    CHECK(binomial(64, 32) == 1832624140942590534ull);  // near the edge, still exact
    CHECK_THROWS_AS(binomial(100, 50), ArithmeticOverflow);
    CHECK_THROWS_AS(binomial(68, 34), ArithmeticOverflow);
}

TEST_CASE("macaulay_rep frozen cases") {
    const BinomialExpansion rep = macaulay_rep(12, 3);
    REQUIRE(rep.terms.size() == 3);
    CHECK(rep.terms[0] == BinomialTerm{5, 3});
    CHECK(rep.terms[1] == BinomialTerm{2, 2});
    CHECK(rep.terms[2] == BinomialTerm{1, 1});
    CHECK(rep.to_string() == "C(5,3)+C(2,2)+C(1,1)");

    const BinomialExpansion fifteen = macaulay_rep(15, 2);
    REQUIRE(fifteen.terms.size() == 1);
    CHECK(fifteen.terms[0] == BinomialTerm{6, 2});

    for (unsigned d = 1; d <= 8; ++d) {
        const BinomialExpansion one = macaulay_rep(1, d);
        REQUIRE(one.terms.size() == 1);
        CHECK(one.terms[0] == BinomialTerm{d, d});
    }

    CHECK_THROWS_AS(macaulay_rep(0, 3), DomainError);
    CHECK_THROWS_AS(macaulay_rep(5, 0), DomainError);
}

TEST_CASE("expansion is unique and greedy finds it (exhaustive oracle)") {
    for (unsigned d = 1; d <= 4; ++d) {
        for (Nat n = 1; n <= 300; ++n) {
            const auto found = oracles::all_expansions(n, d);
            REQUIRE_MESSAGE(found.size() == 1, "n=", n, " d=", d);
            const BinomialExpansion rep = macaulay_rep(n, d);
            REQUIRE(rep.terms.size() == found[0].size());
            for (std::size_t i = 0; i < rep.terms.size(); ++i)
                CHECK(rep.terms[i].top == found[0][i]);
        }
    }
}

TEST_CASE("expansion round trip") {
    for (unsigned d = 1; d <= 8; ++d)
        for (Nat n = 1; n <= 10000; ++n)
            CHECK(expansion_value(macaulay_rep(n, d)) == n);
}

TEST_CASE("shifted_value matches the worked values") {
    const BinomialExpansion rep = macaulay_rep(12, 3);
    CHECK(shifted_value(rep, +1, +1) == 17);
    CHECK(shifted_value(rep, -1, -1) == 8);
    CHECK(shifted_value(rep, 0, 0) == 12);
    CHECK(shifted_value(rep, 0, -1) == 4);
}

TEST_CASE("shifted_value identity at (0,0)") {
    for (unsigned d = 1; d <= 8; ++d)
        for (Nat n = 1; n <= 2000; ++n)
            CHECK(shifted_value(macaulay_rep(n, d), 0, 0) == n);
}

TEST_CASE("bound frozen cases") {
    CHECK(macaulay_next(16, 4) == 22);
    CHECK(macaulay_next(3, 2) == 4);
    CHECK(macaulay_next(12, 3) == 17);
    CHECK(macaulay_next(17, 3) == 26);
    CHECK(macaulay_next(25, 4) == 36);
    for (unsigned d = 1; d <= 8; ++d) CHECK(macaulay_next(1, d) == 1);

    CHECK(macaulay_prev(12, 3) == 8);
    CHECK(macaulay_prev(25, 4) == 16);
    CHECK(macaulay_prev(17, 3) == 10);
    for (unsigned d = 1; d <= 8; ++d) CHECK(macaulay_prev(1, d) == 1);

    CHECK(green_restrict(12, 3) == 4);
    CHECK(green_restrict(15, 2) == 10);
    CHECK(green_restrict(17, 4) == 5);
    CHECK(green_restrict(15, 3) == 6);
    CHECK(green_restrict(22, 3) == 10);
    CHECK(green_restrict(25, 4) == 9);
    for (unsigned d = 1; d <= 8; ++d) {
        CHECK(green_restrict(1, d) == 0);
        CHECK(green_restrict(0, d) == 0);
        CHECK(macaulay_next(0, d) == 0);
        CHECK(macaulay_prev(0, d) == 0);
    }
}

TEST_CASE("bound overflow is detected") {
    // C(10^10 + 1, 2) does not fit in 64 bits
    CHECK_THROWS_AS(macaulay_next(10000000000ull, 1), ArithmeticOverflow);
    CHECK_THROWS_AS(gotzmann_persistence(4, 3, 0), DomainError);
    CHECK_THROWS_AS(macaulay_next(5, 0), DomainError);
}

TEST_CASE("gotzmann persistence values") {
    // line values t+1 from (4, 3)
    for (unsigned s = 1; s <= 3; ++s) CHECK(gotzmann_persistence(4, 3, s) == s + 4);
    // conic values 2t+1 from (7, 3)
    for (unsigned s = 1; s <= 2; ++s) CHECK(gotzmann_persistence(7, 3, s) == 2 * s + 7);
    // s = 1 coincides with macaulay_next
    for (unsigned d = 1; d <= 6; ++d)
        for (Nat n = 1; n <= 400; ++n)
            CHECK(gotzmann_persistence(n, d, 1) == macaulay_next(n, d));
}

TEST_CASE("bounds are monotone in n") {
    for (unsigned d = 1; d <= 8; ++d) {
        Nat prev_next = 0, prev_prev = 0, prev_green = 0;
        for (Nat n = 1; n <= 1500; ++n) {
            const Nat vn = macaulay_next(n, d);
            const Nat vp = macaulay_prev(n, d);
            const Nat vg = green_restrict(n, d);
            CHECK(vn >= prev_next);
            CHECK(vp >= prev_prev);
            CHECK(vg >= prev_green);
            prev_next = vn;
            prev_prev = vp;
            prev_green = vg;
        }
    }
}

TEST_CASE("bounds never exceed the input") {
    for (unsigned d = 1; d <= 8; ++d)
        for (Nat n = 1; n <= 1500; ++n) {
            CHECK(green_restrict(n, d) <= n);
            CHECK(macaulay_prev(n, d) <= n);
        }
}

TEST_CASE("pure binomial growth is again binomial") {
    for (unsigned d = 1; d <= 11; ++d)
        for (Nat m = d + 1; m <= 12; ++m)
            CHECK(macaulay_next(binomial(m, d), d) == binomial(m + 1, d + 1));
}
