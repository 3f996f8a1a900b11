#include <doctest.h>

#include "swfkit/count.hpp"

using namespace swfkit;

TEST_CASE("pinned q values") {
    CHECK(q(1, 5) == 1);
    CHECK(q(2, 0) == 3);
    CHECK(q(2, 1) == 27);
    CHECK(q(2, 2) == 19683);
    CHECK(q(3, 0) == 13);
    CHECK(q(3, 1) == 183);
    CHECK(q(3, 2) == 118825);
    CHECK(q(4, 0) == 75);
    CHECK(q(4, 1) == 5041);
}

TEST_CASE("pinned r values") {
    CHECK(r(3, 0) == 13);
    CHECK(r(3, 1) == 13);
    CHECK(r(3, 2) == 366);
    CHECK(r(2, 1) == 3);
}

TEST_CASE("pinned p values") {
    CHECK(p(3, 0) == 1);
    CHECK(p(2, 1) == 25);
    CHECK(p(2, 2) == 19681);
    CHECK(p(3, 1) == 27);
    CHECK(p(3, 2) == 733);
}

TEST_CASE("general q matches the hand-expanded three and four state forms") {
    for (int v = 0; v <= 4; ++v) {
        CHECK(q(3, v) == q3_literal(v));
        CHECK(q(4, v) == q4_literal(v));
    }
}

TEST_CASE("q at zero voters is the ordered Bell number") {
    for (int s = 1; s <= 6; ++s) CHECK(q(s, 0) == ordered_bell(s));
}

TEST_CASE("r and p reduce to q-based forms") {
    for (int v = 1; v <= 4; ++v) {
        CHECK(r(3, v) == BigInt(v) * q(3, v - 1));
        CHECK(p(3, v) == 1 + BigInt(2) * v * q(3, v - 1));
        CHECK(p(2, v) == q(2, v) - 2);
    }
}

TEST_CASE("dominant addends take over as voters grow") {
    // Three states: the share of functions whose fixed relation has class
    // sizes 2+1 grows toward one.
    auto share_num = [](int v) -> BigInt { return 6 * (count_two_state(v) - 2); };
    for (int v = 1; v < 4; ++v) {
        // share(v+1) > share(v), compared as cross products to stay exact
        BigInt lhs = share_num(v + 1) * q(3, v);
        BigInt rhs = share_num(v) * q(3, v + 1);
        CHECK(lhs > rhs);
    }
    // Four states: likewise for the two-pairs class structure (size 2+2,
    // with singleton placements), the third addend of q_4.
    auto share4 = [](int v) -> BigInt {
        BigInt h2 = count_two_state(v) - 2;
        return 6 * h2 * h2;
    };
    for (int v = 1; v < 4; ++v) {
        BigInt lhs = share4(v + 1) * q(4, v);
        BigInt rhs = share4(v) * q(4, v + 1);
        CHECK(lhs > rhs);
    }
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(q(0, 1), InputError);
    CHECK_THROWS_AS(q(3, -1), InputError);
    CHECK_THROWS_AS(r(1, 1), InputError);
    CHECK_THROWS_AS(p(1, 1), InputError);
}

TEST_CASE("memoized counter is consistent across repeated queries") {
    BigInt first = q(4, 2);
    CHECK(q(4, 2) == first);
    CHECK(counter().q(4, 2) == first);
}
