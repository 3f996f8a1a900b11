#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swfkit/weak_orders.hpp"

using namespace swfkit;

TEST_CASE("canonical string form") {
    AltSet alts({"a0", "a1", "a2"});
    WeakOrder w = WeakOrder::from_blocks({{0, 2}, {1}}, 3);
    CHECK(to_string(w, alts) == "a0=a2<a1");
    CHECK(parse_weak_order("a0=a2<a1", alts) == w);
    CHECK(parse_weak_order("a2=a0<a1", alts) == w);  // member order normalized
    CHECK(to_string(WeakOrder::all_equal(3), alts) == "a0=a1=a2");
    CHECK_THROWS_AS(parse_weak_order("a0<a0", alts), InputError);
    CHECK_THROWS_AS(parse_weak_order("a0<a1", alts), InputError);  // must cover every alternative
    CHECK_THROWS_AS(parse_weak_order("a0<b<a1", alts), InputError);
}

TEST_CASE("pair relation convention: x<y means x strictly below y") {
    AltSet alts({"x", "y", "z"});
    WeakOrder w = parse_weak_order("x<y=z", alts);
    CHECK(pair_relation(w, 0, 1) == PairRel::Less);
    CHECK(pair_relation(w, 1, 0) == PairRel::Greater);
    CHECK(pair_relation(w, 1, 2) == PairRel::Equal);
    CHECK(pair_relation(w, 0, 0) == PairRel::Equal);
}

TEST_CASE("ordered Bell numbers and enumeration sizes agree") {
    const long expected[] = {1, 3, 13, 75, 541, 4683};
    for (int s = 1; s <= 6; ++s) {
        CHECK(ordered_bell(s) == expected[s - 1]);
        auto orders = enumerate_weak_orders(AltSet::with_default_labels(s));
        CHECK(orders.size() == static_cast<std::size_t>(expected[s - 1]));
    }
    CHECK(ordered_bell(0) == 1);
}

TEST_CASE("enumeration is sorted by canonical string and duplicate-free") {
    AltSet alts = AltSet::with_default_labels(4);
    auto orders = enumerate_weak_orders(alts);
    for (std::size_t i = 0; i + 1 < orders.size(); ++i)
        CHECK(to_string(orders[i], alts) < to_string(orders[i + 1], alts));
    CHECK(to_string(orders[0], alts) == "a0<a1<a2<a3");
}

TEST_CASE("complete relation stores reversed ordered pairs consistently") {
    CompleteRelation rel(3);
    rel.set(2, 0, PairRel::Less);  // a2 below a0
    CHECK(rel.get(0, 2) == PairRel::Greater);
    CHECK(rel.get(2, 0) == PairRel::Less);
    rel.set(0, 1, PairRel::Equal);
    CHECK(rel.get(1, 0) == PairRel::Equal);
    CHECK_THROWS_AS(rel.set(1, 1, PairRel::Less), InputError);
}

TEST_CASE("transitivity check produces a violating triple") {
    CompleteRelation cyc(3);
    cyc.set(0, 1, PairRel::Less);
    cyc.set(1, 2, PairRel::Less);
    cyc.set(0, 2, PairRel::Greater);
    auto check = is_transitive(cyc);
    CHECK(!check.transitive);
    REQUIRE(check.witness.has_value());
    auto [x, y, z] = *check.witness;
    // x <= y and y <= z but not x <= z
    CHECK(cyc.get(x, y) != PairRel::Greater);
    CHECK(cyc.get(y, z) != PairRel::Greater);
    CHECK(cyc.get(x, z) == PairRel::Greater);
}

TEST_CASE("weak order <-> complete relation round trip") {
    AltSet alts = AltSet::with_default_labels(3);
    for (const WeakOrder& w : enumerate_weak_orders(alts)) {
        CompleteRelation rel = CompleteRelation::of(w);
        CHECK(is_transitive(rel).transitive);
        CHECK(weak_order_from_relation(rel) == w);
    }
    CompleteRelation cyc(3);
    cyc.set(0, 1, PairRel::Less);
    cyc.set(1, 2, PairRel::Less);
    cyc.set(0, 2, PairRel::Greater);
    CHECK_THROWS_AS(weak_order_from_relation(cyc), InputError);
}

TEST_CASE("restriction keeps relative ranks") {
    AltSet alts({"x", "y", "z"});
    WeakOrder w = parse_weak_order("z<x=y", alts);
    WeakOrder sub = restrict_order(w, {0, 2});  // {x, z}
    CHECK(sub.num_alts() == 2);
    CHECK(pair_relation(sub, 0, 1) == PairRel::Greater);  // z below x
    WeakOrder one = restrict_order(w, {1});
    CHECK(one.is_all_equal());
    CHECK_THROWS_AS(restrict_order(w, {}), InputError);
}

TEST_CASE("alternative set validation") {
    CHECK_THROWS_AS(AltSet(std::vector<std::string>{}), InputError);
    CHECK_THROWS_AS(AltSet({"a", "a"}), InputError);
    CHECK_THROWS_AS(AltSet({"a<b"}), InputError);
    CHECK_THROWS_AS(AltSet({"a", "b", "c", "d", "e", "f", "g"}), InputError);
    AltSet alts({"left", "right"});
    CHECK(alts.index_of("right") == 1);
    CHECK(alts.subset({1}).label(0) == "right");
}
