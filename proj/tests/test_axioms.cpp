#include <doctest.h>

#include "swfkit/construct.hpp"

using namespace swfkit;

namespace {

// f(R) = reverse of voter 0's order.
ExplicitSwf inverse_dictator(const std::shared_ptr<const Universe>& uni) {
    std::vector<std::int32_t> table(uni->num_orders(), 0);
    for (std::size_t o = 0; o < uni->num_orders(); ++o) {
        const WeakOrder& w = uni->order(static_cast<int>(o));
        int top = w.num_blocks() - 1;
        std::vector<int> rank;
        for (int a = 0; a < w.num_alts(); ++a) rank.push_back(top - w.rank_of(a));
        table[o] = static_cast<std::int32_t>(uni->index_of(WeakOrder::from_ranks(std::move(rank))));
    }
    return ExplicitSwf(uni, 1, std::move(table));
}

}  // namespace

TEST_CASE("IIA check") {
    auto uni = Universe::make(AltSet::with_default_labels(3));
    CHECK(check_iia(verbatim_dictator_chain(uni, 2)).holds);
    CHECK(check_iia(ExplicitSwf::null_swf(uni, 2)).holds);
    auto v = check_iia(example1_swf());
    CHECK(!v.holds);
    CHECK(v.witness.has_value());
}

TEST_CASE("weak Pareto check") {
    auto uni = Universe::make(AltSet::with_default_labels(3));
    CHECK(check_wpp(example1_swf()).holds);
    CHECK(check_wpp(verbatim_dictator_chain(uni, 2)).holds);

    auto v = check_wpp(ExplicitSwf::null_swf(uni, 2));
    CHECK(!v.holds);
    REQUIRE(v.witness.has_value());
    const WppViolation& w = *v.witness;
    for (const auto& pref : w.profile.prefs)
        CHECK(pair_relation(pref, w.x, w.y) == PairRel::Less);

    // No voters: the premise is never satisfiable.
    CHECK(check_wpp(ExplicitSwf::constant(uni, 0, uni->order(0))).holds);
}

TEST_CASE("citizens' sovereignty check") {
    auto uni = Universe::make(AltSet::with_default_labels(3));
    CHECK(check_cs(ExplicitSwf::null_swf(uni, 2)).holds);
    CHECK(check_cs(verbatim_dictator_chain(uni, 2)).holds);

    WeakOrder w = parse_weak_order("a0<a1<a2", uni->alts());
    auto v = check_cs(ExplicitSwf::constant(uni, 1, w));
    CHECK(!v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->x == 0);
    CHECK(v.witness->y == 1);
    CHECK(v.witness->fixed_direction == PairRel::Less);
}

TEST_CASE("null check") {
    auto uni = Universe::make(AltSet::with_default_labels(3));
    CHECK(is_null(ExplicitSwf::null_swf(uni, 2)));
    CHECK(!is_null(verbatim_dictator_chain(uni, 1)));
}

TEST_CASE("fixed relation of a constant function is the constant itself") {
    auto uni = Universe::make(AltSet::with_default_labels(3));
    WeakOrder w = parse_weak_order("a0<a1=a2", uni->alts());
    ClericResult cl = compute_cleric(ExplicitSwf::constant(uni, 1, w));
    CHECK(cl.transitivity.transitive);
    CHECK(weak_order_from_relation(cl.cleric) == w);
}

TEST_CASE("fixed relation of a dictatorship ties everything") {
    auto uni = Universe::make(AltSet::with_default_labels(3));
    ClericResult cl = compute_cleric(verbatim_dictator_chain(uni, 2));
    CHECK(cl.transitivity.transitive);
    CHECK(weak_order_from_relation(cl.cleric).is_all_equal());
}

TEST_CASE("dictator search: voter order, then verbatim before inverse") {
    auto uni = Universe::make(AltSet::with_default_labels(3));

    DictatorFinding fd = find_dictator(verbatim_dictator_chain(uni, 2));
    REQUIRE(fd.voter.has_value());
    CHECK(*fd.voter == 0);
    CHECK(fd.direction == Direction::Verbatim);

    DictatorFinding inv = find_dictator(inverse_dictator(uni));
    REQUIRE(inv.voter.has_value());
    CHECK(*inv.voter == 0);
    CHECK(inv.direction == Direction::Inverse);

    DictatorFinding ex1 = find_dictator(example1_swf());
    REQUIRE(ex1.voter.has_value());
    CHECK(*ex1.voter == 0);
    CHECK(ex1.direction == Direction::Verbatim);
}

TEST_CASE("the null function is not dictatorial") {
    // A dictator's strict preference must translate into a strict output;
    // the null function never produces one.
    auto uni = Universe::make(AltSet::with_default_labels(3));
    ExplicitSwf null2 = ExplicitSwf::null_swf(uni, 2);
    CHECK(!find_dictator(null2).voter.has_value());
    for (int v = 0; v < 2; ++v) {
        CHECK(!voter_is_dictator(null2, v, Direction::Verbatim));
        CHECK(!voter_is_dictator(null2, v, Direction::Inverse));
    }
}

TEST_CASE("deferred function extraction") {
    auto uni = Universe::make(AltSet::with_default_labels(3));
    ExplicitSwf f = verbatim_dictator_chain(uni, 2);
    ExplicitSwf g = extract_deferred(f, 0);
    CHECK(g.voters() == 1);
    CHECK(g == verbatim_dictator_chain(uni, 1));

    ExplicitSwf h = extract_deferred(g, 0);
    CHECK(h.voters() == 0);
    CHECK(is_null(h));

    CHECK_THROWS_AS(extract_deferred(f, 1), InputError);            // voter 1 is not a dictator
    CHECK_THROWS_AS(extract_deferred(f, 5), InputError);            // out of range
    CHECK_THROWS_AS(extract_deferred(example1_swf(), 0), InputError);  // not IIA
}
