#include <doctest.h>

#include "swfkit/construct.hpp"

using namespace swfkit;

namespace {

std::size_t stream_length(int s, int v, EnumerationFilter f) {
    std::size_t n = 0;
    enumerate_descriptions(s, v, f, [&](const CdDescription&) { ++n; });
    return n;
}

}  // namespace

TEST_CASE("stream lengths match the counting formulas") {
    CHECK(stream_length(1, 3, EnumerationFilter::All) == 1);
    CHECK(stream_length(2, 2, EnumerationFilter::All) == 19683);
    CHECK(stream_length(3, 0, EnumerationFilter::All) == 13);
    CHECK(stream_length(3, 1, EnumerationFilter::All) == 183);
    CHECK(stream_length(4, 1, EnumerationFilter::All) == 5041);
    CHECK(stream_length(3, 2, EnumerationFilter::WppShape) == 366);
    CHECK(stream_length(3, 2, EnumerationFilter::CsShape) == 733);
    CHECK(stream_length(3, 1, EnumerationFilter::WppShape) == 13);
    CHECK(stream_length(3, 1, EnumerationFilter::CsShape) == 27);
    CHECK(stream_length(3, 0, EnumerationFilter::WppShape) == 0);
    CHECK(stream_length(3, 0, EnumerationFilter::CsShape) == 1);
}

TEST_CASE("every enumerated description is canonical, and the stream is duplicate-free") {
    std::set<std::string> seen;
    auto alts = AltSet::with_default_labels(3);
    auto uni = Universe::make(alts);
    enumerate_descriptions(3, 1, EnumerationFilter::All, [&](const CdDescription& d) {
        CHECK(validate_canonical(d).ok);
        // cleric exactness: the reconstructed function's fixed relation is
        // exactly the description's cleric
        ExplicitSwf f = reconstruct(d, uni);
        if (d.kind == CdDescription::Kind::Layered)
            CHECK(weak_order_from_relation(compute_cleric(f).cleric) == d.cleric);
        std::string fp;
        for (std::int32_t t : f.table()) fp += static_cast<char>('a' + t);
        CHECK(seen.insert(fp).second);
    });
    CHECK(seen.size() == 183);
}

TEST_CASE("filtered streams are sub-streams of the full stream") {
    std::vector<CdDescription> all, wpp, cs;
    enumerate_descriptions(3, 1, EnumerationFilter::All,
                           [&](const CdDescription& d) { all.push_back(d); });
    enumerate_descriptions(3, 1, EnumerationFilter::WppShape,
                           [&](const CdDescription& d) { wpp.push_back(d); });
    enumerate_descriptions(3, 1, EnumerationFilter::CsShape,
                           [&](const CdDescription& d) { cs.push_back(d); });
    auto contains = [&](const CdDescription& d) {
        return std::find(all.begin(), all.end(), d) != all.end();
    };
    for (const auto& d : wpp) {
        CHECK(contains(d));
        REQUIRE(d.kind == CdDescription::Kind::Layered);
        CHECK(d.cleric.is_all_equal());
        CHECK(d.classes[0].kind == ClassRuling::Kind::Dictator);
        CHECK(d.classes[0].direction == Direction::Verbatim);
    }
    for (const auto& d : cs) {
        CHECK(contains(d));
        REQUIRE(d.kind == CdDescription::Kind::Layered);
        CHECK(d.cleric.is_all_equal());
    }
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(stream_length(2, 1, EnumerationFilter::WppShape), InputError);
    CHECK_THROWS_AS(stream_length(3, 3, EnumerationFilter::All), BudgetError);
    CHECK_THROWS_AS(stream_length(7, 0, EnumerationFilter::All), InputError);
}

TEST_CASE("stats breakdown at (3,1)") {
    EnumerationStats st = enumeration_stats(3, 1, EnumerationFilter::All);
    CHECK(st.total == 183);
    CHECK(st.by_signature.at("1+1+1") == 6);
    CHECK(st.by_signature.at("2+1") == 150);  // 6 clerics, 25 pair functions each
    CHECK(st.by_signature.at("3") == 27);     // null + 2 dictator choices x 13 deferrals
    BigInt sum = 0;
    for (const auto& [sig, n] : st.by_signature) sum += n;
    CHECK(sum == st.total);
}

TEST_CASE("canonicality validator rejects malformed descriptions") {
    CdDescription bad = CdDescription::layered(
        1, parse_weak_order("a0=a1<a2", AltSet::with_default_labels(3)),
        {ClassRuling::pair_fn(PairTable::constant(1, PairRel::Less)), ClassRuling::singleton()});
    CHECK(!validate_canonical(bad).ok);

    CdDescription wrong_unit = CdDescription::unit(1);
    wrong_unit.num_alts = 2;
    CHECK(!validate_canonical(wrong_unit).ok);

    // Hand-built nested dictatorship is canonical.
    auto inner = std::make_shared<const CdDescription>(CdDescription::layered(
        0, WeakOrder::all_equal(3), {ClassRuling::null_class()}));
    CdDescription nested = CdDescription::layered(
        1, WeakOrder::all_equal(3), {ClassRuling::dictator(0, Direction::Inverse, inner)});
    CHECK(validate_canonical(nested).ok);
}

TEST_CASE("named fixture dispatch") {
    auto ex1 = build_named(NamedConstruction::Example1);
    CHECK(std::holds_alternative<ExplicitSwf>(ex1));
    auto ex2 = build_named(NamedConstruction::Example2Pairwise);
    CHECK(std::holds_alternative<PairwiseSwf>(ex2));
    NamedParams params;
    params.states = 3;
    params.voters = 2;
    auto nul = build_named(NamedConstruction::NullSwf, params);
    CHECK(is_null(std::get<ExplicitSwf>(nul)));
    params.order = "a1<a0=a2";
    auto cst = build_named(NamedConstruction::ConstantOrder, params);
    CHECK(std::get<ExplicitSwf>(cst).output(0).rank_of(1) == 0);
    auto chain = build_named(NamedConstruction::VerbatimDictatorChain, params);
    CHECK(find_dictator(std::get<ExplicitSwf>(chain)).voter == 0);
}
