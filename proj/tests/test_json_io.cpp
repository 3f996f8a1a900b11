#include <doctest.h>

#include "swfkit/json_io.hpp"

using namespace swfkit;

TEST_CASE("explicit SWF JSON round trip") {
    auto uni = Universe::make(AltSet({"x", "y", "z"}));
    ExplicitSwf f = verbatim_dictator_chain(uni, 2);
    Json j = to_json(f);
    CHECK(j["alts"] == Json::array({"x", "y", "z"}));
    CHECK(j["voters"] == 2);
    CHECK(j["table"].size() == 169);
    ExplicitSwf back = explicit_swf_from_json(j);
    CHECK(back == f);

    j["table"].erase(0);
    CHECK_THROWS_AS(explicit_swf_from_json(j), InputError);
}

TEST_CASE("pairwise SWF JSON round trip") {
    PairwiseSwf pw = example2_pairwise();
    Json j = to_json(pw);
    CHECK(j["pairs"].size() == 3);
    CHECK(j["pairs"][0]["pair"] == Json::array({"x", "y"}));
    CHECK(j["pairs"][0]["table"].size() == 9);
    PairwiseSwf back = pairwise_swf_from_json(j);
    CHECK(back == pw);

    j["pairs"][1]["pair"] = Json::array({"z", "x"});  // wrong order
    CHECK_THROWS_AS(pairwise_swf_from_json(j), InputError);
}

TEST_CASE("description JSON round trip") {
    auto alts = AltSet::with_default_labels(3);
    auto uni = Universe::make(alts);
    CdDescription d = decompose(verbatim_dictator_chain(uni, 2));
    Json j = description_to_json(d, alts);
    CHECK(j["kind"] == "layered");
    CHECK(j["cleric"] == "a0=a1=a2");
    CHECK(j["classes"][0]["members"] == Json::array({"a0", "a1", "a2"}));
    CHECK(j["classes"][0]["ruling"]["kind"] == "dictator");
    CHECK(j["classes"][0]["ruling"]["voter"] == 0);
    CHECK(j["classes"][0]["ruling"]["direction"] == "verbatim");
    CHECK(j["classes"][0]["ruling"]["defer"]["kind"] == "layered");
    CdDescription back = description_from_json(j, alts, 2);
    CHECK(back == d);
}

TEST_CASE("unit and leaf description JSON") {
    auto alts1 = AltSet::with_default_labels(1);
    Json u = description_to_json(CdDescription::unit(2), alts1);
    CHECK(u == Json{{"kind", "unit"}});
    CHECK(description_from_json(u, alts1, 2) == CdDescription::unit(2));

    auto alts2 = AltSet({"p", "q"});
    PairTable t{1, {PairRel::Less, PairRel::Equal, PairRel::Greater}};
    CdDescription leaf = CdDescription::leaf(t);
    Json j = description_to_json(leaf, alts2);
    CHECK(j["pair"] == Json::array({"p", "q"}));
    CHECK(j["table"] == Json::array({"<", "=", ">"}));
    CHECK(description_from_json(j, alts2, 1) == leaf);
}

TEST_CASE("description parsing enforces canonicality") {
    auto alts = AltSet::with_default_labels(3);
    Json j = {
        {"kind", "layered"},
        {"cleric", "a0=a1<a2"},
        {"classes",
         Json::array({Json{{"members", Json::array({"a0", "a1"})},
                           {"ruling", Json{{"kind", "pairfn"},
                                           {"pair", Json::array({"a0", "a1"})},
                                           {"table", Json::array({"<", "<", "<"})}}}},
                      Json{{"members", Json::array({"a2"})},
                           {"ruling", Json{{"kind", "singleton"}}}}})},
    };
    CHECK_THROWS_AS(description_from_json(j, alts, 1), InputError);  // constant-strict pair
    j["classes"][0]["ruling"]["table"] = Json::array({"<", "=", ">"});
    CHECK(validate_canonical(description_from_json(j, alts, 1)).ok);
}

TEST_CASE("verdict and witness JSON shapes") {
    ExplicitSwf f = example1_swf();
    auto v = check_iia(f);
    REQUIRE(!v.holds);
    Json j = verdict_json("iia", v.holds, witness_json(*v.witness, f.alts()));
    CHECK(j["axiom"] == "iia");
    CHECK(j["holds"] == false);
    CHECK(j["witness"]["pair"].size() == 2);
    CHECK(j["witness"]["profile_a"].size() == 2);

    Json ok = verdict_json("wpp", true, Json{{"ignored", 1}});
    CHECK(ok["witness"].is_null());
}

TEST_CASE("serialization is deterministic") {
    auto alts = AltSet::with_default_labels(3);
    auto uni = Universe::make(alts);
    CdDescription d = decompose(ExplicitSwf::null_swf(uni, 1));
    CHECK(description_to_json(d, alts).dump() == description_to_json(d, alts).dump());
}
