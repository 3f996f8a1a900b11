#ifndef SWFKIT_JSON_IO_HPP
#define SWFKIT_JSON_IO_HPP

#include <json.hpp>

#include "swfkit/construct.hpp"

// JSON formats for the file-based interfaces: explicit tables, pairwise
// tables, canonical descriptions, and axiom verdicts. nlohmann::json keeps
// object keys sorted, so serialization is deterministic.

namespace swfkit {

using Json = nlohmann::json;

// ---- pair relation symbols ----

inline Json pair_table_to_json(const PairTable& t) {
    Json arr = Json::array();
    for (PairRel r : t.out) arr.push_back(std::string(1, pair_rel_symbol(r)));
    return arr;
}

inline PairTable pair_table_from_json(const Json& arr, int voters) {
    if (!arr.is_array() || arr.size() != PairTable::table_size(voters))
        throw InputError("pair table must list 3^voters relation symbols");
    PairTable t{voters, {}};
    t.out.reserve(arr.size());
    for (const auto& e : arr) {
        std::string s = e.get<std::string>();
        if (s.size() != 1) throw InputError("pair relation symbol must be one of <, =, >");
        t.out.push_back(pair_rel_from_symbol(s[0]));
    }
    return t;
}

// ---- explicit SWF ----

inline Json to_json(const ExplicitSwf& f) {
    Json j;
    j["alts"] = f.alts().labels();
    j["voters"] = f.voters();
    Json table = Json::array();
    for (std::size_t pi = 0; pi < f.num_profiles(); ++pi)
        table.push_back(to_string(f.output(pi), f.alts()));
    j["table"] = std::move(table);
    return j;
}

inline ExplicitSwf explicit_swf_from_json(const Json& j) {
    auto uni = Universe::make(AltSet(j.at("alts").get<std::vector<std::string>>()));
    int voters = j.at("voters").get<int>();
    if (voters < 0) throw InputError("voters must be nonnegative");
    const Json& table = j.at("table");
    std::size_t expect = checked_profile_count(uni->num_orders(), voters);
    if (!table.is_array() || table.size() != expect)
        throw InputError("table must list one output order per profile");
    std::vector<std::int32_t> entries;
    entries.reserve(table.size());
    for (const auto& e : table)
        entries.push_back(
            static_cast<std::int32_t>(uni->index_of(parse_weak_order(e.get<std::string>(), uni->alts()))));
    return ExplicitSwf(std::move(uni), voters, std::move(entries));
}

// ---- pairwise SWF ----

inline Json to_json(const PairwiseSwf& pw) {
    Json j;
    j["alts"] = pw.alts().labels();
    j["voters"] = pw.voters();
    Json pairs = Json::array();
    int s = pw.num_alts();
    for (int i = 0; i < s; ++i)
        for (int k = i + 1; k < s; ++k) {
            Json entry;
            entry["pair"] = {pw.alts().label(i), pw.alts().label(k)};
            entry["table"] = pair_table_to_json(pw.table_for(i, k));
            pairs.push_back(std::move(entry));
        }
    j["pairs"] = std::move(pairs);
    return j;
}

inline PairwiseSwf pairwise_swf_from_json(const Json& j) {
    auto uni = Universe::make(AltSet(j.at("alts").get<std::vector<std::string>>()));
    int voters = j.at("voters").get<int>();
    int s = uni->num_alts();
    const Json& pairs = j.at("pairs");
    if (!pairs.is_array() || pairs.size() != pair_count(s))
        throw InputError("pairwise SWF must list one entry per unordered pair");
    std::vector<PairTable> tables(pair_count(s));
    std::vector<bool> seen(pair_count(s), false);
    for (const auto& entry : pairs) {
        auto labels = entry.at("pair").get<std::vector<std::string>>();
        if (labels.size() != 2) throw InputError("pair must name two alternatives");
        int a = uni->alts().index_of(labels[0]);
        int b = uni->alts().index_of(labels[1]);
        if (a >= b) throw InputError("pair must be listed in alternative index order");
        std::size_t slot = pair_slot(s, a, b);
        if (seen[slot]) throw InputError("duplicate pair entry");
        seen[slot] = true;
        tables[slot] = pair_table_from_json(entry.at("table"), voters);
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw InputError("missing pair entry");
    return PairwiseSwf(std::move(uni), voters, std::move(tables));
}

// ---- canonical descriptions ----
// Alternatives are referenced by label; the caller supplies the label set a
// description is over (nested descriptions are over their class's members).

inline Json description_to_json(const CdDescription& d, const AltSet& alts) {
    if (alts.size() != d.num_alts) throw InputError("label set does not match the description");
    Json j;
    switch (d.kind) {
        case CdDescription::Kind::Unit:
            j["kind"] = "unit";
            return j;
        case CdDescription::Kind::Leaf:
            j["kind"] = "leaf";
            j["pair"] = {alts.label(0), alts.label(1)};
            j["table"] = pair_table_to_json(d.leaf_table);
            return j;
        case CdDescription::Kind::Layered: {
            j["kind"] = "layered";
            j["cleric"] = to_string(d.cleric, alts);
            Json classes = Json::array();
            auto blocks = d.cleric.blocks();
            for (std::size_t c = 0; c < blocks.size(); ++c) {
                Json entry;
                Json members = Json::array();
                for (int m : blocks[c]) members.push_back(alts.label(m));
                entry["members"] = std::move(members);
                const ClassRuling& ruling = d.classes[c];
                Json rj;
                switch (ruling.kind) {
                    case ClassRuling::Kind::Singleton:
                        rj["kind"] = "singleton";
                        break;
                    case ClassRuling::Kind::PairFn:
                        rj["kind"] = "pairfn";
                        rj["pair"] = {alts.label(blocks[c][0]), alts.label(blocks[c][1])};
                        rj["table"] = pair_table_to_json(ruling.pair_table);
                        break;
                    case ClassRuling::Kind::NullClass:
                        rj["kind"] = "null";
                        break;
                    case ClassRuling::Kind::Dictator:
                        rj["kind"] = "dictator";
                        rj["voter"] = ruling.voter;
                        rj["direction"] = to_string(ruling.direction);
                        rj["defer"] = description_to_json(*ruling.defer, alts.subset(blocks[c]));
                        break;
                }
                entry["ruling"] = std::move(rj);
                classes.push_back(std::move(entry));
            }
            j["classes"] = std::move(classes);
            return j;
        }
    }
    throw InputError("unknown description kind");
}

inline CdDescription description_from_json(const Json& j, const AltSet& alts, int voters) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "unit") {
        if (alts.size() != 1) throw InputError("unit description requires exactly one alternative");
        return CdDescription::unit(voters);
    }
    if (kind == "leaf") {
        if (alts.size() != 2) throw InputError("leaf description requires exactly two alternatives");
        auto labels = j.at("pair").get<std::vector<std::string>>();
        if (labels.size() != 2 || alts.index_of(labels[0]) != 0 || alts.index_of(labels[1]) != 1)
            throw InputError("leaf pair must list the two alternatives in index order");
        return CdDescription::leaf(pair_table_from_json(j.at("table"), voters));
    }
    if (kind == "layered") {
        if (alts.size() < 3) throw InputError("layered description requires three or more alternatives");
        WeakOrder cleric = parse_weak_order(j.at("cleric").get<std::string>(), alts);
        auto blocks = cleric.blocks();
        const Json& classes = j.at("classes");
        if (!classes.is_array() || classes.size() != blocks.size())
            throw InputError("one class entry per cleric class required");
        std::vector<ClassRuling> rulings;
        for (std::size_t c = 0; c < blocks.size(); ++c) {
            const Json& entry = classes[c];
            auto members = entry.at("members").get<std::vector<std::string>>();
            if (members.size() != blocks[c].size())
                throw InputError("class members do not match the cleric");
            for (std::size_t m = 0; m < members.size(); ++m)
                if (alts.index_of(members[m]) != blocks[c][m])
                    throw InputError("class members do not match the cleric");
            const Json& rj = entry.at("ruling");
            std::string rkind = rj.at("kind").get<std::string>();
            if (rkind == "singleton") {
                rulings.push_back(ClassRuling::singleton());
            } else if (rkind == "pairfn") {
                rulings.push_back(ClassRuling::pair_fn(pair_table_from_json(rj.at("table"), voters)));
            } else if (rkind == "null") {
                rulings.push_back(ClassRuling::null_class());
            } else if (rkind == "dictator") {
                int voter = rj.at("voter").get<int>();
                std::string dir = rj.at("direction").get<std::string>();
                if (dir != "verbatim" && dir != "inverse")
                    throw InputError("direction must be verbatim or inverse");
                auto defer = std::make_shared<const CdDescription>(description_from_json(
                    rj.at("defer"), alts.subset(blocks[c]), voters - 1));
                rulings.push_back(ClassRuling::dictator(
                    voter, dir == "verbatim" ? Direction::Verbatim : Direction::Inverse,
                    std::move(defer)));
            } else {
                throw InputError("unknown ruling kind: " + rkind);
            }
        }
        CdDescription d = CdDescription::layered(voters, std::move(cleric), std::move(rulings));
        auto report = validate_canonical(d);
        if (!report.ok) throw InputError("description is not canonical: " + report.violation);
        return d;
    }
    throw InputError("unknown description kind: " + kind);
}

// ---- witnesses and verdicts ----

inline Json profile_to_json(const Profile& p, const AltSet& alts) {
    Json arr = Json::array();
    for (const auto& w : p.prefs) arr.push_back(to_string(w, alts));
    return arr;
}

inline Json verdict_json(const std::string& axiom, bool holds, Json witness) {
    Json j;
    j["axiom"] = axiom;
    j["holds"] = holds;
    j["witness"] = holds ? Json(nullptr) : std::move(witness);
    return j;
}

inline Json witness_json(const NotIia& w, const AltSet& alts) {
    Json j;
    j["pair"] = {alts.label(w.x), alts.label(w.y)};
    j["profile_a"] = profile_to_json(w.profile_a, alts);
    j["profile_b"] = profile_to_json(w.profile_b, alts);
    return j;
}

inline Json witness_json(const WppViolation& w, const AltSet& alts) {
    Json j;
    j["pair"] = {alts.label(w.x), alts.label(w.y)};
    j["profile"] = profile_to_json(w.profile, alts);
    return j;
}

inline Json witness_json(const CsViolation& w, const AltSet& alts) {
    Json j;
    j["pair"] = {alts.label(w.x), alts.label(w.y)};
    j["fixed_direction"] = std::string(1, pair_rel_symbol(w.fixed_direction));
    return j;
}

inline Json witness_json(const NotTransitive& w, const AltSet& alts) {
    Json j;
    j["profile"] = profile_to_json(w.profile, alts);
    j["triple"] = {alts.label(w.triple[0]), alts.label(w.triple[1]), alts.label(w.triple[2])};
    return j;
}

}  // namespace swfkit

#endif  // SWFKIT_JSON_IO_HPP
