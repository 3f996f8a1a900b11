#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "swfkit/selftest.hpp"

// Command-line front end. stdout carries machine output only; diagnostics go
// to stderr. Exit codes: 0 success, 1 failed check or mismatch, 2 usage or
// input error, 3 budget or feasibility rejection.

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

swfkit::Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw swfkit::InputError("cannot open input file: " + path);
    return swfkit::Json::parse(in);
}

void write_json_file(const std::string& path, const swfkit::Json& j) {
    std::ofstream out(path);
    if (!out) throw swfkit::InputError("cannot open output file: " + path);
    out << j.dump() << '\n';
}

swfkit::EnumerationFilter parse_filter(const std::string& name) {
    if (name == "all") return swfkit::EnumerationFilter::All;
    if (name == "wpp") return swfkit::EnumerationFilter::WppShape;
    if (name == "cs") return swfkit::EnumerationFilter::CsShape;
    throw swfkit::InputError("unknown filter: " + name);
}

int run_count(const std::string& family, int states, int voters) {
    swfkit::BigInt value;
    if (family == "q")
        value = swfkit::q(states, voters);
    else if (family == "r")
        value = swfkit::r(states, voters);
    else if (family == "p")
        value = swfkit::p(states, voters);
    else if (family == "bell")
        value = swfkit::ordered_bell(states);
    else
        throw swfkit::InputError("unknown count family: " + family);
    std::cout << value << '\n';
    return kExitOk;
}

int run_enumerate(int states, int voters, const std::string& filter_name, bool stats) {
    swfkit::EnumerationFilter filter = parse_filter(filter_name);
    if (stats) {
        swfkit::EnumerationStats st = swfkit::enumeration_stats(states, voters, filter);
        swfkit::Json j;
        j["total"] = st.total.str();
        swfkit::Json by = swfkit::Json::object();
        for (const auto& [sig, n] : st.by_signature) by[sig] = n.str();
        j["by_signature"] = std::move(by);
        std::cout << j.dump() << '\n';
        return kExitOk;
    }
    auto alts = swfkit::AltSet::with_default_labels(states);
    swfkit::enumerate_descriptions(states, voters, filter, [&](const swfkit::CdDescription& d) {
        std::cout << swfkit::description_to_json(d, alts).dump() << '\n';
    });
    return kExitOk;
}

// Accepts either representation: explicit tables (key "table") or pairwise
// tables (key "pairs"). Pairwise inputs are combined into explicit form
// first, except for the transitivity check, which reports on the combination
// itself.
int run_check(const std::string& in_path, const std::string& axiom) {
    swfkit::Json input = read_json_file(in_path);
    bool pairwise_input = input.contains("pairs");

    if (axiom == "transitive") {
        if (!pairwise_input) {
            std::cout << swfkit::verdict_json("transitive", true, nullptr).dump() << '\n';
            return kExitOk;
        }
        swfkit::PairwiseSwf pw = swfkit::pairwise_swf_from_json(input);
        auto result = swfkit::to_explicit(pw);
        if (const auto* w = std::get_if<swfkit::NotTransitive>(&result)) {
            std::cout << swfkit::verdict_json("transitive", false,
                                              swfkit::witness_json(*w, pw.alts()))
                             .dump()
                      << '\n';
            return kExitCheckFailed;
        }
        std::cout << swfkit::verdict_json("transitive", true, nullptr).dump() << '\n';
        return kExitOk;
    }

    swfkit::ExplicitSwf f = [&] {
        if (!pairwise_input) return swfkit::explicit_swf_from_json(input);
        auto result = swfkit::to_explicit(swfkit::pairwise_swf_from_json(input));
        if (std::holds_alternative<swfkit::NotTransitive>(result))
            throw swfkit::InputError("pairwise input combines intransitively; cannot check " + axiom);
        return std::get<swfkit::ExplicitSwf>(std::move(result));
    }();

    swfkit::Json verdict;
    bool holds = false;
    if (axiom == "iia") {
        auto v = swfkit::check_iia(f);
        holds = v.holds;
        verdict = swfkit::verdict_json("iia", holds,
                                       holds ? swfkit::Json(nullptr)
                                             : swfkit::witness_json(*v.witness, f.alts()));
    } else if (axiom == "wpp") {
        auto v = swfkit::check_wpp(f);
        holds = v.holds;
        verdict = swfkit::verdict_json("wpp", holds,
                                       holds ? swfkit::Json(nullptr)
                                             : swfkit::witness_json(*v.witness, f.alts()));
    } else if (axiom == "cs") {
        auto v = swfkit::check_cs(f);
        holds = v.holds;
        verdict = swfkit::verdict_json("cs", holds,
                                       holds ? swfkit::Json(nullptr)
                                             : swfkit::witness_json(*v.witness, f.alts()));
    } else if (axiom == "null") {
        holds = swfkit::is_null(f);
        swfkit::Json witness(nullptr);
        if (!holds) {
            for (std::size_t pi = 0; pi < f.num_profiles(); ++pi) {
                if (!f.output(pi).is_all_equal()) {
                    witness = swfkit::Json{
                        {"profile", swfkit::profile_to_json(f.profile_at(pi), f.alts())},
                        {"output", swfkit::to_string(f.output(pi), f.alts())}};
                    break;
                }
            }
        }
        verdict = swfkit::verdict_json("null", holds, std::move(witness));
    } else if (axiom == "dictatorial") {
        swfkit::DictatorFinding fd = swfkit::find_dictator(f);
        holds = fd.voter.has_value();
        swfkit::Json witness(nullptr);
        if (holds)
            witness = swfkit::Json{{"voter", *fd.voter},
                                   {"direction", swfkit::to_string(fd.direction)}};
        verdict = swfkit::verdict_json("dictatorial", holds, std::move(witness));
    } else {
        throw swfkit::InputError("unknown axiom: " + axiom);
    }
    std::cout << verdict.dump() << '\n';
    return holds ? kExitOk : kExitCheckFailed;
}

int run_decompose(const std::string& in_path, const std::string& out_path) {
    swfkit::ExplicitSwf f = swfkit::explicit_swf_from_json(read_json_file(in_path));
    try {
        swfkit::CdDescription d = swfkit::decompose(f);
        write_json_file(out_path, swfkit::description_to_json(d, f.alts()));
        return kExitOk;
    } catch (const swfkit::NotIiaError& e) {
        swfkit::Json j = swfkit::verdict_json("iia", false, swfkit::witness_json(e.witness, f.alts()));
        std::cerr << "decompose: " << e.what() << ": " << j.dump() << '\n';
        return kExitCheckFailed;
    }
}

int run_reconstruct(const std::string& in_path, int states, int voters,
                    const std::string& out_path, const std::string& alts_csv) {
    swfkit::AltSet alts = [&] {
        if (alts_csv.empty()) return swfkit::AltSet::with_default_labels(states);
        std::vector<std::string> labels;
        std::string token;
        for (char c : alts_csv) {
            if (c == ',') {
                labels.push_back(token);
                token.clear();
            } else {
                token += c;
            }
        }
        labels.push_back(token);
        return swfkit::AltSet(std::move(labels));
    }();
    if (alts.size() != states) throw swfkit::InputError("--alts must list exactly --states labels");
    swfkit::CdDescription d = swfkit::description_from_json(read_json_file(in_path), alts, voters);
    auto uni = swfkit::Universe::make(alts);
    swfkit::ExplicitSwf f = swfkit::reconstruct(d, uni);
    write_json_file(out_path, swfkit::to_json(f));
    return kExitOk;
}

int run_oracle(int states, int voters, bool compare, bool emit) {
    auto uni = swfkit::Universe::make(swfkit::AltSet::with_default_labels(states));
    if (compare) {
        swfkit::OracleComparison cmp = swfkit::compare_with_construct(uni, voters);
        std::cout << cmp.oracle_count << (cmp.equal ? " == " : " != ") << cmp.construct_count
                  << '\n';
        return cmp.equal ? kExitOk : kExitCheckFailed;
    }
    swfkit::OracleResult result = swfkit::brute_force_iia(uni, voters);
    if (emit) {
        for (const auto& table : result.tables) {
            swfkit::ExplicitSwf f(uni, voters, table);
            std::cout << swfkit::to_json(f).dump() << '\n';
        }
        return kExitOk;
    }
    std::cout << result.count() << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Social welfare function toolkit: counting, enumeration, axiom checks,"
                 " decomposition, and brute-force verification"};
    app.require_subcommand(1);
    int threads = 1;  // accepted for interface stability; results never depend on it
    app.add_option("--threads", threads, "Parallelism bound (results are identical for any value)")
        ->check(CLI::PositiveNumber);

    std::string count_family, filter_name = "all", axiom, in_path, out_path, alts_csv;
    int states = 0, voters = 0;
    bool stats = false, compare = false, emit = false;

    CLI::App* count = app.add_subcommand("count", "Print one exact count in decimal");
    count->add_option("family", count_family, "q, r, p, or bell")->required();
    count->add_option("--states", states, "number of alternatives")->required();
    count->add_option("--voters", voters, "number of voters")->default_val(0);

    CLI::App* enumerate = app.add_subcommand("enumerate", "Stream canonical descriptions as JSON lines");
    enumerate->add_option("--states", states)->required();
    enumerate->add_option("--voters", voters)->required();
    enumerate->add_option("--filter", filter_name, "all, wpp, or cs")->default_val("all");
    enumerate->add_flag("--stats", stats, "print aggregate counts instead of the stream");

    CLI::App* check = app.add_subcommand("check", "Check one axiom of an SWF file");
    check->add_option("--in", in_path)->required();
    check->add_option("--axiom", axiom, "iia, wpp, cs, null, dictatorial, or transitive")->required();

    CLI::App* decompose = app.add_subcommand("decompose", "Write the canonical description of an IIA SWF");
    decompose->add_option("--in", in_path)->required();
    decompose->add_option("--out", out_path)->required();

    CLI::App* reconstruct = app.add_subcommand("reconstruct", "Tabulate a canonical description");
    reconstruct->add_option("--in", in_path)->required();
    reconstruct->add_option("--states", states)->required();
    reconstruct->add_option("--voters", voters)->required();
    reconstruct->add_option("--out", out_path)->required();
    reconstruct->add_option("--alts", alts_csv, "comma-separated labels (default a0,a1,...)");

    CLI::App* oracle = app.add_subcommand("oracle", "Brute-force search for all IIA functions");
    oracle->add_option("--states", states)->required();
    oracle->add_option("--voters", voters)->required();
    oracle->add_flag("--compare", compare, "compare against the canonical enumeration");
    oracle->add_flag("--emit", emit, "stream the explicit tables as JSON lines");

    CLI::App* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*count) return run_count(count_family, states, voters);
        if (*enumerate) return run_enumerate(states, voters, filter_name, stats);
        if (*check) return run_check(in_path, axiom);
        if (*decompose) return run_decompose(in_path, out_path);
        if (*reconstruct) return run_reconstruct(in_path, states, voters, out_path, alts_csv);
        if (*oracle) return run_oracle(states, voters, compare, emit);
        if (*selftest) return swfkit::print_acceptance_report(std::cout) == 0 ? kExitOk : kExitCheckFailed;
    } catch (const swfkit::BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const swfkit::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const swfkit::Json::exception& e) {
        std::cerr << "error: invalid JSON input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}
