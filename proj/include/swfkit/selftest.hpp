#ifndef SWFKIT_SELFTEST_HPP
#define SWFKIT_SELFTEST_HPP

#include <chrono>
#include <ostream>
#include <sstream>

#include "swfkit/json_io.hpp"
#include "swfkit/oracle.hpp"

// The acceptance suite: end-to-end checks tying the enumeration, the
// decomposer, the counting formulas, and the brute-force oracle together.
// Shared by the `selftest` CLI subcommand and the acceptance test binary.

namespace swfkit {

struct AcceptanceCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::string with_time(std::string detail, double seconds) {
    std::ostringstream os;
    os << detail << " [" << std::fixed;
    os.precision(2);
    os << seconds << "s]";
    return os.str();
}

inline bool chain_steps_equal(const DecompositionChain& a, const DecompositionChain& b) {
    if (a.steps.size() != b.steps.size()) return false;
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        const ChainStep& x = a.steps[i];
        const ChainStep& y = b.steps[i];
        if (x.alt_members != y.alt_members || x.voter_ids != y.voter_ids || !(x.fn == y.fn) ||
            x.seed_class != y.seed_class || x.dictator != y.dictator)
            return false;
        if (x.dictator && x.direction != y.direction) return false;
    }
    return true;
}

}  // namespace detail

inline std::vector<AcceptanceCheck> run_acceptance_suite() {
    using clock = std::chrono::steady_clock;
    std::vector<AcceptanceCheck> checks;
    auto add = [&](std::string name, bool pass, std::string detail) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    };

    auto uni3 = Universe::make(AltSet::with_default_labels(3));
    auto uni4 = Universe::make(AltSet::with_default_labels(4));

    // 1. Weak order counts for 1..6 alternatives.
    {
        auto t0 = clock::now();
        const long expected[] = {1, 3, 13, 75, 541, 4683};
        bool ok = true;
        std::ostringstream d;
        for (int s = 1; s <= 6; ++s) {
            std::size_t n = enumerate_weak_orders(AltSet::with_default_labels(s)).size();
            if (n != static_cast<std::size_t>(expected[s - 1]) || ordered_bell(s) != expected[s - 1])
                ok = false;
            d << (s > 1 ? "," : "") << n;
        }
        double el = detail::seconds_since(t0);
        add("weak-order-counts-1-to-6", ok && el < 1.0, detail::with_time(d.str(), el));
    }

    // 2. Brute-force search equals the canonical enumeration at (3, 1).
    {
        auto t0 = clock::now();
        OracleComparison cmp = compare_with_construct(uni3, 1);
        double el = detail::seconds_since(t0);
        bool ok = cmp.equal && cmp.oracle_count == 183 && cmp.construct_count == 183 &&
                  q(3, 1) == 183 && el < 10.0;
        std::ostringstream d;
        d << "oracle " << cmp.oracle_count << (cmp.equal ? " == " : " != ") << "constructed "
          << cmp.construct_count;
        add("oracle-equals-enumeration-3-1", ok, detail::with_time(d.str(), el));
    }

    // Shared sweep over the full enumeration at (3, <=2) and (4, <=1).
    struct Sweep {
        std::size_t count = 0;
        std::size_t roundtrip_failures = 0;
        std::size_t iia_failures = 0;
    };
    std::map<std::pair<int, int>, Sweep> sweeps;
    std::set<std::vector<std::int32_t>> wpp_semantic, cs_semantic;
    std::size_t oracle_roundtrip_failures = 0;
    auto t_sweep = clock::now();
    {
        OracleResult oracle = brute_force_iia(uni3, 1);
        for (const auto& tbl : oracle.tables) {
            ExplicitSwf f(uni3, 1, tbl);
            if (!(reconstruct(decompose(f), uni3) == f)) ++oracle_roundtrip_failures;
        }
    }
    for (auto [s, v] : {std::pair{3, 0}, {3, 1}, {3, 2}, {4, 0}, {4, 1}}) {
        const auto& uni = s == 3 ? uni3 : uni4;
        Sweep sw;
        enumerate_descriptions(s, v, EnumerationFilter::All, [&](const CdDescription& d) {
            ++sw.count;
            ExplicitSwf f = reconstruct(d, uni);
            if (!(decompose(f) == d)) ++sw.roundtrip_failures;
            if (!check_iia(f).holds) ++sw.iia_failures;
            if (s == 3 && v == 2) {
                if (check_wpp(f).holds) wpp_semantic.insert(f.table());
                if (check_cs(f).holds) cs_semantic.insert(f.table());
            }
        });
        sweeps[{s, v}] = sw;
    }
    double sweep_el = detail::seconds_since(t_sweep);

    // 3. Round-trips: decompose then reconstruct, and the converse, exact.
    {
        std::size_t rt_failures = oracle_roundtrip_failures;
        std::size_t total = 183;
        for (const auto& [key, sw] : sweeps) {
            rt_failures += sw.roundtrip_failures;
            total += sw.count;
        }
        std::ostringstream d;
        d << total << " round-trips, " << rt_failures << " failures";
        add("decompose-reconstruct-round-trips", rt_failures == 0 && sweep_el < 300.0,
            detail::with_time(d.str(), sweep_el));
    }

    // 4. Every reconstructed description passes the IIA check.
    {
        std::size_t failures = 0, total = 0;
        for (const auto& [key, sw] : sweeps) {
            failures += sw.iia_failures;
            total += sw.count;
        }
        std::ostringstream d;
        d << total << " reconstructions, " << failures << " IIA failures";
        add("reconstructed-functions-satisfy-iia", failures == 0, d.str());
    }

    // Filtered streams at (3, 2) and (3, 1), with reconstructed tables for
    // the shape-vs-axiom comparison.
    std::set<std::vector<std::int32_t>> wpp_shape, cs_shape;
    std::size_t n_wpp32 = 0, n_cs32 = 0, n_wpp31 = 0, n_cs31 = 0;
    enumerate_descriptions(3, 2, EnumerationFilter::WppShape, [&](const CdDescription& d) {
        ++n_wpp32;
        wpp_shape.insert(reconstruct(d, uni3).table());
    });
    enumerate_descriptions(3, 2, EnumerationFilter::CsShape, [&](const CdDescription& d) {
        ++n_cs32;
        cs_shape.insert(reconstruct(d, uni3).table());
    });
    enumerate_descriptions(3, 1, EnumerationFilter::WppShape,
                           [&](const CdDescription&) { ++n_wpp31; });
    enumerate_descriptions(3, 1, EnumerationFilter::CsShape,
                           [&](const CdDescription&) { ++n_cs31; });

    // 5. Stream lengths equal the counting formulas.
    {
        bool ok = sweeps[{3, 2}].count == 118825 && q(3, 2) == 118825 && q3_literal(2) == 118825 &&
                  sweeps[{4, 1}].count == 5041 && q(4, 1) == 5041 && q4_literal(1) == 5041 &&
                  n_wpp32 == 366 && r(3, 2) == 366 && n_cs32 == 733 && p(3, 2) == 733 &&
                  n_wpp31 == 13 && r(3, 1) == 13 && n_cs31 == 27 && p(3, 1) == 27;
        std::ostringstream d;
        d << "q(3,2)=" << sweeps[{3, 2}].count << " q(4,1)=" << sweeps[{4, 1}].count
          << " r(3,2)=" << n_wpp32 << " p(3,2)=" << n_cs32 << " r(3,1)=" << n_wpp31
          << " p(3,1)=" << n_cs31;
        add("enumeration-counts-match-formulas", ok, d.str());
    }

    // 6. Shape filters agree with the semantic axiom checkers at (3, 2).
    {
        bool ok = wpp_shape == wpp_semantic && wpp_shape.size() == 366 &&
                  cs_shape == cs_semantic && cs_shape.size() == 733;
        std::ostringstream d;
        d << "unanimity-respecting " << wpp_semantic.size() << "/" << wpp_shape.size()
          << ", sovereignty-respecting " << cs_semantic.size() << "/" << cs_shape.size()
          << " (semantic/shape)";
        add("shape-filters-match-axiom-checks", ok, d.str());
    }

    // 7. First fixture: dictatorial (voter 0, verbatim), unanimity holds,
    //    IIA fails with a witness that re-verifies.
    {
        ExplicitSwf ex1 = example1_swf();
        DictatorFinding fd = find_dictator(ex1);
        bool dict_ok = fd.voter.has_value() && *fd.voter == 0 && fd.direction == Direction::Verbatim;
        bool wpp_ok = check_wpp(ex1).holds;
        IiaVerdict iv = check_iia(ex1);
        bool witness_ok = false;
        if (!iv.holds && iv.witness) {
            const NotIia& w = *iv.witness;
            witness_ok = true;
            for (int voter = 0; voter < ex1.voters(); ++voter)
                if (pair_relation(w.profile_a.prefs[static_cast<std::size_t>(voter)], w.x, w.y) !=
                    pair_relation(w.profile_b.prefs[static_cast<std::size_t>(voter)], w.x, w.y))
                    witness_ok = false;
            if (pair_relation(ex1.eval(w.profile_a), w.x, w.y) ==
                pair_relation(ex1.eval(w.profile_b), w.x, w.y))
                witness_ok = false;
        }
        std::ostringstream d;
        d << "dictator=" << (dict_ok ? "voter 0 verbatim" : "wrong") << ", unanimity="
          << (wpp_ok ? "holds" : "fails") << ", IIA witness "
          << (witness_ok ? "re-verified" : "missing or invalid");
        add("dictatorial-but-not-iia-fixture", dict_ok && wpp_ok && witness_ok, d.str());
    }

    // 8. Second fixture: pairwise tables with unanimity whose combination is
    //    intransitive exactly at (all-equal, x<y<z) with the cycle
    //    x<y, y<z, z<x.
    {
        PairwiseSwf ex2 = example2_pairwise();
        bool unanimity = true;
        std::vector<PairRel> all_less(2, PairRel::Less), all_greater(2, PairRel::Greater);
        for (const PairTable& t : ex2.tables())
            if (t.lookup(all_less) != PairRel::Less || t.lookup(all_greater) != PairRel::Greater)
                unanimity = false;
        auto result = to_explicit(ex2);
        bool cycle_ok = false;
        if (const auto* w = std::get_if<NotTransitive>(&result)) {
            Profile want{{WeakOrder::all_equal(3), parse_weak_order("x<y<z", ex2.alts())}};
            CompleteRelation rel = combine(ex2, w->profile);
            cycle_ok = w->profile == want && rel.get(0, 1) == PairRel::Less &&
                       rel.get(1, 2) == PairRel::Less && rel.get(0, 2) == PairRel::Greater;
        }
        std::ostringstream d;
        d << "unanimity=" << (unanimity ? "holds" : "fails") << ", intransitive witness "
          << (cycle_ok ? "at the expected profile with cycle x<y, y<z, z<x" : "wrong or missing");
        add("intransitive-pairwise-fixture", unanimity && cycle_ok, d.str());
    }

    // 9. Structure of the seed-state decomposition chain, over every IIA
    //    function at (3, 1) plus 1000 deterministically sampled at (3, 2):
    //    fixed relation transitive; chain length at most voters+1; terminal
    //    element null or over at most two states; each dictator step's next
    //    element is exactly the extracted deferral; seeds in the same class
    //    share the whole chain.
    {
        auto t0 = clock::now();
        std::size_t n_funcs = 0, cleric_failures = 0, length_failures = 0, terminal_failures = 0,
                    deferral_failures = 0, tail_failures = 0;
        auto check_fn = [&](const ExplicitSwf& f) {
            ++n_funcs;
            ClericResult cl = compute_cleric(f);
            if (!cl.transitivity.transitive) {
                ++cleric_failures;
                return;
            }
            WeakOrder cleric_order = weak_order_from_relation(cl.cleric);
            std::vector<DecompositionChain> chains;
            chains.reserve(static_cast<std::size_t>(f.num_alts()));
            for (int seed = 0; seed < f.num_alts(); ++seed) {
                DecompositionChain ch = build_chain(f, seed);
                if (ch.steps.size() > static_cast<std::size_t>(f.voters()) + 1) ++length_failures;
                const ExplicitSwf& last = ch.steps.back().fn;
                if (!(is_null(last) || last.num_alts() <= 2)) ++terminal_failures;
                for (std::size_t i = 0; i + 1 < ch.steps.size(); ++i) {
                    const ChainStep& st = ch.steps[i];
                    std::vector<int> local;
                    local.reserve(st.seed_class.size());
                    for (int orig : st.seed_class) {
                        auto it = std::find(st.alt_members.begin(), st.alt_members.end(), orig);
                        local.push_back(static_cast<int>(it - st.alt_members.begin()));
                    }
                    auto restricted = restrict_swf(st.fn, local);
                    const ExplicitSwf& fa = std::get<ExplicitSwf>(restricted);
                    if (st.dictator) {
                        auto vit = std::find(st.voter_ids.begin(), st.voter_ids.end(), *st.dictator);
                        int lv = static_cast<int>(vit - st.voter_ids.begin());
                        try {
                            if (!(extract_deferred(fa, lv) == ch.steps[i + 1].fn))
                                ++deferral_failures;
                        } catch (const DeferralError&) {
                            ++deferral_failures;
                        }
                    } else if (!(fa == ch.steps[i + 1].fn)) {
                        ++deferral_failures;
                    }
                }
                chains.push_back(std::move(ch));
            }
            for (int a = 0; a < f.num_alts(); ++a)
                for (int b = a + 1; b < f.num_alts(); ++b)
                    if (cleric_order.rank_of(a) == cleric_order.rank_of(b) &&
                        !detail::chain_steps_equal(chains[static_cast<std::size_t>(a)],
                                                   chains[static_cast<std::size_t>(b)]))
                        ++tail_failures;
        };
        enumerate_descriptions(3, 1, EnumerationFilter::All,
                               [&](const CdDescription& d) { check_fn(reconstruct(d, uni3)); });
        {
            std::size_t idx = 0, taken = 0;
            constexpr std::size_t kStride = 118;  // 118825 descriptions, ~1000 samples
            enumerate_descriptions(3, 2, EnumerationFilter::All, [&](const CdDescription& d) {
                if (idx++ % kStride == 0 && taken < 1000) {
                    ++taken;
                    check_fn(reconstruct(d, uni3));
                }
            });
        }
        double el = detail::seconds_since(t0);
        bool ok = cleric_failures == 0 && length_failures == 0 && terminal_failures == 0 &&
                  deferral_failures == 0 && tail_failures == 0;
        std::ostringstream d;
        d << n_funcs << " functions: fixed-relation failures " << cleric_failures
          << ", length-bound failures " << length_failures << ", terminal failures "
          << terminal_failures << ", deferral failures " << deferral_failures
          << ", shared-chain failures " << tail_failures;
        add("decomposition-chain-structure", ok, detail::with_time(d.str(), el));
    }

    // 10. The enumeration stream at (3, 2) is byte-identical across runs.
    {
        auto t0 = clock::now();
        auto fingerprint = [&] {
            std::uint64_t h = 1469598103934665603ull;
            std::size_t bytes = 0;
            auto alts = AltSet::with_default_labels(3);
            enumerate_descriptions(3, 2, EnumerationFilter::All, [&](const CdDescription& d) {
                std::string line = description_to_json(d, alts).dump();
                line += '\n';
                for (unsigned char c : line) {
                    h ^= c;
                    h *= 1099511628211ull;
                }
                bytes += line.size();
            });
            return std::make_pair(h, bytes);
        };
        auto a = fingerprint();
        auto b = fingerprint();
        double el = detail::seconds_since(t0);
        std::ostringstream d;
        d << a.second << " bytes, fingerprints " << (a == b ? "identical" : "differ");
        add("deterministic-enumeration-stream", a == b, detail::with_time(d.str(), el));
    }

    return checks;
}

// Prints one PASS/FAIL line per check; returns the number of failures.
inline int print_acceptance_report(std::ostream& out) {
    int failures = 0;
    for (const AcceptanceCheck& c : run_acceptance_suite()) {
        out << (c.pass ? "PASS" : "FAIL") << ' ' << c.name;
        if (!c.detail.empty()) out << " -- " << c.detail;
        out << '\n';
        if (!c.pass) ++failures;
    }
    return failures;
}

}  // namespace swfkit

#endif  // SWFKIT_SELFTEST_HPP
