#ifndef SWFKIT_AXIOMS_HPP
#define SWFKIT_AXIOMS_HPP

#include "swfkit/swf.hpp"

// Checkers, with re-checkable witnesses, for the axioms and structural
// properties of explicit SWFs: IIA, the weak Pareto principle, citizens'
// sovereignty, nullness, dictatorship, the fixed "cleric" relation C(f),
// and extraction of the function a dictator defers to.

namespace swfkit {

template <typename Witness>
struct Verdict {
    bool holds = false;
    std::optional<Witness> witness;  // present iff !holds

    static Verdict ok() { return {true, std::nullopt}; }
    static Verdict fail(Witness w) { return {false, std::move(w)}; }
};

struct WppViolation {
    int x = 0, y = 0;  // every voter ranks x strictly below y, the output does not
    Profile profile;
};

struct CsViolation {
    int x = 0, y = 0;        // the pair with a fixed strict output
    PairRel fixed_direction = PairRel::Less;
};

using IiaVerdict = Verdict<NotIia>;
using WppVerdict = Verdict<WppViolation>;
using CsVerdict = Verdict<CsViolation>;

inline IiaVerdict check_iia(const ExplicitSwf& f) {
    auto result = to_pairwise(f);
    if (auto* violation = std::get_if<NotIia>(&result)) return IiaVerdict::fail(*violation);
    return IiaVerdict::ok();
}

// WPP: unanimous strict preference on a pair forces the same strict output.
// Vacuous with no voters.
inline WppVerdict check_wpp(const ExplicitSwf& f) {
    int s = f.num_alts();
    int n = f.voters();
    if (n == 0) return WppVerdict::ok();
    const auto& uni = *f.universe();
    for (std::size_t pi = 0; pi < f.num_profiles(); ++pi) {
        auto digits = profile_digits_from_index(pi, uni.num_orders(), n);
        const WeakOrder& out = f.output(pi);
        for (int i = 0; i < s; ++i) {
            for (int j = i + 1; j < s; ++j) {
                PairRel first = pair_relation(uni.order(digits[0]), i, j);
                if (first == PairRel::Equal) continue;
                bool unanimous = true;
                for (int v = 1; v < n && unanimous; ++v)
                    unanimous = pair_relation(uni.order(digits[static_cast<std::size_t>(v)]), i, j) == first;
                if (unanimous && pair_relation(out, i, j) != first) {
                    if (first == PairRel::Less) return WppVerdict::fail({i, j, f.profile_at(pi)});
                    return WppVerdict::fail({j, i, f.profile_at(pi)});
                }
            }
        }
    }
    return WppVerdict::ok();
}

// CS: for every pair, both weak directions occur somewhere in the table.
inline CsVerdict check_cs(const ExplicitSwf& f) {
    int s = f.num_alts();
    std::vector<bool> leq_fwd(pair_count(s), false);  // some output has x <= y
    std::vector<bool> leq_bwd(pair_count(s), false);  // some output has y <= x
    for (std::size_t pi = 0; pi < f.num_profiles(); ++pi) {
        const WeakOrder& out = f.output(pi);
        for (int i = 0; i < s; ++i) {
            for (int j = i + 1; j < s; ++j) {
                PairRel r = pair_relation(out, i, j);
                if (r != PairRel::Greater) leq_fwd[pair_slot(s, i, j)] = true;
                if (r != PairRel::Less) leq_bwd[pair_slot(s, i, j)] = true;
            }
        }
    }
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            if (!leq_bwd[pair_slot(s, i, j)]) return CsVerdict::fail({i, j, PairRel::Less});
            if (!leq_fwd[pair_slot(s, i, j)]) return CsVerdict::fail({i, j, PairRel::Greater});
        }
    return CsVerdict::ok();
}

inline bool is_null(const ExplicitSwf& f) {
    const auto& uni = *f.universe();
    int eq = uni.index_of(WeakOrder::all_equal(uni.num_alts()));
    return std::all_of(f.table().begin(), f.table().end(),
                       [&](std::int32_t t) { return t == eq; });
}

struct ClericResult {
    CompleteRelation cleric;          // x <= y iff some output ranks x <= y
    TransitivityCheck transitivity;   // transitive whenever f is IIA
};

inline ClericResult compute_cleric(const ExplicitSwf& f) {
    int s = f.num_alts();
    std::vector<bool> leq_fwd(pair_count(s), false);
    std::vector<bool> leq_bwd(pair_count(s), false);
    for (std::size_t pi = 0; pi < f.num_profiles(); ++pi) {
        const WeakOrder& out = f.output(pi);
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) {
                PairRel r = pair_relation(out, i, j);
                if (r != PairRel::Greater) leq_fwd[pair_slot(s, i, j)] = true;
                if (r != PairRel::Less) leq_bwd[pair_slot(s, i, j)] = true;
            }
    }
    CompleteRelation rel(s);
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            bool fwd = leq_fwd[pair_slot(s, i, j)], bwd = leq_bwd[pair_slot(s, i, j)];
            rel.set(i, j, fwd && bwd ? PairRel::Equal : fwd ? PairRel::Less : PairRel::Greater);
        }
    return {rel, is_transitive(rel)};
}

enum class Direction : std::uint8_t { Verbatim = 0, Inverse = 1 };

inline const char* to_string(Direction d) { return d == Direction::Verbatim ? "verbatim" : "inverse"; }

struct DictatorFinding {
    std::optional<int> voter;
    Direction direction = Direction::Verbatim;  // meaningful iff voter is set
};

// Whether voter i's preferences are a prerequisite for f in the given
// direction; equivalently, f follows (or reverses) i's strict preferences.
inline bool voter_is_dictator(const ExplicitSwf& f, int voter, Direction dir) {
    int s = f.num_alts();
    const auto& uni = *f.universe();
    for (std::size_t pi = 0; pi < f.num_profiles(); ++pi) {
        auto digits = profile_digits_from_index(pi, uni.num_orders(), f.voters());
        const WeakOrder& ri = uni.order(digits[static_cast<std::size_t>(voter)]);
        const WeakOrder& out = f.output(pi);
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) {
                PairRel want = pair_relation(ri, i, j);
                if (want == PairRel::Equal) continue;
                if (dir == Direction::Inverse) want = reverse(want);
                if (pair_relation(out, i, j) != want) return false;
            }
    }
    return true;
}

// First (voter, direction) whose prerequisite condition holds, scanning
// voters in index order with Verbatim before Inverse.
inline DictatorFinding find_dictator(const ExplicitSwf& f) {
    for (int v = 0; v < f.voters(); ++v)
        for (Direction d : {Direction::Verbatim, Direction::Inverse})
            if (voter_is_dictator(f, v, d)) return {v, d};
    return {};
}

struct DeferralInconsistent {
    int x = 0, y = 0;
    Profile profile;  // the dictator ties {x, y} here but f disagrees with g
};

class DeferralError : public std::runtime_error {
public:
    explicit DeferralError(DeferralInconsistent w)
        : std::runtime_error("deferral extraction inconsistent (input is not IIA)"),
          witness(std::move(w)) {}
    DeferralInconsistent witness;
};

// The function f defers to over voter i: plug total indifference in for i,
// then verify the defers-to condition on every pair the dictator ties.
// Requires f IIA and dictatorial with dictator i.
inline ExplicitSwf extract_deferred(const ExplicitSwf& f, int voter) {
    if (voter < 0 || voter >= f.voters()) throw InputError("dictator index out of range");
    if (!check_iia(f).holds) throw InputError("extract_deferred requires an IIA input");
    if (!voter_is_dictator(f, voter, Direction::Verbatim) &&
        !voter_is_dictator(f, voter, Direction::Inverse))
        throw InputError("extract_deferred requires a dictatorial input with the given dictator");

    const auto& uni = *f.universe();
    int s = uni.num_alts();
    int n = f.voters();
    int eq = uni.index_of(WeakOrder::all_equal(s));
    std::size_t nsub = checked_profile_count(uni.num_orders(), n - 1);

    std::vector<std::int32_t> table(nsub, 0);
    for (std::size_t si = 0; si < nsub; ++si) {
        auto digits = profile_digits_from_index(si, uni.num_orders(), n - 1);
        digits.insert(digits.begin() + voter, eq);
        table[si] = f.table()[profile_index_from_digits(digits, uni.num_orders())];
    }
    ExplicitSwf g(f.universe(), n - 1, std::move(table));

    // Verify: whenever the dictator ties a pair, f agrees with g on it.
    for (std::size_t pi = 0; pi < f.num_profiles(); ++pi) {
        auto digits = profile_digits_from_index(pi, uni.num_orders(), n);
        const WeakOrder& ri = uni.order(digits[static_cast<std::size_t>(voter)]);
        auto sub_digits = digits;
        sub_digits.erase(sub_digits.begin() + voter);
        const WeakOrder& gout = g.output(profile_index_from_digits(sub_digits, uni.num_orders()));
        const WeakOrder& fout = f.output(pi);
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
                if (pair_relation(ri, i, j) == PairRel::Equal &&
                    pair_relation(fout, i, j) != pair_relation(gout, i, j))
                    throw DeferralError({i, j, f.profile_at(pi)});
    }
    return g;
}

}  // namespace swfkit

#endif  // SWFKIT_AXIOMS_HPP
