#ifndef SWFKIT_SWF_HPP
#define SWFKIT_SWF_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <variant>

#include "swfkit/weak_orders.hpp"

// Profiles (configurations) and the two social-welfare-function
// representations: explicit output tables (the ground truth) and the
// per-pair functional form (the IIA certificate, and the only
// representation that can express intransitive-outcome functions).

namespace swfkit {

constexpr std::size_t kDefaultTableBudget = 10'000'000;

// Slot of unordered pair (i, j), i < j, in lexicographic pair order.
inline std::size_t pair_slot(int n_alts, int i, int j) {
    return static_cast<std::size_t>(i * (2 * n_alts - i - 1) / 2 + (j - i - 1));
}

inline std::size_t pair_count(int n_alts) {
    return static_cast<std::size_t>(n_alts) * (n_alts - 1) / 2;
}

// The alternative set together with its canonical weak-order list. Shared by
// every table-backed value over the same alternatives.
class Universe {
public:
    explicit Universe(AltSet alts) : alts_(std::move(alts)), orders_(enumerate_weak_orders(alts_)) {
        for (std::size_t i = 0; i < orders_.size(); ++i)
            index_[orders_[i].ranks()] = static_cast<int>(i);
    }

    static std::shared_ptr<const Universe> make(AltSet alts) {
        return std::make_shared<const Universe>(std::move(alts));
    }

    const AltSet& alts() const { return alts_; }
    int num_alts() const { return alts_.size(); }
    const std::vector<WeakOrder>& orders() const { return orders_; }
    std::size_t num_orders() const { return orders_.size(); }
    const WeakOrder& order(int idx) const { return orders_.at(static_cast<std::size_t>(idx)); }

    int index_of(const WeakOrder& w) const {
        auto it = index_.find(w.ranks());
        if (it == index_.end()) throw InputError("weak order does not belong to this universe");
        return it->second;
    }

private:
    AltSet alts_;
    std::vector<WeakOrder> orders_;
    std::map<std::vector<int>, int> index_;
};

// One weak order per voter.
struct Profile {
    std::vector<WeakOrder> prefs;

    int num_voters() const { return static_cast<int>(prefs.size()); }
    friend bool operator==(const Profile&, const Profile&) = default;
};

// Number of profiles (num_orders^voters), rejected when over budget.
inline std::size_t checked_profile_count(std::size_t num_orders, int voters,
                                         std::size_t budget = kDefaultTableBudget) {
    std::size_t count = 1;
    for (int v = 0; v < voters; ++v) {
        if (count > budget / num_orders) throw BudgetError("profile table would exceed the configured budget");
        count *= num_orders;
    }
    if (count > budget) throw BudgetError("profile table would exceed the configured budget");
    return count;
}

// Profile index <-> per-voter order indices. Voter 0 is the most significant
// digit, so index order equals lexicographic order of the index tuple.
inline std::size_t profile_index_from_digits(std::span<const int> digits, std::size_t num_orders) {
    std::size_t idx = 0;
    for (int d : digits) idx = idx * num_orders + static_cast<std::size_t>(d);
    return idx;
}

inline std::vector<int> profile_digits_from_index(std::size_t index, std::size_t num_orders, int voters) {
    std::vector<int> digits(static_cast<std::size_t>(voters), 0);
    for (int v = voters - 1; v >= 0; --v) {
        digits[static_cast<std::size_t>(v)] = static_cast<int>(index % num_orders);
        index /= num_orders;
    }
    return digits;
}

// A single pair's function from per-voter pair relations to a pair relation.
// Key: sum over voters of rel_v * 3^v (voter 0 least significant).
struct PairTable {
    int voters = 0;
    std::vector<PairRel> out;

    static std::size_t table_size(int voters) {
        std::size_t n = 1;
        for (int v = 0; v < voters; ++v) n *= 3;
        return n;
    }

    static PairTable constant(int voters, PairRel r) {
        return PairTable{voters, std::vector<PairRel>(table_size(voters), r)};
    }

    static std::size_t key_of(std::span<const PairRel> rels) {
        std::size_t key = 0, w = 1;
        for (PairRel r : rels) {
            key += static_cast<std::size_t>(r) * w;
            w *= 3;
        }
        return key;
    }

    PairRel lookup(std::span<const PairRel> rels) const { return out.at(key_of(rels)); }

    bool is_constant(PairRel r) const {
        return std::all_of(out.begin(), out.end(), [&](PairRel x) { return x == r; });
    }

    friend bool operator==(const PairTable&, const PairTable&) = default;
    friend auto operator<=>(const PairTable&, const PairTable&) = default;
};

// Ground-truth SWF: a total table from profile index to output order index.
class ExplicitSwf {
public:
    ExplicitSwf() = default;

    ExplicitSwf(std::shared_ptr<const Universe> uni, int voters, std::vector<std::int32_t> table)
        : uni_(std::move(uni)), voters_(voters), table_(std::move(table)) {
        if (voters_ < 0) throw InputError("voter count must be nonnegative");
        std::size_t expect = checked_profile_count(uni_->num_orders(), voters_);
        if (table_.size() != expect) throw InputError("SWF table has the wrong number of entries");
        for (std::int32_t t : table_)
            if (t < 0 || static_cast<std::size_t>(t) >= uni_->num_orders())
                throw InputError("SWF table entry out of range");
    }

    static ExplicitSwf constant(std::shared_ptr<const Universe> uni, int voters, const WeakOrder& w) {
        int oi = uni->index_of(w);
        std::size_t n = checked_profile_count(uni->num_orders(), voters);
        return ExplicitSwf(std::move(uni), voters, std::vector<std::int32_t>(n, oi));
    }

    static ExplicitSwf null_swf(std::shared_ptr<const Universe> uni, int voters) {
        WeakOrder eq = WeakOrder::all_equal(uni->num_alts());
        return constant(std::move(uni), voters, eq);
    }

    const std::shared_ptr<const Universe>& universe() const { return uni_; }
    const AltSet& alts() const { return uni_->alts(); }
    int num_alts() const { return uni_->num_alts(); }
    int voters() const { return voters_; }
    std::size_t num_profiles() const { return table_.size(); }
    const std::vector<std::int32_t>& table() const { return table_; }

    const WeakOrder& output(std::size_t profile_index) const {
        return uni_->order(table_.at(profile_index));
    }

    std::size_t index_of(const Profile& p) const {
        if (p.num_voters() != voters_) throw InputError("profile voter count mismatch");
        std::vector<int> digits;
        digits.reserve(p.prefs.size());
        for (const auto& w : p.prefs) digits.push_back(uni_->index_of(w));
        return profile_index_from_digits(digits, uni_->num_orders());
    }

    Profile profile_at(std::size_t index) const {
        auto digits = profile_digits_from_index(index, uni_->num_orders(), voters_);
        Profile p;
        p.prefs.reserve(digits.size());
        for (int d : digits) p.prefs.push_back(uni_->order(d));
        return p;
    }

    const WeakOrder& eval(const Profile& p) const { return output(index_of(p)); }

    friend bool operator==(const ExplicitSwf& a, const ExplicitSwf& b) {
        return a.alts() == b.alts() && a.voters_ == b.voters_ && a.table_ == b.table_;
    }

private:
    std::shared_ptr<const Universe> uni_;
    int voters_ = 0;
    std::vector<std::int32_t> table_;
};

// Every profile exactly once, in profile-index (lexicographic) order.
inline std::vector<Profile> enumerate_profiles(const std::shared_ptr<const Universe>& uni, int voters,
                                               std::size_t budget = kDefaultTableBudget) {
    std::size_t count = checked_profile_count(uni->num_orders(), voters, budget);
    std::vector<Profile> out;
    out.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        auto digits = profile_digits_from_index(idx, uni->num_orders(), voters);
        Profile p;
        p.prefs.reserve(digits.size());
        for (int d : digits) p.prefs.push_back(uni->order(d));
        out.push_back(std::move(p));
    }
    return out;
}

// Per-pair functional form. One table per unordered pair (i, j), i < j,
// giving the output relation for the ordered pair as written.
class PairwiseSwf {
public:
    PairwiseSwf() = default;

    PairwiseSwf(std::shared_ptr<const Universe> uni, int voters, std::vector<PairTable> tables)
        : uni_(std::move(uni)), voters_(voters), tables_(std::move(tables)) {
        if (tables_.size() != pair_count(uni_->num_alts()))
            throw InputError("pairwise SWF needs one table per unordered pair");
        for (const auto& t : tables_)
            if (t.voters != voters_ || t.out.size() != PairTable::table_size(voters_))
                throw InputError("pair table shape mismatch");
    }

    const std::shared_ptr<const Universe>& universe() const { return uni_; }
    const AltSet& alts() const { return uni_->alts(); }
    int num_alts() const { return uni_->num_alts(); }
    int voters() const { return voters_; }
    const std::vector<PairTable>& tables() const { return tables_; }

    const PairTable& table_for(int x, int y) const {
        if (x == y || x < 0 || y < 0 || x >= num_alts() || y >= num_alts())
            throw InputError("invalid pair");
        return tables_[pair_slot(num_alts(), std::min(x, y), std::max(x, y))];
    }

    // Output relation for the ordered pair (x, y) under the given per-voter
    // orders.
    PairRel eval_pair(const Profile& p, int x, int y) const {
        if (p.num_voters() != voters_) throw InputError("profile voter count mismatch");
        if (x == y) {
            if (x < 0 || x >= num_alts()) throw InputError("invalid pair");
            return PairRel::Equal;
        }
        bool flip = x > y;
        int lo = std::min(x, y), hi = std::max(x, y);
        std::vector<PairRel> rels;
        rels.reserve(p.prefs.size());
        for (const auto& w : p.prefs) rels.push_back(pair_relation(w, lo, hi));
        PairRel r = table_for(lo, hi).lookup(rels);
        return flip ? reverse(r) : r;
    }

    friend bool operator==(const PairwiseSwf& a, const PairwiseSwf& b) {
        return a.alts() == b.alts() && a.voters_ == b.voters_ && a.tables_ == b.tables_;
    }

private:
    std::shared_ptr<const Universe> uni_;
    int voters_ = 0;
    std::vector<PairTable> tables_;
};

// Witness payloads for the conversion failures.
struct NotIia {
    int x = 0, y = 0;        // the pair whose output leaks information
    Profile profile_a;       // two profiles agreeing on {x, y} ...
    Profile profile_b;       // ... whose outputs disagree on {x, y}
};

struct NotTransitive {
    Profile profile;
    std::array<int, 3> triple{};  // x <= y, y <= z, not x <= z in the combined relation
};

struct NotWellDefined {
    Profile restricted_profile;  // over the sub-alternative set
    Profile extension_a;         // two full extensions with conflicting restricted outputs
    Profile extension_b;
};

using ToPairwiseResult = std::variant<PairwiseSwf, NotIia>;
using ToExplicitResult = std::variant<ExplicitSwf, NotTransitive>;
using RestrictResult = std::variant<ExplicitSwf, NotWellDefined>;

// Succeeds iff, for every pair, all profiles agreeing on the pair produce
// outputs agreeing on the pair; the witness otherwise is the first conflict
// in (pair, profile) lexicographic order.
inline ToPairwiseResult to_pairwise(const ExplicitSwf& f) {
    const auto& uni = *f.universe();
    int s = uni.num_alts();
    int n = f.voters();
    std::size_t nprof = f.num_profiles();
    std::size_t tsize = PairTable::table_size(n);

    // Per-voter pair relation of each order, per pair slot.
    std::vector<std::vector<PairRel>> order_rel(pair_count(s),
                                                std::vector<PairRel>(uni.num_orders()));
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            for (std::size_t o = 0; o < uni.num_orders(); ++o)
                order_rel[pair_slot(s, i, j)][o] = pair_relation(uni.order(o), i, j);

    std::vector<PairTable> tables;
    tables.reserve(pair_count(s));
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            const auto& rel_of_order = order_rel[pair_slot(s, i, j)];
            PairTable table{n, std::vector<PairRel>(tsize, PairRel::Equal)};
            std::vector<std::size_t> seen_at(tsize, static_cast<std::size_t>(-1));
            std::fill(digits.begin(), digits.end(), 0);
            for (std::size_t pi = 0; pi < nprof; ++pi) {
                std::size_t key = 0, w = 1;
                for (int v = 0; v < n; ++v) {
                    key += static_cast<std::size_t>(rel_of_order[digits[static_cast<std::size_t>(v)]]) * w;
                    w *= 3;
                }
                PairRel outr = pair_relation(f.output(pi), i, j);
                if (seen_at[key] == static_cast<std::size_t>(-1)) {
                    seen_at[key] = pi;
                    table.out[key] = outr;
                } else if (table.out[key] != outr) {
                    return NotIia{i, j, f.profile_at(seen_at[key]), f.profile_at(pi)};
                }
                // advance digits, voter N-1 fastest (matches index order)
                for (int v = n - 1; v >= 0; --v) {
                    if (++digits[static_cast<std::size_t>(v)] < static_cast<int>(uni.num_orders())) break;
                    digits[static_cast<std::size_t>(v)] = 0;
                }
            }
            tables.push_back(std::move(table));
        }
    }
    return PairwiseSwf(f.universe(), n, std::move(tables));
}

// Evaluates every pair table; the combined relation may be intransitive.
inline CompleteRelation combine(const PairwiseSwf& pw, const Profile& p) {
    int s = pw.num_alts();
    CompleteRelation rel(s);
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            rel.set(i, j, pw.eval_pair(p, i, j));
    return rel;
}

// Succeeds iff the combined relation is transitive on every profile.
inline ToExplicitResult to_explicit(const PairwiseSwf& pw) {
    const auto& uni = *pw.universe();
    std::size_t nprof = checked_profile_count(uni.num_orders(), pw.voters());
    std::vector<std::int32_t> table(nprof, 0);
    for (std::size_t pi = 0; pi < nprof; ++pi) {
        auto digits = profile_digits_from_index(pi, uni.num_orders(), pw.voters());
        Profile p;
        p.prefs.reserve(digits.size());
        for (int d : digits) p.prefs.push_back(uni.order(d));
        CompleteRelation rel = combine(pw, p);
        auto check = is_transitive(rel);
        if (!check.transitive) return NotTransitive{std::move(p), *check.witness};
        table[pi] = static_cast<std::int32_t>(uni.index_of(weak_order_from_relation(rel)));
    }
    return ExplicitSwf(pw.universe(), pw.voters(), std::move(table));
}

// f restricted to a nonempty subset of alternatives (ascending indices).
// Succeeds iff the restricted output is independent of how each restricted
// profile is extended to the full alternative set.
inline RestrictResult restrict_swf(const ExplicitSwf& f, const std::vector<int>& members) {
    const auto& uni = *f.universe();
    if (members.empty()) throw InputError("cannot restrict to an empty alternative set");
    auto sub_uni = Universe::make(uni.alts().subset(members));
    int n = f.voters();
    std::size_t nsub = checked_profile_count(sub_uni->num_orders(), n);

    // order index in full universe -> order index in sub universe
    std::vector<int> order_map(uni.num_orders());
    for (std::size_t o = 0; o < uni.num_orders(); ++o)
        order_map[o] = sub_uni->index_of(restrict_order(uni.order(o), members));

    std::vector<std::int32_t> table(nsub, -1);
    std::vector<std::size_t> rep(nsub, 0);  // representative full profile per sub profile
    std::size_t nprof = f.num_profiles();
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    std::vector<int> sub_digits(static_cast<std::size_t>(n), 0);
    for (std::size_t pi = 0; pi < nprof; ++pi) {
        for (int v = 0; v < n; ++v)
            sub_digits[static_cast<std::size_t>(v)] = order_map[static_cast<std::size_t>(digits[static_cast<std::size_t>(v)])];
        std::size_t si = profile_index_from_digits(sub_digits, sub_uni->num_orders());
        auto out = static_cast<std::int32_t>(sub_uni->index_of(restrict_order(f.output(pi), members)));
        if (table[si] == -1) {
            table[si] = out;
            rep[si] = pi;
        } else if (table[si] != out) {
            Profile sub;
            sub.prefs.reserve(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) sub.prefs.push_back(sub_uni->order(sub_digits[static_cast<std::size_t>(v)]));
            return NotWellDefined{std::move(sub), f.profile_at(rep[si]), f.profile_at(pi)};
        }
        for (int v = n - 1; v >= 0; --v) {
            if (++digits[static_cast<std::size_t>(v)] < static_cast<int>(uni.num_orders())) break;
            digits[static_cast<std::size_t>(v)] = 0;
        }
    }
    return ExplicitSwf(std::move(sub_uni), n, std::move(table));
}

}  // namespace swfkit

#endif  // SWFKIT_SWF_HPP
