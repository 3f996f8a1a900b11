#ifndef SWFKIT_WEAK_ORDERS_HPP
#define SWFKIT_WEAK_ORDERS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Weak orders (complete transitive relations) over a small alternative set,
// plus the not-necessarily-transitive complete relations needed to talk
// about pairwise-combined outputs.
//
// Convention used throughout: "x<y" means x is ranked strictly below y.

namespace swfkit {

using BigInt = boost::multiprecision::cpp_int;

constexpr int kMaxAlternatives = 6;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Relation of x to y for an ordered pair (x, y).
enum class PairRel : std::uint8_t { Less = 0, Equal = 1, Greater = 2 };

inline PairRel reverse(PairRel r) {
    switch (r) {
        case PairRel::Less: return PairRel::Greater;
        case PairRel::Greater: return PairRel::Less;
        default: return PairRel::Equal;
    }
}

inline char pair_rel_symbol(PairRel r) {
    switch (r) {
        case PairRel::Less: return '<';
        case PairRel::Equal: return '=';
        default: return '>';
    }
}

inline PairRel pair_rel_from_symbol(char c) {
    switch (c) {
        case '<': return PairRel::Less;
        case '=': return PairRel::Equal;
        case '>': return PairRel::Greater;
        default: throw InputError(std::string("unknown pair relation symbol: ") + c);
    }
}

// A fixed, ordered set of alternative labels. Index 0..size()-1 identifies
// an alternative everywhere else in the library.
class AltSet {
public:
    AltSet() = default;

    explicit AltSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty() || names_.size() > kMaxAlternatives)
            throw InputError("alternative set size must be between 1 and 6");
        for (const auto& n : names_) {
            if (n.empty() || n.find('<') != std::string::npos || n.find('=') != std::string::npos)
                throw InputError("alternative label must be nonempty and avoid '<' and '='");
        }
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) throw InputError("duplicate alternative label: " + names_[i]);
    }

    // Default labels "a0".."a{s-1}".
    static AltSet with_default_labels(int s) {
        std::vector<std::string> names;
        names.reserve(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) names.push_back("a" + std::to_string(i));
        return AltSet(std::move(names));
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& label(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& labels() const { return names_; }

    int index_of(const std::string& label) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == label) return static_cast<int>(i);
        throw InputError("unknown alternative: " + label);
    }

    // The alternative set induced by a subset of indices (ascending).
    AltSet subset(const std::vector<int>& members) const {
        std::vector<std::string> sub;
        sub.reserve(members.size());
        for (int m : members) sub.push_back(label(m));
        return AltSet(std::move(sub));
    }

    friend bool operator==(const AltSet&, const AltSet&) = default;

private:
    std::vector<std::string> names_;
};

// A weak order: an ordered partition of the alternatives into indifference
// blocks, least block first. Stored as the rank of each alternative
// (rank = index of its block), which keeps pair queries O(1).
class WeakOrder {
public:
    WeakOrder() = default;

    // Blocks listed from strictly-least to strictly-greatest.
    static WeakOrder from_blocks(const std::vector<std::vector<int>>& blocks, int n_alts) {
        std::vector<int> rank(static_cast<std::size_t>(n_alts), -1);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].empty()) throw InputError("weak order block may not be empty");
            for (int a : blocks[b]) {
                if (a < 0 || a >= n_alts) throw InputError("alternative index out of range");
                if (rank[static_cast<std::size_t>(a)] != -1)
                    throw InputError("alternative appears in two blocks");
                rank[static_cast<std::size_t>(a)] = static_cast<int>(b);
            }
        }
        for (int r : rank)
            if (r == -1) throw InputError("weak order blocks must cover every alternative");
        return WeakOrder(std::move(rank));
    }

    // Ranks must form a contiguous range 0..k-1.
    static WeakOrder from_ranks(std::vector<int> rank) {
        if (rank.empty()) throw InputError("weak order over empty set");
        int mx = *std::max_element(rank.begin(), rank.end());
        std::vector<bool> seen(static_cast<std::size_t>(mx) + 1, false);
        for (int r : rank) {
            if (r < 0 || r > mx) throw InputError("invalid rank");
            seen[static_cast<std::size_t>(r)] = true;
        }
        for (bool s : seen)
            if (!s) throw InputError("weak order ranks must be contiguous from 0");
        return WeakOrder(std::move(rank));
    }

    static WeakOrder all_equal(int n_alts) {
        return WeakOrder(std::vector<int>(static_cast<std::size_t>(n_alts), 0));
    }

    int num_alts() const { return static_cast<int>(rank_.size()); }
    int num_blocks() const { return 1 + *std::max_element(rank_.begin(), rank_.end()); }
    int rank_of(int alt) const { return rank_.at(static_cast<std::size_t>(alt)); }
    const std::vector<int>& ranks() const { return rank_; }

    // Blocks least-to-greatest, members ascending by index.
    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(num_blocks()));
        for (int a = 0; a < num_alts(); ++a)
            out[static_cast<std::size_t>(rank_[static_cast<std::size_t>(a)])].push_back(a);
        return out;
    }

    bool is_all_equal() const { return num_blocks() == 1; }

    friend bool operator==(const WeakOrder&, const WeakOrder&) = default;
    friend auto operator<=>(const WeakOrder& a, const WeakOrder& b) { return a.rank_ <=> b.rank_; }

private:
    explicit WeakOrder(std::vector<int> rank) : rank_(std::move(rank)) {}
    std::vector<int> rank_;
};

inline PairRel pair_relation(const WeakOrder& order, int x, int y) {
    if (x < 0 || x >= order.num_alts() || y < 0 || y >= order.num_alts())
        throw InputError("alternative index out of range");
    int rx = order.rank_of(x), ry = order.rank_of(y);
    if (rx < ry) return PairRel::Less;
    if (rx > ry) return PairRel::Greater;
    return PairRel::Equal;
}

// Canonical text form: blocks least-to-greatest joined by '<', members of a
// block joined by '=' in index order. E.g. "a0=a2<a1".
inline std::string to_string(const WeakOrder& order, const AltSet& alts) {
    if (order.num_alts() != alts.size()) throw InputError("order/alt-set size mismatch");
    std::string out;
    bool first_block = true;
    for (const auto& block : order.blocks()) {
        if (!first_block) out += '<';
        first_block = false;
        bool first = true;
        for (int a : block) {
            if (!first) out += '=';
            first = false;
            out += alts.label(a);
        }
    }
    return out;
}

inline WeakOrder parse_weak_order(const std::string& text, const AltSet& alts) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> current;
    std::string token;
    auto flush_token = [&] {
        if (token.empty()) throw InputError("empty label in weak order string: " + text);
        current.push_back(alts.index_of(token));
        token.clear();
    };
    for (char c : text) {
        if (c == '=') {
            flush_token();
        } else if (c == '<') {
            flush_token();
            blocks.push_back(std::move(current));
            current.clear();
        } else {
            token += c;
        }
    }
    flush_token();
    blocks.push_back(std::move(current));
    return WeakOrder::from_blocks(blocks, alts.size());
}

// A complete (but not necessarily transitive) relation: one PairRel per
// unordered pair, stored for the ordered pair (i, j) with i < j.
class CompleteRelation {
public:
    CompleteRelation() = default;

    explicit CompleteRelation(int n_alts)
        : n_(n_alts),
          rel_(static_cast<std::size_t>(n_alts * (n_alts - 1) / 2), PairRel::Equal) {}

    int num_alts() const { return n_; }

    PairRel get(int x, int y) const {
        if (x == y) return PairRel::Equal;
        return x < y ? rel_[slot(x, y)] : reverse(rel_[slot(y, x)]);
    }

    void set(int x, int y, PairRel r) {
        if (x == y) {
            if (r != PairRel::Equal) throw InputError("relation of an alternative to itself must be Equal");
            return;
        }
        if (x < y)
            rel_[slot(x, y)] = r;
        else
            rel_[slot(y, x)] = reverse(r);
    }

    static CompleteRelation of(const WeakOrder& order) {
        CompleteRelation out(order.num_alts());
        for (int i = 0; i < order.num_alts(); ++i)
            for (int j = i + 1; j < order.num_alts(); ++j)
                out.set(i, j, pair_relation(order, i, j));
        return out;
    }

    friend bool operator==(const CompleteRelation&, const CompleteRelation&) = default;

private:
    std::size_t slot(int i, int j) const {
        // pairs (0,1),(0,2),...,(0,n-1),(1,2),... in lexicographic order
        return static_cast<std::size_t>(i * (2 * n_ - i - 1) / 2 + (j - i - 1));
    }

    int n_ = 0;
    std::vector<PairRel> rel_;
};

struct TransitivityCheck {
    bool transitive = true;
    // Violating triple (x, y, z): x <= y and y <= z but not x <= z.
    std::optional<std::array<int, 3>> witness;
};

inline TransitivityCheck is_transitive(const CompleteRelation& rel) {
    int n = rel.num_alts();
    auto leq = [&](int a, int b) { return rel.get(a, b) != PairRel::Greater; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (leq(x, y) && leq(y, z) && !leq(x, z))
                    return {false, std::array<int, 3>{x, y, z}};
    return {true, std::nullopt};
}

// Converts a transitive complete relation back to a weak order.
inline WeakOrder weak_order_from_relation(const CompleteRelation& rel) {
    int n = rel.num_alts();
    std::vector<int> rank(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (rel.get(y, x) == PairRel::Less) ++rank[static_cast<std::size_t>(x)];
    // Compress ranks to a contiguous range.
    std::vector<int> values = rank;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (auto& r : rank)
        r = static_cast<int>(std::lower_bound(values.begin(), values.end(), r) - values.begin());
    WeakOrder order = WeakOrder::from_ranks(std::move(rank));
    if (CompleteRelation::of(order) != rel)
        throw InputError("relation is not transitive; cannot form a weak order");
    return order;
}

// Ordered Bell numbers via a(n) = sum_{k=1..n} C(n,k) a(n-k), a(0) = 1.
inline BigInt ordered_bell(int n) {
    if (n < 0) throw InputError("ordered_bell requires n >= 0");
    std::vector<BigInt> a(static_cast<std::size_t>(n) + 1);
    a[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt total = 0;
        BigInt binom = 1;
        for (int k = 1; k <= m; ++k) {
            binom = binom * (m - k + 1) / k;  // C(m, k)
            total += binom * a[static_cast<std::size_t>(m - k)];
        }
        a[static_cast<std::size_t>(m)] = total;
    }
    return a[static_cast<std::size_t>(n)];
}

// All weak orders over the given alternatives, each exactly once, sorted
// lexicographically by canonical string. Length is ordered_bell(s).
inline std::vector<WeakOrder> enumerate_weak_orders(const AltSet& alts) {
    int s = alts.size();
    if (s < 1 || s > kMaxAlternatives)
        throw InputError("weak order enumeration supports 1..6 alternatives");
    std::vector<std::pair<std::string, WeakOrder>> keyed;
    std::vector<int> rank(static_cast<std::size_t>(s), 0);
    // Odometer over rank assignments; keep those whose rank set is {0..max}.
    while (true) {
        int mx = *std::max_element(rank.begin(), rank.end());
        std::vector<bool> seen(static_cast<std::size_t>(mx) + 1, false);
        for (int r : rank) seen[static_cast<std::size_t>(r)] = true;
        if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
            WeakOrder w = WeakOrder::from_ranks(rank);
            keyed.emplace_back(to_string(w, alts), std::move(w));
        }
        int i = s - 1;
        while (i >= 0 && rank[static_cast<std::size_t>(i)] == s - 1) rank[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++rank[static_cast<std::size_t>(i)];
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<WeakOrder> out;
    out.reserve(keyed.size());
    for (auto& [key, w] : keyed) out.push_back(std::move(w));
    return out;
}

// Restriction to a nonempty subset of alternatives (ascending indices).
// The result is over the sub-alternative-set in the same index order.
inline WeakOrder restrict_order(const WeakOrder& order, const std::vector<int>& members) {
    if (members.empty()) throw InputError("cannot restrict to an empty alternative set");
    std::vector<int> rank;
    rank.reserve(members.size());
    for (int m : members) {
        if (m < 0 || m >= order.num_alts()) throw InputError("alternative index out of range");
        rank.push_back(order.rank_of(m));
    }
    std::vector<int> values = rank;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (auto& r : rank)
        r = static_cast<int>(std::lower_bound(values.begin(), values.end(), r) - values.begin());
    return WeakOrder::from_ranks(std::move(rank));
}

}  // namespace swfkit

#endif  // SWFKIT_WEAK_ORDERS_HPP
