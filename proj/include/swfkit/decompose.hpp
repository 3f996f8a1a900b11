#ifndef SWFKIT_DECOMPOSE_HPP
#define SWFKIT_DECOMPOSE_HPP

#include "swfkit/axioms.hpp"

// Clerical-dictatorial certificates: the canonical recursive description of
// an IIA SWF (cleric + per-class ruling + deferred sub-descriptions), the
// decomposer that produces one from any IIA table, the evaluator that turns
// one back into pair decisions, and the seed-state decomposition chain.

namespace swfkit {

struct CdDescription;
using CdPtr = std::shared_ptr<const CdDescription>;

// Ruling for one equivalence class of the cleric.
struct ClassRuling {
    enum class Kind : std::uint8_t { Singleton, PairFn, NullClass, Dictator };

    Kind kind = Kind::Singleton;
    PairTable pair_table;  // PairFn: function for the class's two members (ascending)
    int voter = -1;        // Dictator: index into the current voter list
    Direction direction = Direction::Verbatim;
    CdPtr defer;           // Dictator: description over (class members, voters minus dictator)

    static ClassRuling singleton() { return {}; }
    static ClassRuling null_class() { return {Kind::NullClass, {}, -1, Direction::Verbatim, nullptr}; }
    static ClassRuling pair_fn(PairTable t) {
        return {Kind::PairFn, std::move(t), -1, Direction::Verbatim, nullptr};
    }
    static ClassRuling dictator(int voter, Direction dir, CdPtr defer) {
        return {Kind::Dictator, {}, voter, dir, std::move(defer)};
    }

    friend bool operator==(const ClassRuling& a, const ClassRuling& b);
};

// Canonical certificate of a clerical-dictatorial function over
// (num_alts alternatives, num_voters voters), alternatives indexed locally
// 0..num_alts-1.
struct CdDescription {
    enum class Kind : std::uint8_t { Unit, Leaf, Layered };

    Kind kind = Kind::Unit;
    int num_alts = 1;
    int num_voters = 0;
    PairTable leaf_table;             // Leaf (num_alts == 2): function for the pair (0, 1)
    WeakOrder cleric;                 // Layered (num_alts >= 3)
    std::vector<ClassRuling> classes; // aligned with cleric.blocks()

    static CdDescription unit(int voters) {
        CdDescription d;
        d.kind = Kind::Unit;
        d.num_alts = 1;
        d.num_voters = voters;
        return d;
    }
    static CdDescription leaf(PairTable t) {
        CdDescription d;
        d.kind = Kind::Leaf;
        d.num_alts = 2;
        d.num_voters = t.voters;
        d.leaf_table = std::move(t);
        return d;
    }
    static CdDescription layered(int voters, WeakOrder cleric, std::vector<ClassRuling> classes) {
        CdDescription d;
        d.kind = Kind::Layered;
        d.num_alts = cleric.num_alts();
        d.num_voters = voters;
        d.cleric = std::move(cleric);
        d.classes = std::move(classes);
        return d;
    }

    friend bool operator==(const CdDescription& a, const CdDescription& b) {
        if (a.kind != b.kind || a.num_alts != b.num_alts || a.num_voters != b.num_voters)
            return false;
        switch (a.kind) {
            case Kind::Unit: return true;
            case Kind::Leaf: return a.leaf_table == b.leaf_table;
            case Kind::Layered: return a.cleric == b.cleric && a.classes == b.classes;
        }
        return false;
    }
};

inline bool operator==(const ClassRuling& a, const ClassRuling& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ClassRuling::Kind::Singleton:
        case ClassRuling::Kind::NullClass:
            return true;
        case ClassRuling::Kind::PairFn:
            return a.pair_table == b.pair_table;
        case ClassRuling::Kind::Dictator:
            return a.voter == b.voter && a.direction == b.direction &&
                   ((a.defer == nullptr && b.defer == nullptr) ||
                    (a.defer != nullptr && b.defer != nullptr && *a.defer == *b.defer));
    }
    return false;
}

class NotIiaError : public std::runtime_error {
public:
    explicit NotIiaError(NotIia w)
        : std::runtime_error("input SWF does not satisfy IIA"), witness(std::move(w)) {}
    NotIia witness;
};

class InternalContradiction : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ReconstructError : public std::runtime_error {
public:
    explicit ReconstructError(NotTransitive w)
        : std::runtime_error("description combines to an intransitive output"),
          witness(std::move(w)) {}
    NotTransitive witness;
};

// Decides the ordered pair (x, y) of local alternatives given the voters'
// relations on that pair. A description's decision depends on nothing else;
// this is the substance of Algorithm-1 evaluation.
inline PairRel decide_pair(const CdDescription& d, std::span<const PairRel> rels, int x, int y) {
    if (x == y) return PairRel::Equal;
    if (x > y) {
        std::vector<PairRel> rev(rels.size());
        for (std::size_t v = 0; v < rels.size(); ++v) rev[v] = reverse(rels[v]);
        return reverse(decide_pair(d, rev, y, x));
    }
    if (static_cast<int>(rels.size()) != d.num_voters)
        throw InputError("voter relation count does not match the description");
    switch (d.kind) {
        case CdDescription::Kind::Unit:
            throw InputError("a one-alternative description has no pairs");
        case CdDescription::Kind::Leaf:
            return d.leaf_table.lookup(rels);
        case CdDescription::Kind::Layered: {
            PairRel cleric_rel = pair_relation(d.cleric, x, y);
            if (cleric_rel != PairRel::Equal) return cleric_rel;
            const ClassRuling& ruling = d.classes.at(static_cast<std::size_t>(d.cleric.rank_of(x)));
            switch (ruling.kind) {
                case ClassRuling::Kind::Singleton:
                    throw InternalContradiction("distinct pair in a singleton class");
                case ClassRuling::Kind::NullClass:
                    return PairRel::Equal;
                case ClassRuling::Kind::PairFn:
                    return ruling.pair_table.lookup(rels);
                case ClassRuling::Kind::Dictator: {
                    PairRel rw = rels[static_cast<std::size_t>(ruling.voter)];
                    if (rw != PairRel::Equal)
                        return ruling.direction == Direction::Verbatim ? rw : reverse(rw);
                    // Dictator ties: defer. Map (x, y) to positions within the
                    // class member list and drop the dictator's relation.
                    std::vector<PairRel> sub;
                    sub.reserve(rels.size() - 1);
                    for (std::size_t v = 0; v < rels.size(); ++v)
                        if (static_cast<int>(v) != ruling.voter) sub.push_back(rels[v]);
                    int lx = 0, ly = 0;
                    const auto members = d.cleric.blocks()[static_cast<std::size_t>(d.cleric.rank_of(x))];
                    for (std::size_t m = 0; m < members.size(); ++m) {
                        if (members[m] == x) lx = static_cast<int>(m);
                        if (members[m] == y) ly = static_cast<int>(m);
                    }
                    return decide_pair(*ruling.defer, sub, lx, ly);
                }
            }
        }
    }
    throw InternalContradiction("unreachable description kind");
}

// Algorithm-1 evaluation on a profile.
inline PairRel evaluate_description(const CdDescription& d, const Profile& p, int x, int y) {
    if (p.num_voters() != d.num_voters) throw InputError("profile voter count mismatch");
    if (x == y) return PairRel::Equal;
    int lo = std::min(x, y), hi = std::max(x, y);
    std::vector<PairRel> rels;
    rels.reserve(p.prefs.size());
    for (const auto& w : p.prefs) rels.push_back(pair_relation(w, lo, hi));
    PairRel r = decide_pair(d, rels, lo, hi);
    return x < y ? r : reverse(r);
}

// The pairwise functional form of a description: every description is IIA
// by construction, so this always succeeds.
inline PairwiseSwf description_to_pairwise(const CdDescription& d,
                                           const std::shared_ptr<const Universe>& uni) {
    int s = uni->num_alts();
    if (s != d.num_alts) throw InputError("alternative count mismatch");
    int n = d.num_voters;
    std::size_t tsize = PairTable::table_size(n);
    std::vector<PairTable> tables;
    tables.reserve(pair_count(s));
    std::vector<PairRel> rels(static_cast<std::size_t>(n), PairRel::Less);
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            PairTable table{n, std::vector<PairRel>(tsize, PairRel::Equal)};
            for (std::size_t key = 0; key < tsize; ++key) {
                std::size_t k = key;
                for (int v = 0; v < n; ++v) {
                    rels[static_cast<std::size_t>(v)] = static_cast<PairRel>(k % 3);
                    k /= 3;
                }
                table.out[key] = decide_pair(d, rels, i, j);
            }
            tables.push_back(std::move(table));
        }
    }
    return PairwiseSwf(uni, n, std::move(tables));
}

// Tabulates the description into an explicit SWF. Outputs are guaranteed
// transitive for canonical descriptions; a violation signals a malformed one.
inline ExplicitSwf reconstruct(const CdDescription& d, const std::shared_ptr<const Universe>& uni) {
    auto result = to_explicit(description_to_pairwise(d, uni));
    if (auto* bad = std::get_if<NotTransitive>(&result)) throw ReconstructError(*bad);
    return std::get<ExplicitSwf>(std::move(result));
}

namespace detail {

// Canonical certificate of an SWF already known to satisfy IIA, with the
// pairwise form supplied to avoid recomputation.
inline CdDescription decompose_checked(const ExplicitSwf& f, const PairwiseSwf& pw) {
    int s = f.num_alts();
    if (s == 1) return CdDescription::unit(f.voters());
    if (s == 2) return CdDescription::leaf(pw.tables()[0]);

    ClericResult cleric = compute_cleric(f);
    if (!cleric.transitivity.transitive)
        throw InternalContradiction("C(f) of an IIA function must be transitive");
    WeakOrder cleric_order = weak_order_from_relation(cleric.cleric);

    std::vector<ClassRuling> rulings;
    for (const auto& members : cleric_order.blocks()) {
        if (members.size() == 1) {
            rulings.push_back(ClassRuling::singleton());
            continue;
        }
        if (members.size() == 2) {
            const PairTable& t = pw.table_for(members[0], members[1]);
            if (t.is_constant(PairRel::Less) || t.is_constant(PairRel::Greater))
                throw InternalContradiction("constant-strict pair inside a cleric class");
            rulings.push_back(ClassRuling::pair_fn(t));
            continue;
        }
        auto restricted = restrict_swf(f, members);
        if (std::holds_alternative<NotWellDefined>(restricted))
            throw InternalContradiction("restriction of an IIA function must be well defined");
        const ExplicitSwf& fa = std::get<ExplicitSwf>(restricted);
        if (is_null(fa)) {
            rulings.push_back(ClassRuling::null_class());
            continue;
        }
        DictatorFinding finding = find_dictator(fa);
        if (!finding.voter)
            throw InternalContradiction("a non-null cleric class of size >= 3 must be dictatorial");
        ExplicitSwf g = extract_deferred(fa, *finding.voter);
        auto g_pw = to_pairwise(g);
        if (std::holds_alternative<NotIia>(g_pw))
            throw InternalContradiction("deferred function of an IIA function must be IIA");
        auto defer = std::make_shared<const CdDescription>(
            decompose_checked(g, std::get<PairwiseSwf>(g_pw)));
        rulings.push_back(ClassRuling::dictator(*finding.voter, finding.direction, std::move(defer)));
    }
    return CdDescription::layered(f.voters(), std::move(cleric_order), std::move(rulings));
}

}  // namespace detail

// The canonical clerical-dictatorial certificate of an IIA SWF.
// reconstruct(decompose(f)) == f.
inline CdDescription decompose(const ExplicitSwf& f) {
    auto pw = to_pairwise(f);
    if (auto* bad = std::get_if<NotIia>(&pw)) throw NotIiaError(*bad);
    return detail::decompose_checked(f, std::get<PairwiseSwf>(pw));
}

// One step of the seed-state recursion. Alternatives and voters are tracked
// by their indices in the original SWF; fn is the step's function with both
// re-indexed densely.
struct ChainStep {
    std::vector<int> alt_members;      // S_i as original alternative indices, ascending
    std::vector<int> voter_ids;        // V_i as original voter indices, ascending
    ExplicitSwf fn;                    // f_i over (alt_members, voter_ids)
    std::vector<int> seed_class;       // I(x) in original indices (empty if the step is terminal)
    std::optional<int> dictator;       // original voter index; nullopt means the null voter
    Direction direction = Direction::Verbatim;  // meaningful iff dictator is set
};

struct DecompositionChain {
    int seed = 0;  // original alternative index
    std::vector<ChainStep> steps;
};

// Materializes f_0^x, f_1^x, ... for the seed state x, stopping when the
// current function is null, has at most two states, or the step's dictator
// is the null voter.
inline DecompositionChain build_chain(const ExplicitSwf& f, int seed) {
    if (seed < 0 || seed >= f.num_alts()) throw InputError("seed alternative out of range");
    if (!check_iia(f).holds) {
        auto pw = to_pairwise(f);
        throw NotIiaError(std::get<NotIia>(pw));
    }

    DecompositionChain chain;
    chain.seed = seed;

    ExplicitSwf current = f;
    std::vector<int> alt_members(static_cast<std::size_t>(f.num_alts()));
    std::vector<int> voter_ids(static_cast<std::size_t>(f.voters()));
    for (int i = 0; i < f.num_alts(); ++i) alt_members[static_cast<std::size_t>(i)] = i;
    for (int v = 0; v < f.voters(); ++v) voter_ids[static_cast<std::size_t>(v)] = v;
    int local_seed = seed;

    while (true) {
        ChainStep step;
        step.alt_members = alt_members;
        step.voter_ids = voter_ids;
        step.fn = current;
        if (is_null(current) || current.num_alts() <= 2) {
            chain.steps.push_back(std::move(step));
            return chain;
        }

        ClericResult cleric = compute_cleric(current);
        if (!cleric.transitivity.transitive)
            throw InternalContradiction("C(f) of an IIA function must be transitive");
        WeakOrder cleric_order = weak_order_from_relation(cleric.cleric);
        std::vector<int> class_local =
            cleric_order.blocks()[static_cast<std::size_t>(cleric_order.rank_of(local_seed))];
        for (int a : class_local)
            step.seed_class.push_back(alt_members[static_cast<std::size_t>(a)]);

        auto restricted = restrict_swf(current, class_local);
        if (std::holds_alternative<NotWellDefined>(restricted))
            throw InternalContradiction("restriction of an IIA function must be well defined");
        ExplicitSwf fa = std::get<ExplicitSwf>(std::move(restricted));

        DictatorFinding finding;
        if (static_cast<int>(class_local.size()) >= 2 && !is_null(fa))
            finding = find_dictator(fa);

        // Re-seed into the class's local coordinates.
        int new_seed = 0;
        for (std::size_t m = 0; m < class_local.size(); ++m)
            if (class_local[m] == local_seed) new_seed = static_cast<int>(m);
        std::vector<int> new_members;
        for (int a : class_local) new_members.push_back(alt_members[static_cast<std::size_t>(a)]);

        if (finding.voter) {
            step.dictator = voter_ids[static_cast<std::size_t>(*finding.voter)];
            step.direction = finding.direction;
            chain.steps.push_back(std::move(step));
            current = extract_deferred(fa, *finding.voter);
            voter_ids.erase(voter_ids.begin() + *finding.voter);
        } else {
            // Null voter: f_{i+1} = f_i restricted to the seed class, voters
            // unchanged. The next iteration necessarily stops.
            chain.steps.push_back(std::move(step));
            current = std::move(fa);
        }
        alt_members = std::move(new_members);
        local_seed = new_seed;
    }
}

}  // namespace swfkit

#endif  // SWFKIT_DECOMPOSE_HPP
