#ifndef SWFKIT_CONSTRUCT_HPP
#define SWFKIT_CONSTRUCT_HPP

#include <functional>

#include "swfkit/count.hpp"
#include "swfkit/decompose.hpp"

// Constructive side of the characterization: enumerate every canonical
// clerical-dictatorial description for given (states, voters), optionally
// restricted to the shapes compatible with the weak Pareto principle or with
// citizens' sovereignty, plus the named fixtures used throughout the tests.

namespace swfkit {

constexpr std::size_t kDefaultEnumerationBudget = 1'000'000;

enum class EnumerationFilter { All, WppShape, CsShape };

struct EnumerationStats {
    BigInt total;
    // Keyed by cleric class-size signature, sizes descending, e.g. "2+1".
    std::map<std::string, BigInt> by_signature;
};

namespace detail {

inline std::string signature_of(const std::vector<std::vector<int>>& blocks) {
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    std::string out;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(sizes[i]);
    }
    return out;
}

// Non-constant-strict pair tables over the given voters, in mixed-radix
// index order (entry for key 0 least significant).
inline void for_each_pair_fn(int voters, const std::function<void(const PairTable&)>& emit) {
    std::size_t tsize = PairTable::table_size(voters);
    PairTable t{voters, std::vector<PairRel>(tsize, PairRel::Less)};
    while (true) {
        if (!t.is_constant(PairRel::Less) && !t.is_constant(PairRel::Greater)) emit(t);
        std::size_t k = 0;
        while (k < tsize) {
            auto next = static_cast<std::uint8_t>(static_cast<std::uint8_t>(t.out[k]) + 1);
            if (next < 3) {
                t.out[k] = static_cast<PairRel>(next);
                break;
            }
            t.out[k] = PairRel::Less;
            ++k;
        }
        if (k == tsize) break;
    }
}

// All leaf tables (every two-state function), same order but unfiltered.
inline void for_each_leaf(int voters, const std::function<void(const PairTable&)>& emit) {
    std::size_t tsize = PairTable::table_size(voters);
    PairTable t{voters, std::vector<PairRel>(tsize, PairRel::Less)};
    while (true) {
        emit(t);
        std::size_t k = 0;
        while (k < tsize) {
            auto next = static_cast<std::uint8_t>(static_cast<std::uint8_t>(t.out[k]) + 1);
            if (next < 3) {
                t.out[k] = static_cast<PairRel>(next);
                break;
            }
            t.out[k] = PairRel::Less;
            ++k;
        }
        if (k == tsize) break;
    }
}

class DescriptionEnumerator {
public:
    void enumerate(int states, int voters, EnumerationFilter filter,
                   const std::function<void(const CdDescription&)>& emit) {
        if (filter != EnumerationFilter::All && states < 3)
            throw InputError("shape filters apply to three or more states");
        if (states == 1) {
            emit(CdDescription::unit(voters));
            return;
        }
        if (states == 2) {
            for_each_leaf(voters, [&](const PairTable& t) { emit(CdDescription::leaf(t)); });
            return;
        }
        auto alts = AltSet::with_default_labels(states);
        for (const WeakOrder& cleric : enumerate_weak_orders(alts)) {
            if (filter != EnumerationFilter::All && !cleric.is_all_equal()) continue;
            auto blocks = cleric.blocks();
            std::vector<ClassRuling> rulings;
            rulings.reserve(blocks.size());
            emit_classes(cleric, blocks, 0, voters, filter, rulings, emit);
        }
    }

    // Deferred functions of a size >= 3 class: all canonical descriptions
    // over (states, voters), memoized since dictator options re-enter them.
    const std::vector<CdPtr>& defer_list(int states, int voters) {
        auto key = std::make_pair(states, voters);
        if (auto it = defers_.find(key); it != defers_.end()) return it->second;
        std::vector<CdPtr> list;
        enumerate(states, voters, EnumerationFilter::All, [&](const CdDescription& d) {
            list.push_back(std::make_shared<const CdDescription>(d));
        });
        return defers_.emplace(key, std::move(list)).first->second;
    }

private:
    void emit_classes(const WeakOrder& cleric, const std::vector<std::vector<int>>& blocks,
                      std::size_t class_idx, int voters, EnumerationFilter filter,
                      std::vector<ClassRuling>& rulings,
                      const std::function<void(const CdDescription&)>& emit) {
        if (class_idx == blocks.size()) {
            emit(CdDescription::layered(voters, cleric, rulings));
            return;
        }
        auto step = [&](ClassRuling r) {
            rulings.push_back(std::move(r));
            emit_classes(cleric, blocks, class_idx + 1, voters, filter, rulings, emit);
            rulings.pop_back();
        };
        std::size_t size = blocks[class_idx].size();
        if (size == 1) {
            step(ClassRuling::singleton());
        } else if (size == 2) {
            for_each_pair_fn(voters, [&](const PairTable& t) { step(ClassRuling::pair_fn(t)); });
        } else {
            if (filter != EnumerationFilter::WppShape) step(ClassRuling::null_class());
            if (voters > 0) {
                const auto& defers = defer_list(static_cast<int>(size), voters - 1);
                for (int v = 0; v < voters; ++v) {
                    for (Direction dir : {Direction::Verbatim, Direction::Inverse}) {
                        if (filter == EnumerationFilter::WppShape && dir == Direction::Inverse)
                            continue;
                        for (const CdPtr& defer : defers) step(ClassRuling::dictator(v, dir, defer));
                    }
                }
            }
        }
    }

    std::map<std::pair<int, int>, std::vector<CdPtr>> defers_;
};

}  // namespace detail

// Expected stream length for the given enumeration, by formula.
inline BigInt enumeration_count(int states, int voters, EnumerationFilter filter) {
    switch (filter) {
        case EnumerationFilter::All:
            return q(states, voters);
        case EnumerationFilter::WppShape:
            return voters == 0 ? BigInt(0) : BigInt(voters) * q(states, voters - 1);
        case EnumerationFilter::CsShape:
            return voters == 0 ? BigInt(1) : 1 + BigInt(2) * voters * q(states, voters - 1);
    }
    throw InputError("unknown enumeration filter");
}

// Per-cleric-signature breakdown, computed by formula.
inline EnumerationStats enumeration_stats(int states, int voters, EnumerationFilter filter) {
    EnumerationStats stats;
    stats.total = 0;
    if (states <= 2 || filter != EnumerationFilter::All) {
        std::string sig = std::to_string(states);
        BigInt n = enumeration_count(states, voters, filter);
        stats.by_signature[sig] = n;
        stats.total = n;
        return stats;
    }
    auto alts = AltSet::with_default_labels(states);
    for (const WeakOrder& cleric : enumerate_weak_orders(alts)) {
        BigInt options = 1;
        for (const auto& block : cleric.blocks())
            options *= counter().class_options(static_cast<int>(block.size()), voters);
        stats.by_signature[detail::signature_of(cleric.blocks())] += options;
        stats.total += options;
    }
    return stats;
}

// Every canonical description exactly once: clerics in weak-order
// enumeration order, class rulings in lexicographic product order (first
// class most significant). Budget-guarded.
inline void enumerate_descriptions(int states, int voters, EnumerationFilter filter,
                                   const std::function<void(const CdDescription&)>& emit,
                                   std::size_t budget = kDefaultEnumerationBudget) {
    if (states < 1 || states > kMaxAlternatives) throw InputError("states must be between 1 and 6");
    if (voters < 0) throw InputError("voters must be nonnegative");
    if (enumeration_count(states, voters, filter) > BigInt(budget))
        throw BudgetError("description enumeration would exceed the configured budget");
    detail::DescriptionEnumerator gen;
    gen.enumerate(states, voters, filter, emit);
}

struct CanonicalityReport {
    bool ok = true;
    std::string violation;
};

// Structural canonicality. Cleric exactness (C(reconstruct(d)) == cleric) is
// covered by the reconstruct-based checks in the tests.
inline CanonicalityReport validate_canonical(const CdDescription& d) {
    auto fail = [](std::string msg) { return CanonicalityReport{false, std::move(msg)}; };
    if (d.num_voters < 0) return fail("negative voter count");
    switch (d.kind) {
        case CdDescription::Kind::Unit:
            if (d.num_alts != 1) return fail("unit description must have exactly one state");
            return {};
        case CdDescription::Kind::Leaf:
            if (d.num_alts != 2) return fail("leaf description must have exactly two states");
            if (d.leaf_table.voters != d.num_voters ||
                d.leaf_table.out.size() != PairTable::table_size(d.num_voters))
                return fail("leaf table shape mismatch");
            return {};
        case CdDescription::Kind::Layered: {
            if (d.num_alts < 3) return fail("layered description requires three or more states");
            if (d.cleric.num_alts() != d.num_alts) return fail("cleric is over the wrong state count");
            auto blocks = d.cleric.blocks();
            if (d.classes.size() != blocks.size())
                return fail("one ruling per cleric class required");
            for (std::size_t c = 0; c < blocks.size(); ++c) {
                const auto& ruling = d.classes[c];
                std::size_t size = blocks[c].size();
                switch (ruling.kind) {
                    case ClassRuling::Kind::Singleton:
                        if (size != 1) return fail("singleton ruling on a class of size != 1");
                        break;
                    case ClassRuling::Kind::PairFn:
                        if (size != 2) return fail("pair ruling on a class of size != 2");
                        if (ruling.pair_table.voters != d.num_voters ||
                            ruling.pair_table.out.size() != PairTable::table_size(d.num_voters))
                            return fail("pair table shape mismatch");
                        if (ruling.pair_table.is_constant(PairRel::Less) ||
                            ruling.pair_table.is_constant(PairRel::Greater))
                            return fail("constant-strict pair table inside a cleric class");
                        break;
                    case ClassRuling::Kind::NullClass:
                        if (size < 3) return fail("null ruling on a class of size < 3");
                        break;
                    case ClassRuling::Kind::Dictator: {
                        if (size < 3) return fail("dictator ruling on a class of size < 3");
                        if (ruling.voter < 0 || ruling.voter >= d.num_voters)
                            return fail("dictator voter out of range");
                        if (!ruling.defer) return fail("dictator ruling missing its deferred description");
                        if (ruling.defer->num_alts != static_cast<int>(size))
                            return fail("deferred description over the wrong state count");
                        if (ruling.defer->num_voters != d.num_voters - 1)
                            return fail("deferred description must drop exactly the dictator");
                        auto sub = validate_canonical(*ruling.defer);
                        if (!sub.ok) return sub;
                        break;
                    }
                }
            }
            return {};
        }
    }
    return fail("unknown description kind");
}

// ---- Named fixtures ----

// Three alternatives x, y, z; two voters. Voter 0 is a verbatim dictator;
// when voter 0 is fully indifferent the output is x=y=z if voter 1 is too,
// and x=y<z otherwise. Dictatorial and WPP, but not IIA.
inline ExplicitSwf example1_swf() {
    auto uni = Universe::make(AltSet({"x", "y", "z"}));
    const WeakOrder all_eq = WeakOrder::all_equal(3);
    const WeakOrder tie_xy = parse_weak_order("x=y<z", uni->alts());
    std::size_t norders = uni->num_orders();
    std::vector<std::int32_t> table(norders * norders, 0);
    for (std::size_t v0 = 0; v0 < norders; ++v0) {
        for (std::size_t v1 = 0; v1 < norders; ++v1) {
            const WeakOrder& r0 = uni->order(static_cast<int>(v0));
            std::int32_t out;
            if (!r0.is_all_equal())
                out = static_cast<std::int32_t>(v0);
            else if (uni->order(static_cast<int>(v1)).is_all_equal())
                out = static_cast<std::int32_t>(uni->index_of(all_eq));
            else
                out = static_cast<std::int32_t>(uni->index_of(tie_xy));
            table[v0 * norders + v1] = out;
        }
    }
    return ExplicitSwf(uni, 2, std::move(table));
}

// Three alternatives x, y, z; two voters. Voter 0's strict preferences are
// followed; on voter 0's ties the output is Equal if voter 1 agrees and
// otherwise a fixed strict relation arranged into the cycle x<y, y<z, z<x.
// Satisfies per-pair IIA and unanimity, but combines intransitively.
inline PairwiseSwf example2_pairwise() {
    auto uni = Universe::make(AltSet({"x", "y", "z"}));
    auto make_table = [](PairRel designated) {
        PairTable t{2, std::vector<PairRel>(9, PairRel::Equal)};
        for (int r0 = 0; r0 < 3; ++r0)
            for (int r1 = 0; r1 < 3; ++r1) {
                PairRel rel0 = static_cast<PairRel>(r0), rel1 = static_cast<PairRel>(r1);
                PairRel out = rel0 != PairRel::Equal ? rel0
                              : rel1 == PairRel::Equal ? PairRel::Equal
                                                       : designated;
                t.out[static_cast<std::size_t>(r0 + 3 * r1)] = out;
            }
        return t;
    };
    std::vector<PairTable> tables;
    tables.push_back(make_table(PairRel::Less));     // (x, y): x < y
    tables.push_back(make_table(PairRel::Greater));  // (x, z): z < x
    tables.push_back(make_table(PairRel::Less));     // (y, z): y < z
    return PairwiseSwf(uni, 2, std::move(tables));
}

// Nested verbatim dictators 0, 1, ..., N-1 finally deferring to null: each
// pair is decided by the first voter with a strict preference on it.
inline ExplicitSwf verbatim_dictator_chain(const std::shared_ptr<const Universe>& uni, int voters) {
    int s = uni->num_alts();
    std::size_t tsize = PairTable::table_size(voters);
    std::vector<PairTable> tables;
    tables.reserve(pair_count(s));
    for (std::size_t slot = 0; slot < pair_count(s); ++slot) {
        PairTable t{voters, std::vector<PairRel>(tsize, PairRel::Equal)};
        for (std::size_t key = 0; key < tsize; ++key) {
            std::size_t k = key;
            PairRel out = PairRel::Equal;
            for (int v = 0; v < voters; ++v) {
                auto r = static_cast<PairRel>(k % 3);
                k /= 3;
                if (r != PairRel::Equal) {
                    out = r;
                    break;
                }
            }
            t.out[key] = out;
        }
        tables.push_back(std::move(t));
    }
    auto result = to_explicit(PairwiseSwf(uni, voters, std::move(tables)));
    return std::get<ExplicitSwf>(std::move(result));
}

enum class NamedConstruction { Example1, Example2Pairwise, VerbatimDictatorChain, NullSwf, ConstantOrder };

struct NamedParams {
    int states = 3;
    int voters = 2;
    std::string order;  // ConstantOrder: canonical weak order string over default labels
};

inline std::variant<ExplicitSwf, PairwiseSwf> build_named(NamedConstruction kind,
                                                          const NamedParams& params = {}) {
    switch (kind) {
        case NamedConstruction::Example1:
            return example1_swf();
        case NamedConstruction::Example2Pairwise:
            return example2_pairwise();
        case NamedConstruction::VerbatimDictatorChain:
            return verbatim_dictator_chain(Universe::make(AltSet::with_default_labels(params.states)),
                                           params.voters);
        case NamedConstruction::NullSwf:
            return ExplicitSwf::null_swf(Universe::make(AltSet::with_default_labels(params.states)),
                                         params.voters);
        case NamedConstruction::ConstantOrder: {
            auto uni = Universe::make(AltSet::with_default_labels(params.states));
            WeakOrder w = parse_weak_order(params.order, uni->alts());
            return ExplicitSwf::constant(uni, params.voters, w);
        }
    }
    throw InputError("unknown named construction");
}

}  // namespace swfkit

#endif  // SWFKIT_CONSTRUCT_HPP
