#ifndef SWFKIT_ORACLE_HPP
#define SWFKIT_ORACLE_HPP

#include <set>

#include "swfkit/construct.hpp"

// Independent brute-force enumeration of all IIA, transitive SWFs at tiny
// sizes: assign one pair table per unordered pair and keep the assignments
// whose combined output is transitive on every profile. This is the ground
// truth the characterization is validated against.

namespace swfkit {

struct OracleResult {
    // Canonical fingerprints: the explicit output table (order index per
    // profile index). All members pass check_iia by construction.
    std::set<std::vector<std::int32_t>> tables;

    std::size_t count() const { return tables.size(); }
};

namespace detail {

// Whether the relation {a<=b per rab, a<=c per rac, b<=c per rbc} is
// transitive on three elements.
inline bool triple_transitive(PairRel rab, PairRel rac, PairRel rbc) {
    bool leq[3][3] = {{true, rab != PairRel::Greater, rac != PairRel::Greater},
                      {rab != PairRel::Less, true, rbc != PairRel::Greater},
                      {rac != PairRel::Less, rbc != PairRel::Less, true}};
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                if (leq[x][y] && leq[y][z] && !leq[x][z]) return false;
    return true;
}

}  // namespace detail

// Exhaustive search over pairwise-table assignments. When pruned, partial
// assignments are rejected as soon as some alternative triple combines
// intransitively on some profile; the unpruned variant filters only at the
// leaves and exists as a soundness check for the pruning.
inline OracleResult brute_force_iia(const std::shared_ptr<const Universe>& uni, int voters,
                                    bool pruned = true, std::size_t budget = 1'000'000) {
    int s = uni->num_alts();
    std::size_t npairs = pair_count(s);
    std::size_t tsize = PairTable::table_size(voters);

    BigInt per_pair = detail::pow_big(3, static_cast<int>(tsize));
    BigInt total = detail::pow_big(per_pair, static_cast<int>(npairs));
    if (total > BigInt(budget))
        throw BudgetError("brute-force search space exceeds the configured budget");

    std::size_t nprof = checked_profile_count(uni->num_orders(), voters);

    // Per pair slot and profile: the key into that pair's table.
    std::vector<std::vector<std::size_t>> keys(npairs, std::vector<std::size_t>(nprof, 0));
    {
        std::vector<std::vector<PairRel>> order_rel(npairs, std::vector<PairRel>(uni->num_orders()));
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
                for (std::size_t o = 0; o < uni->num_orders(); ++o)
                    order_rel[pair_slot(s, i, j)][o] = pair_relation(uni->order(o), i, j);
        for (std::size_t pi = 0; pi < nprof; ++pi) {
            auto digits = profile_digits_from_index(pi, uni->num_orders(), voters);
            for (std::size_t slot = 0; slot < npairs; ++slot) {
                std::size_t key = 0, w = 1;
                for (int v = 0; v < voters; ++v) {
                    key += static_cast<std::size_t>(
                               order_rel[slot][static_cast<std::size_t>(digits[static_cast<std::size_t>(v)])]) *
                           w;
                    w *= 3;
                }
                keys[slot][pi] = key;
            }
        }
    }

    // Triples become checkable once their last pair slot is assigned.
    std::vector<std::vector<std::array<std::size_t, 3>>> triples_at(npairs);
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b)
            for (int c = b + 1; c < s; ++c) {
                std::array<std::size_t, 3> slots{pair_slot(s, a, b), pair_slot(s, a, c),
                                                 pair_slot(s, b, c)};
                triples_at[*std::max_element(slots.begin(), slots.end())].push_back(slots);
            }

    OracleResult result;
    std::vector<std::vector<PairRel>> chosen(npairs, std::vector<PairRel>(tsize, PairRel::Less));

    auto triple_ok = [&](const std::array<std::size_t, 3>& slots) {
        for (std::size_t pi = 0; pi < nprof; ++pi) {
            PairRel rab = chosen[slots[0]][keys[slots[0]][pi]];
            PairRel rac = chosen[slots[1]][keys[slots[1]][pi]];
            PairRel rbc = chosen[slots[2]][keys[slots[2]][pi]];
            if (!detail::triple_transitive(rab, rac, rbc)) return false;
        }
        return true;
    };

    auto accept = [&] {
        std::vector<std::int32_t> table(nprof, 0);
        for (std::size_t pi = 0; pi < nprof; ++pi) {
            CompleteRelation rel(s);
            for (int i = 0; i < s; ++i)
                for (int j = i + 1; j < s; ++j) {
                    std::size_t slot = pair_slot(s, i, j);
                    rel.set(i, j, chosen[slot][keys[slot][pi]]);
                }
            table[pi] = static_cast<std::int32_t>(uni->index_of(weak_order_from_relation(rel)));
        }
        result.tables.insert(std::move(table));
    };

    // Depth-first over pair slots; each slot's table runs through all 3^tsize
    // assignments in mixed-radix order.
    auto search = [&](auto&& self, std::size_t slot) -> void {
        if (slot == npairs) {
            if (!pruned) {
                for (const auto& triples : triples_at)
                    for (const auto& t : triples)
                        if (!triple_ok(t)) return;
            }
            accept();
            return;
        }
        auto& table = chosen[slot];
        std::fill(table.begin(), table.end(), PairRel::Less);
        while (true) {
            bool ok = true;
            if (pruned)
                for (const auto& t : triples_at[slot])
                    if (!triple_ok(t)) {
                        ok = false;
                        break;
                    }
            if (ok) self(self, slot + 1);
            std::size_t k = 0;
            while (k < tsize) {
                auto next = static_cast<std::uint8_t>(static_cast<std::uint8_t>(table[k]) + 1);
                if (next < 3) {
                    table[k] = static_cast<PairRel>(next);
                    break;
                }
                table[k] = PairRel::Less;
                ++k;
            }
            if (k == tsize) break;
        }
    };
    search(search, 0);
    return result;
}

struct OracleComparison {
    bool equal = false;
    std::size_t oracle_count = 0;
    std::size_t construct_count = 0;
    // A symmetric-difference element, when unequal.
    std::optional<std::vector<std::int32_t>> only_in_oracle;
    std::optional<std::vector<std::int32_t>> only_in_construct;
};

// Set equality between the brute-force IIA tables and the tables
// reconstructed from the canonical description stream.
inline OracleComparison compare_with_construct(const std::shared_ptr<const Universe>& uni,
                                               int voters) {
    OracleResult oracle = brute_force_iia(uni, voters);
    std::set<std::vector<std::int32_t>> constructed;
    enumerate_descriptions(uni->num_alts(), voters, EnumerationFilter::All,
                           [&](const CdDescription& d) {
                               constructed.insert(reconstruct(d, uni).table());
                           });

    OracleComparison cmp;
    cmp.oracle_count = oracle.tables.size();
    cmp.construct_count = constructed.size();
    cmp.equal = oracle.tables == constructed;
    if (!cmp.equal) {
        for (const auto& t : oracle.tables)
            if (!constructed.contains(t)) {
                cmp.only_in_oracle = t;
                break;
            }
        for (const auto& t : constructed)
            if (!oracle.tables.contains(t)) {
                cmp.only_in_construct = t;
                break;
            }
    }
    return cmp;
}

}  // namespace swfkit

#endif  // SWFKIT_ORACLE_HPP
