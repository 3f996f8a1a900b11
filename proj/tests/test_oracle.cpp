#include <doctest.h>

#include "swfkit/oracle.hpp"

using namespace swfkit;

TEST_CASE("brute-force counts at tiny sizes") {
    auto uni2 = Universe::make(AltSet::with_default_labels(2));
    auto uni3 = Universe::make(AltSet::with_default_labels(3));
    CHECK(brute_force_iia(uni2, 0).count() == 3);
    CHECK(brute_force_iia(uni2, 1).count() == 27);
    CHECK(brute_force_iia(uni3, 0).count() == 13);
    CHECK(brute_force_iia(uni3, 1).count() == 183);
}

TEST_CASE("every oracle member passes the IIA check") {
    auto uni3 = Universe::make(AltSet::with_default_labels(3));
    OracleResult result = brute_force_iia(uni3, 1);
    for (const auto& table : result.tables) CHECK(check_iia(ExplicitSwf(uni3, 1, table)).holds);
}

TEST_CASE("pruned and unpruned searches agree") {
    auto uni2 = Universe::make(AltSet::with_default_labels(2));
    auto uni3 = Universe::make(AltSet::with_default_labels(3));
    CHECK(brute_force_iia(uni2, 1, true).tables == brute_force_iia(uni2, 1, false).tables);
    CHECK(brute_force_iia(uni3, 0, true).tables == brute_force_iia(uni3, 0, false).tables);
}

TEST_CASE("oracle agrees with the canonical enumeration") {
    auto uni2 = Universe::make(AltSet::with_default_labels(2));
    auto uni3 = Universe::make(AltSet::with_default_labels(3));

    OracleComparison c20 = compare_with_construct(uni2, 0);
    CHECK(c20.equal);
    CHECK(c20.oracle_count == 3);

    OracleComparison c22 = compare_with_construct(uni2, 2);
    CHECK(c22.equal);
    CHECK(c22.oracle_count == 19683);

    OracleComparison c31 = compare_with_construct(uni3, 1);
    CHECK(c31.equal);
    CHECK(c31.oracle_count == 183);
    CHECK(!c31.only_in_oracle.has_value());
    CHECK(!c31.only_in_construct.has_value());
}

TEST_CASE("oracle members decompose and round-trip") {
    auto uni3 = Universe::make(AltSet::with_default_labels(3));
    for (const auto& table : brute_force_iia(uni3, 1).tables) {
        ExplicitSwf f(uni3, 1, table);
        CHECK(reconstruct(decompose(f), uni3) == f);
    }
}

TEST_CASE("infeasible sizes are rejected") {
    auto uni3 = Universe::make(AltSet::with_default_labels(3));
    CHECK_THROWS_AS(brute_force_iia(uni3, 2), BudgetError);
}
