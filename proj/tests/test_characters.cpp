#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodge/characters.hpp"
#include "hodge/errors.hpp"
#include "support/oracles.hpp"

using namespace hodge;

TEST_CASE("character examples") {
    for (int d = 1; d <= 6; ++d)
        for (const auto& cls : enumerate_partitions(d)) CHECK(mn_character(Partition{d}, cls) == 1);
    CHECK(mn_character(Partition{1, 1}, Partition{2}) == -1);
    CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK_THROWS_AS(mn_character(Partition{2}, Partition{1, 1, 1}), InvalidInput);
}

TEST_CASE("property: the sign character matches permutation parity") {
    for (int d = 1; d <= 7; ++d) {
        const Partition sign_rep(std::vector<int>(d, 1));
        for (const auto& cls : enumerate_partitions(d)) {
            const int parity = (d - cls.length()) % 2;
            CHECK(mn_character(sign_rep, cls) == (parity == 0 ? 1 : -1));
        }
    }
}

TEST_CASE("property: dimensions follow the hook length formula for d <= 8") {
    for (int d = 1; d <= 8; ++d) {
        const auto& table = CharacterTable::of_degree(d);
        for (const auto& xi : enumerate_partitions(d)) {
            const long hooks = testoracle::hook_length_dimension(xi.parts());
            CHECK(table.dimension(xi) == hooks);
            CHECK(mn_character(xi, Partition(std::vector<int>(d, 1))) == hooks);
        }
    }
}

TEST_CASE("property: both orthogonality relations hold for d <= 7") {
    for (int d = 1; d <= 7; ++d) {
        const auto& table = CharacterTable::of_degree(d);
        const auto& parts = table.partitions();
        for (const auto& a : parts)
            for (const auto& b : parts) {
                Rational rows;
                BigInt columns = 0;
                for (const auto& c : parts) {
                    rows += Rational(table.value(a, c) * table.value(b, c)) / Rational(z_factor(c));
                    columns += BigInt(static_cast<long>(table.value(c, a))) * static_cast<long>(table.value(c, b));
                }
                CHECK(rows == Rational(a == b ? 1 : 0));
                CHECK(columns == (a == b ? z_factor(a) : BigInt(0)));
            }
    }
}

TEST_CASE("burnside examples") {
    CHECK(burnside_double_hurwitz(Partition{2}, Partition{1, 1}, 1) == Rational(1, 2));
    for (int d = 1; d <= 7; ++d) CHECK(burnside_double_hurwitz(Partition{d}, Partition{d}, 0) == Rational(1, d));
    CHECK(burnside_double_hurwitz(Partition{1, 1}, Partition{1, 1}, 0) == Rational(1, 2));
    CHECK_THROWS_AS(burnside_double_hurwitz(Partition{2}, Partition{1}, 0), InvalidInput);
}

TEST_CASE("central character of transpositions") {
    CHECK(transposition_central_character(Partition{2}) == Rational(1));
    CHECK(transposition_central_character(Partition{1, 1}) == Rational(-1));
    CHECK(transposition_central_character(Partition{2, 1}) == Rational(0));
    CHECK(transposition_central_character(Partition{1}) == Rational(0));
}

TEST_CASE("burnside agrees with a brute-force permutation count for d <= 4") {
    for (int d = 1; d <= 4; ++d)
        for (const auto& mu : enumerate_partitions(d))
            for (const auto& nu : enumerate_partitions(d))
                for (int r = 0; r <= 3; ++r)
                    CHECK(burnside_double_hurwitz(mu, nu, r) == testoracle::brute_double_hurwitz(mu.parts(), nu.parts(), r));
}
