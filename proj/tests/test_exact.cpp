#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodge/bernoulli.hpp"
#include "hodge/rational.hpp"
#include "hodge/series.hpp"
#include "support/oracles.hpp"

#include <random>
#include <stdexcept>

using namespace hodge;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK((Rational(7, 8) * Rational(1, 30) / Rational(24)).to_string() == "7/5760");
    CHECK(Rational(-3, 7) / Rational(-3, 7) == Rational(1));
    CHECK(Rational(4, -6).to_string() == "-2/3");
    CHECK(Rational(10, 5).to_string() == "2");
    CHECK(Rational(0, -5).to_string() == "0");
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(1).pow(-7) == Rational(1));
}

TEST_CASE("rational errors") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
    CHECK_THROWS(Rational::parse("1/"));
    CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("rational text form round-trips") {
    for (const char* text : {"7/5760", "-1/30", "2", "0", "-41/580608"})
        CHECK(Rational::parse(text).to_string() == text);
    CHECK(Rational::parse("6/4") == Rational(3, 2));
}

TEST_CASE("property: (a + b) - b = a and normalization is idempotent") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
    for (int i = 0; i < 200; ++i) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        CHECK((a + b) - b == a);
        CHECK(Rational::parse(a.to_string()) == a);
        CHECK(Rational(a.numerator(), a.denominator()).to_string() == a.to_string());
    }
}

TEST_CASE("bernoulli values") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
}

TEST_CASE("property: bernoulli recurrence holds for m = 1..20") {
    for (unsigned m = 1; m <= 20; ++m) {
        Rational acc;
        for (unsigned k = 0; k <= m; ++k) acc += Rational(binomial(m + 1, k)) * bernoulli(k);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("bernoulli agrees with the Akiyama-Tanigawa oracle") {
    for (unsigned m = 0; m <= 30; ++m) {
        if (m == 1) continue;
        CHECK(bernoulli(m) == testoracle::bernoulli_at(m));
    }
}

TEST_CASE("series reciprocal") {
    const TruncatedSeries s(std::vector<Rational>{1, 1, 0});
    CHECK(series_reciprocal(s) == TruncatedSeries(std::vector<Rational>{1, -1, 1}));
    CHECK(series_reciprocal(TruncatedSeries::constant(Rational(3, 5), 4)) ==
          TruncatedSeries::constant(Rational(5, 3), 4));
    CHECK_THROWS_AS(series_reciprocal(TruncatedSeries(std::vector<Rational>{0, 1})), std::domain_error);

    const TruncatedSeries inv = series_reciprocal(sinh_norm_series(1, 4));
    CHECK(inv == TruncatedSeries(std::vector<Rational>{1, 0, Rational(-1, 24), 0, Rational(7, 5760)}));
    CHECK(inv * sinh_norm_series(1, 4) == TruncatedSeries::constant(1, 4));
}

TEST_CASE("property: reciprocal times series is one on random series") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> coeff(-5, 5), nonzero(1, 5), order(0, 8);
    for (int i = 0; i < 50; ++i) {
        const auto n = static_cast<std::size_t>(order(rng));
        std::vector<Rational> c(n + 1);
        c[0] = Rational(nonzero(rng) * (coeff(rng) < 0 ? -1 : 1), nonzero(rng));
        for (std::size_t j = 1; j <= n; ++j) c[j] = Rational(coeff(rng), nonzero(rng));
        const TruncatedSeries s(c);
        CHECK(s * series_reciprocal(s) == TruncatedSeries::constant(1, n));
    }
}

TEST_CASE("sinh normalized series") {
    CHECK(sinh_norm_series(1, 2) == TruncatedSeries(std::vector<Rational>{1, 0, Rational(1, 24)}));
    CHECK(sinh_norm_series(2, 0) == TruncatedSeries(std::vector<Rational>{1}));
    CHECK(sinh_norm_series(3, 2) == TruncatedSeries(std::vector<Rational>{1, 0, Rational(3, 8)}));
    for (unsigned k = 1; k <= 8; ++k) {
        const TruncatedSeries s = sinh_norm_series(k, 9);
        CHECK(s[0] == Rational(1));
        for (std::size_t j = 1; j <= 9; j += 2) CHECK(s[j].is_zero());
        // (k/2)^{2m} / (2m+1)!
        for (std::size_t m = 0; 2 * m <= 9; ++m)
            CHECK(s[2 * m] == Rational(static_cast<long>(k), 2).pow(static_cast<long>(2 * m)) /
                                  Rational(factorial(static_cast<unsigned>(2 * m + 1))));
    }
}

TEST_CASE("series power") {
    const TruncatedSeries s = sinh_norm_series(1, 6);
    CHECK(s.pow(3) == s * s * s);
    CHECK(s.pow(0) == TruncatedSeries::constant(1, 6));
}
