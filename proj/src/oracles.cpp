#include "hodge/oracles.hpp"

#include "hodge/bernoulli.hpp"
#include "hodge/errors.hpp"

#include <numeric>
#include <string>

namespace hodge {

BigInt multinomial(const std::vector<int>& parts) {
    int total = 0;
    for (int k : parts) {
        if (k < 0) throw InvalidInput("multinomial: negative part");
        total += k;
    }
    BigInt out = factorial(static_cast<unsigned>(total));
    for (int k : parts) out /= factorial(static_cast<unsigned>(k));
    return out;
}

Rational lambda_g_constant(int genus) {
    if (genus < 1) throw InvalidInput("b_g needs g >= 1");
    const BigInt two_pow = BigInt(1) << (2 * genus - 1);
    return Rational(two_pow - 1, two_pow) * bernoulli(static_cast<unsigned>(2 * genus)).abs() /
           Rational(factorial(static_cast<unsigned>(2 * genus)));
}

Rational oracle_lambda_g(int genus, const std::vector<int>& exponents) {
    const int n = static_cast<int>(exponents.size());
    if (genus < 1 || n < 1) throw InvalidInput("lambda_g oracle needs g >= 1 and n >= 1");
    const int sum = std::accumulate(exponents.begin(), exponents.end(), 0);
    if (sum != 2 * genus - 3 + n)
        throw InvalidInput("lambda_g oracle: exponents sum to " + std::to_string(sum) + ", expected " +
                           std::to_string(2 * genus - 3 + n));
    return Rational(multinomial(exponents)) * lambda_g_constant(genus);
}

Rational oracle_genus0(const std::vector<int>& exponents) {
    const int n = static_cast<int>(exponents.size());
    if (n < 3) throw InvalidInput("genus 0 oracle needs n >= 3");
    const int sum = std::accumulate(exponents.begin(), exponents.end(), 0);
    if (sum != n - 3)
        throw InvalidInput("genus 0 oracle: exponents sum to " + std::to_string(sum) + ", expected " +
                           std::to_string(n - 3));
    return Rational(multinomial(exponents));
}

Rational oracle_lambda_gm1_onepoint(int genus) {
    if (genus < 2) throw InvalidInput("lambda_{g-1} one-point oracle needs g >= 2");
    Rational harmonic;
    for (int i = 1; i <= 2 * genus - 1; ++i) harmonic += Rational(1, i);
    Rational split;
    const BigInt denom = factorial(static_cast<unsigned>(2 * genus - 1));
    for (int g1 = 1; g1 < genus; ++g1) {
        const int g2 = genus - g1;
        split += Rational(factorial(static_cast<unsigned>(2 * g1 - 1)) * factorial(static_cast<unsigned>(2 * g2 - 1)),
                          denom) *
                 lambda_g_constant(g1) * lambda_g_constant(g2);
    }
    return lambda_g_constant(genus) * harmonic - split / Rational(2);
}

}  // namespace hodge
