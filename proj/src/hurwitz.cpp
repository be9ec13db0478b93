#include "hodge/hurwitz.hpp"

#include "hodge/errors.hpp"
#include "hodge/series.hpp"

#include <functional>
#include <map>
#include <vector>

namespace hodge {

namespace {

// [t^{2b}] (sinh(kt/2)/(kt/2))^c for c >= 0: sum over a_1 + ... + a_c = b of
// (k/2)^{2b} / prod (2 a_j + 1)!.
Rational power_coefficient(int k, int c, int b) {
    if (b == 0) return 1;
    if (c == 0) return 0;
    Rational inner;
    std::vector<int> a(static_cast<std::size_t>(c), 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == c - 1) {
            a[static_cast<std::size_t>(idx)] = left;
            BigInt denom = 1;
            for (int x : a) denom *= factorial(static_cast<unsigned>(2 * x + 1));
            inner += Rational(BigInt(1), denom);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            a[static_cast<std::size_t>(idx)] = x;
            rec(idx + 1, left - x);
        }
    };
    rec(0, b);
    return Rational(k, 2).pow(2 * b) * inner;
}

// [t^{2m}] (sinh(t/2)/(t/2))^{-1} (sinh(ht/2)/(ht/2)) = [t^{2m}] (1/h) sum_j e^{(h-1-2j)t/2}.
Rational telescoped_coefficient(int h, int m) {
    Rational sum;
    for (int l = (h % 2 == 0) ? 1 : 2; l <= h - 1; l += 2) sum += Rational(l).pow(2 * m);
    Rational value = sum / (Rational(h) * Rational(2).pow(2 * m - 1) * Rational(factorial(static_cast<unsigned>(2 * m))));
    if (h % 2 == 1 && m == 0) value += Rational(1, h);
    return value;
}

// Sum over distributions of `total` among the factors of prod_i coeff_i(b_i).
Rational convolve(const std::vector<std::function<Rational(int)>>& factors, int total) {
    Rational acc;
    std::function<void(std::size_t, int, Rational)> rec = [&](std::size_t i, int left, Rational partial) {
        if (i + 1 == factors.size()) {
            acc += partial * factors[i](left);
            return;
        }
        for (int b = 0; b <= left; ++b) {
            Rational f = factors[i](b);
            if (!f.is_zero()) rec(i + 1, left - b, partial * f);
        }
    };
    if (factors.empty()) return total == 0 ? Rational(1) : Rational(0);
    rec(0, total, Rational(1));
    return acc;
}

std::map<int, int> exponents_c(const Partition& nu) {
    std::map<int, int> c = nu.multiplicities();
    c[1] -= 1;
    return c;
}

}  // namespace

Rational sinh_product_coefficient(const Partition& nu, int g_inf) {
    if (nu.empty()) throw InvalidInput("sinh_product_coefficient: empty partition");
    if (g_inf < 0) throw InvalidInput("sinh_product_coefficient: negative genus");
    const auto c = exponents_c(nu);
    std::vector<std::function<Rational(int)>> factors;

    if (c.at(1) >= 0) {
        for (const auto& [k, ck] : c)
            if (ck > 0) factors.emplace_back([k, ck](int b) { return power_coefficient(k, ck, b); });
        return convolve(factors, g_inf);
    }

    // No 1-parts: fold the negative power into the smallest part h.
    const int h = nu.parts().back();
    factors.emplace_back([h](int m) { return telescoped_coefficient(h, m); });
    for (const auto& [k, ck] : c) {
        if (k == 1) continue;
        const int power = (k == h) ? ck - 1 : ck;
        if (power > 0) factors.emplace_back([k, power](int b) { return power_coefficient(k, power, b); });
    }
    return convolve(factors, g_inf);
}

Rational sinh_product_coefficient_series(const Partition& nu, int g_inf) {
    if (nu.empty()) throw InvalidInput("sinh_product_coefficient_series: empty partition");
    const std::size_t order = 2 * static_cast<std::size_t>(g_inf);
    TruncatedSeries product = TruncatedSeries::constant(1, order);
    for (const auto& [k, ck] : exponents_c(nu))
        if (ck > 0) product *= sinh_norm_series(static_cast<unsigned>(k), order).pow(static_cast<unsigned>(ck));
    if (nu.count(1) == 0) product *= series_reciprocal(sinh_norm_series(1, order));
    return product[order];
}

Rational hurwitz_weight(int d, const Partition& nu, int g_inf) {
    if (nu.size() != d) throw InvalidInput("hurwitz_weight: |nu| = " + std::to_string(nu.size()) + " but d = " + std::to_string(d));
    if (d <= 0) throw InvalidInput("hurwitz_weight: d must be positive");
    return Rational(d).pow(2 * g_inf - 2 + nu.length()) / Rational(aut_order(nu)) * sinh_product_coefficient(nu, g_inf);
}

}  // namespace hodge
