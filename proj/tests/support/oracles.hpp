#pragma once
// Independent reference implementations used only by the tests. None of
// these share code paths with the library beyond the Rational type.

#include "hodge/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace testoracle {

using hodge::BigInt;
using hodge::Rational;

// Akiyama-Tanigawa; yields B_1 = +1/2, all other values agree.
inline Rational bernoulli_at(unsigned n) {
    std::vector<Rational> a(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        a[m] = Rational(1, static_cast<long>(m) + 1);
        for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
    }
    return a[0];
}

// Euler's pentagonal number recurrence.
inline std::vector<long> partition_counts(int n) {
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const long sign = (k % 2 == 1) ? 1 : -1;
            p[m] += sign * p[m - g1];
            if (g2 <= m) p[m] += sign * p[m - g2];
        }
    }
    return p;
}

inline std::vector<int> cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {  // (a b)(i) = a(b(i))
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

// Every permutation of {0..d-1}.
inline std::vector<std::vector<int>> all_permutations(int d) {
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// (1/d!) #{(s1, t_1..t_r, s2): s1 of type mu, s2 of type nu, t_i transpositions,
// s1 t_1 ... t_r s2 = id}, counted by dynamic programming over group elements.
inline Rational brute_double_hurwitz(const std::vector<int>& mu, const std::vector<int>& nu, int r) {
    const int d = std::accumulate(mu.begin(), mu.end(), 0);
    const auto perms = all_permutations(d);
    std::map<std::vector<int>, BigInt> layer;
    for (const auto& p : perms)
        if (cycle_type(p) == mu) layer[p] += 1;
    std::vector<std::vector<int>> transpositions;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            std::vector<int> t(d);
            std::iota(t.begin(), t.end(), 0);
            std::swap(t[i], t[j]);
            transpositions.push_back(t);
        }
    for (int step = 0; step < r; ++step) {
        std::map<std::vector<int>, BigInt> next;
        for (const auto& [p, count] : layer)
            for (const auto& t : transpositions) next[compose(p, t)] += count;
        layer = std::move(next);
    }
    BigInt total = 0;
    for (const auto& [p, count] : layer) {
        // need p * s2 = id, i.e. s2 = p^{-1}, same cycle type as p
        if (cycle_type(p) == nu) total += count;
    }
    return Rational(total, hodge::factorial(static_cast<unsigned>(d)));
}

inline long hook_length_dimension(const std::vector<int>& shape) {
    const int n = std::accumulate(shape.begin(), shape.end(), 0);
    BigInt hooks = 1;
    for (std::size_t i = 0; i < shape.size(); ++i)
        for (int j = 0; j < shape[i]; ++j) {
            int below = 0;
            for (std::size_t k = i + 1; k < shape.size() && shape[k] > j; ++k) ++below;
            hooks *= (shape[i] - j - 1) + below + 1;
        }
    const BigInt dim = hodge::factorial(static_cast<unsigned>(n)) / hooks;
    return dim.get_si();
}

// <tau_{d_1} ... tau_{d_n}>_g by the string equation and the DVV (Virasoro)
// recursion, from <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24.
class PsiIntersections {
public:
    Rational operator()(int g, std::vector<int> d) {
        std::sort(d.rbegin(), d.rend());
        const int n = static_cast<int>(d.size());
        if (g < 0 || 2 * g - 2 + n <= 0) return Rational(0);
        const int sum = std::accumulate(d.begin(), d.end(), 0);
        if (sum != 3 * g - 3 + n) return Rational(0);
        if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; })) return Rational(0);
        const auto key = std::make_pair(g, d);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Rational value = evaluate(g, d);
        memo_.emplace(key, value);
        return value;
    }

private:
    static BigInt double_factorial(int n) {  // n!! with (-1)!! = 1
        BigInt out = 1;
        for (int k = n; k > 1; k -= 2) out *= k;
        return out;
    }

    Rational evaluate(int g, const std::vector<int>& d) {
        const int n = static_cast<int>(d.size());
        if (g == 0 && n == 3) return Rational(1);
        if (g == 1 && n == 1) return Rational(1, 24);
        if (d.back() == 0) {  // string equation
            std::vector<int> rest(d.begin(), d.end() - 1);
            Rational acc;
            for (std::size_t j = 0; j < rest.size(); ++j) {
                if (rest[j] == 0) continue;
                auto shifted = rest;
                --shifted[j];
                acc += (*this)(g, shifted);
            }
            return acc;
        }
        const int k = d.front() - 1;
        const std::vector<int> rest(d.begin() + 1, d.end());
        const int m = static_cast<int>(rest.size());
        Rational acc;
        for (int j = 0; j < m; ++j) {
            auto shifted = rest;
            shifted[j] += k;
            acc += Rational(double_factorial(2 * k + 2 * rest[j] + 1), double_factorial(2 * rest[j] - 1)) *
                   (*this)(g, shifted);
        }
        for (int r = 0; r <= k - 1; ++r) {
            const int s = k - 1 - r;
            const Rational c = Rational(double_factorial(2 * r + 1) * double_factorial(2 * s + 1)) / Rational(2);
            auto joined = rest;
            joined.push_back(r);
            joined.push_back(s);
            acc += c * (*this)(g - 1, joined);
            for (int g1 = 0; g1 <= g; ++g1)
                for (unsigned mask = 0; mask < (1u << m); ++mask) {
                    std::vector<int> left{r}, right{s};
                    for (int j = 0; j < m; ++j) ((mask >> j) & 1u ? left : right).push_back(rest[j]);
                    acc += c * (*this)(g1, left) * (*this)(g - g1, right);
                }
        }
        return acc / Rational(double_factorial(2 * k + 3));
    }

    std::map<std::pair<int, std::vector<int>>, Rational> memo_;
};

}  // namespace testoracle
