#include "hodge/characters.hpp"
#include "hodge/engine.hpp"
#include "hodge/hurwitz.hpp"
#include "hodge/oracles.hpp"

#include <algorithm>
#include <map>

namespace hodge {

const std::vector<ReferenceValue>& reference_corpus() {
    static const std::vector<ReferenceValue> corpus = [] {
        struct Raw {
            int g, k;
            std::vector<int> psi;
            const char* value;
        };
        const std::vector<Raw> raw = {
            // dimension 1
            {0, 0, {1, 0, 0, 0}, "1"},
            {1, 1, {0}, "1/24"},
            {1, 0, {1}, "1/24"},
            // dimension 2
            {0, 0, {2, 0, 0, 0, 0}, "1"},
            {0, 0, {1, 1, 0, 0, 0}, "2"},
            {1, 1, {1, 0}, "1/24"},
            {1, 0, {2, 0}, "1/24"},
            {1, 0, {1, 1}, "1/24"},
            // dimension 3
            {0, 0, {3, 0, 0, 0, 0, 0}, "1"},
            {0, 0, {2, 1, 0, 0, 0, 0}, "3"},
            {0, 0, {1, 1, 1, 0, 0, 0}, "6"},
            {1, 1, {2, 0, 0}, "1/24"},
            {1, 0, {3, 0, 0}, "1/24"},
            {1, 1, {1, 1, 0}, "1/12"},
            {1, 0, {2, 1, 0}, "1/12"},
            {1, 0, {1, 1, 1}, "1/12"},
            // dimension 4
            {0, 0, {4, 0, 0, 0, 0, 0, 0}, "1"},
            {0, 0, {3, 1, 0, 0, 0, 0, 0}, "4"},
            {0, 0, {2, 2, 0, 0, 0, 0, 0}, "6"},
            {0, 0, {2, 1, 1, 0, 0, 0, 0}, "12"},
            {0, 0, {1, 1, 1, 1, 0, 0, 0}, "24"},
            {1, 1, {3, 0, 0, 0}, "1/24"},
            {1, 0, {4, 0, 0, 0}, "1/24"},
            {1, 1, {2, 1, 0, 0}, "1/8"},
            {1, 0, {3, 1, 0, 0}, "1/8"},
            {1, 1, {1, 1, 1, 0}, "1/4"},
            {1, 0, {2, 1, 1, 0}, "1/4"},
            {1, 0, {2, 2, 0, 0}, "1/6"},
            {1, 0, {1, 1, 1, 1}, "1/4"},
            {2, 2, {2}, "7/5760"},
            {2, 1, {3}, "1/480"},
            {2, 0, {4}, "1/1152"},
        };
        std::vector<ReferenceValue> out;
        for (const auto& r : raw) out.push_back({HodgeKey(r.g, r.k, ExponentTuple(r.psi)), Rational::parse(r.value)});
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
        return out;
    }();
    return corpus;
}

std::size_t VerifyReport::matched() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.matched(); }));
}

namespace {

// Oracle value for the key, when one of the closed formulas covers it.
std::optional<std::pair<std::string, Rational>> oracle_for(const HodgeKey& key) {
    const int g = key.genus();
    const auto& psi = key.psi().entries();
    if (g == 0) return std::make_pair(std::string("genus0"), oracle_genus0(psi));
    if (key.lambda_index() == g) return std::make_pair(std::string("lambda_g"), oracle_lambda_g(g, psi));
    if (g >= 2 && key.lambda_index() == g - 1 && key.points() == 1)
        return std::make_pair(std::string("lambda_gm1"), oracle_lambda_gm1_onepoint(g));
    return std::nullopt;
}

void add(VerifyReport& report, std::string source, std::string subject, Rational expected, Rational actual) {
    report.entries.push_back({std::move(source), std::move(subject), std::move(expected), std::move(actual)});
}

}  // namespace

VerifyReport verify(Engine& engine, const VerifyScope& scope) {
    VerifyReport report;

    if (scope.max_dim) {
        std::map<HodgeKey, Rational> published;
        for (const auto& ref : reference_corpus()) published.emplace(ref.key, ref.value);
        for (const auto& key : enumerate_keys(*scope.max_dim)) {
            const Rational actual = engine.compute(key);
            if (auto it = published.find(key); it != published.end())
                add(report, "reference", key.to_string(), it->second, actual);
            else if (auto oracle = oracle_for(key))
                add(report, oracle->first, key.to_string(), oracle->second, actual);
        }
    }

    if (scope.genus0) {
        for (int n = 3; n <= scope.max_n; ++n)
            for (const auto& psi : exponent_tuples(n - 3, n)) {
                const HodgeKey key(0, 0, psi);
                add(report, "genus0", key.to_string(), oracle_genus0(psi.entries()), engine.compute(key));
            }
    }

    if (scope.lambda_g) {
        for (const auto& key : enumerate_keys(scope.lambda_g_max_dim))
            if (key.genus() >= 1 && key.lambda_index() == key.genus())
                add(report, "lambda_g", key.to_string(), oracle_lambda_g(key.genus(), key.psi().entries()),
                    engine.compute(key));
    }

    if (scope.lambda_gm1) {
        for (int g = 2; g <= scope.max_g; ++g) {
            const HodgeKey key(g, g - 1, ExponentTuple{2 * g - 1});
            add(report, "lambda_gm1", key.to_string(), oracle_lambda_gm1_onepoint(g), engine.compute(key));
        }
    }

    if (scope.hurwitz) {
        for (int d = 1; d <= scope.max_d; ++d) {
            const Partition full{d};
            for (const auto& nu : enumerate_partitions(d)) {
                for (int g_inf = 0; g_inf <= scope.hurwitz_max_g_inf; ++g_inf) {
                    const int r = branch_points(nu, g_inf);
                    if (r < 0) continue;
                    const Rational burnside =
                        burnside_double_hurwitz(full, nu, r) / Rational(factorial(static_cast<unsigned>(r)));
                    add(report, "hurwitz",
                        "d=" + std::to_string(d) + " nu=" + nu.to_string() + " g_inf=" + std::to_string(g_inf),
                        burnside, hurwitz_weight(d, nu, g_inf));
                }
            }
        }
    }
    return report;
}

}  // namespace hodge
