#include "hodge/recursion.hpp"

#include "hodge/errors.hpp"
#include "hodge/hurwitz.hpp"

#include <algorithm>
#include <set>

namespace hodge {

UnknownGroup build_group(int genus, const ExponentTuple& e) {
    if (genus < 0) throw InvalidInput("build_group: negative genus");
    const int n = e.length();
    if (2 * genus - 1 + n <= 0)
        throw InvalidInput("build_group: Mbar_{" + std::to_string(genus) + "," + std::to_string(n + 1) + "} is unstable");
    UnknownGroup group{genus, e, 3 * genus - 2 + n, {}};
    const int free_degree = group.target_dim - e.sum();  // a0 + k
    for (int a0 = e.max(); a0 <= free_degree; ++a0) {
        const int k = free_degree - a0;
        if (k > genus) continue;
        std::vector<int> exps = e.entries();
        exps.push_back(a0);
        group.unknowns.emplace_back(genus, k, ExponentTuple(std::move(exps)));
    }
    if (group.unknowns.empty())
        throw InvalidInput("build_group: no integrals of genus " + std::to_string(genus) + " with constrained exponents " +
                           e.to_string());
    return group;
}

UnknownGroup group_of(const HodgeKey& key) {
    std::vector<int> rest(key.psi().entries().begin() + 1, key.psi().entries().end());
    return build_group(key.genus(), ExponentTuple(std::move(rest)));
}

int min_degree(const UnknownGroup& group) { return std::max(1, group.e.sum() + 2 - 2 * group.genus); }

std::vector<HodgeKey> prior_keys(const UnknownGroup& group) {
    const std::set<HodgeKey> members(group.unknowns.begin(), group.unknowns.end());
    const auto& e = group.e.entries();
    std::set<HodgeKey> out;
    std::vector<int> a(e.size(), 0);
    auto visit = [&](auto&& self, std::size_t j) -> void {
        if (j == e.size()) {
            int used = 0;
            for (int x : a) used += x;
            for (int k = 0; k <= group.genus; ++k) {
                const int a0 = group.target_dim - k - used;
                if (a0 < 0) continue;
                std::vector<int> exps(a);
                exps.push_back(a0);
                HodgeKey key(group.genus, k, ExponentTuple(std::move(exps)));
                if (!members.contains(key)) out.insert(key);
            }
            return;
        }
        for (int x = 0; x <= e[j]; ++x) {
            a[j] = x;
            self(self, j + 1);
        }
    };
    visit(visit, 0);
    return {out.begin(), out.end()};
}

RelationBuilder::RelationBuilder(UnknownGroup group, const HodgeTable& table,
                                 std::function<Rational(const HodgeKey&)> resolve)
    : group_(std::move(group)),
      expander_(ExpansionContext{group_.target_dim,
                                 std::set<HodgeKey>(group_.unknowns.begin(), group_.unknowns.end()), &table,
                                 std::move(resolve)}) {}

LinearExpr RelationBuilder::build_expr(int d) {
    const int lowest = min_degree(group_);
    if (d < lowest)
        throw InvalidInput("degree " + std::to_string(d) + " is outside the validity window; minimal legal d is " +
                           std::to_string(lowest));
    const int g = group_.genus;
    LinearExpr row;
    for (const auto& nu : enumerate_partitions(d)) {
        const Rational z(z_factor(nu));
        for (int g_inf = 0; g_inf <= g; ++g_inf) {
            const Rational weight = hurwitz_weight(d, nu, g_inf);
            if (weight.is_zero()) continue;
            const int r = branch_points(nu, g_inf);
            const int chi0 = 2 * (nu.length() + g_inf - g);
            const Rational coeff = (r % 2 == 0 ? z : -z) * weight;
            row += expander_.bullet(nu, group_.e, chi0) * coeff;
        }
    }
    return row;
}

RelationRow RelationBuilder::build(int d) {
    const LinearExpr expr = build_expr(d);
    RelationRow row{d, {}, expr.constant()};
    row.coefficients.reserve(group_.unknowns.size());
    for (const auto& key : group_.unknowns) row.coefficients.push_back(expr.coefficient(key));
    return row;
}

RelationRow build_relation(const UnknownGroup& group, int d, const HodgeTable& table,
                           std::function<Rational(const HodgeKey&)> resolve) {
    RelationBuilder builder(group, table, std::move(resolve));
    return builder.build(d);
}

}  // namespace hodge
