#include "hodge/expansion.hpp"

#include "hodge/errors.hpp"

#include <functional>

namespace hodge {

namespace {

Rational edge_factor(int v) { return Rational(v).pow(v) / Rational(factorial(static_cast<unsigned>(v))); }

std::optional<Rational> unstable_closed_form(const VertexTriple& t) {
    if (t.genus != 0) return std::nullopt;
    const auto& nu = t.nu_block;
    const auto& e = t.e_block;
    if (nu.length() == 1 && e.length() == 0) {
        const int v = nu[0];
        return Rational(v).pow(v - 2) / Rational(factorial(static_cast<unsigned>(v)));
    }
    if (nu.length() == 2 && e.length() == 0) {
        return edge_factor(nu[0]) * edge_factor(nu[1]) / Rational(aut_order(nu)) / Rational(nu[0] + nu[1]);
    }
    if (nu.length() == 1 && e.length() == 1) {
        const int v = nu[0];
        const int e1 = e.entries()[0];
        Rational sum;
        for (int k = 0; k <= e1; ++k) sum += Rational(binomial(e1, k)) / Rational(v).pow(1 + k);
        return edge_factor(v) * sum;
    }
    return std::nullopt;
}

// Coefficients of \int Lambda_g^vee(1) prod (1-psi_j)^{e_j} / prod (1 - nu_i psi_i)
// on single-lambda monomials of the right degree.
std::map<HodgeKey, Rational> expand_monomials(const VertexTriple& t) {
    const auto& nu = t.nu_block.parts();
    const auto& e = t.e_block.entries();
    const int dim = 3 * t.genus - 3 + t.nu_block.length() + t.e_block.length();
    std::map<HodgeKey, Rational> out;
    std::vector<int> nu_exp(nu.size(), 0), e_exp(e.size(), 0);

    for (int k = 0; k <= t.genus && k <= dim; ++k) {
        std::function<void(std::size_t, int, Rational)> over_nu = [&](std::size_t i, int left, Rational coeff) {
            if (i + 1 == nu.size()) {
                nu_exp[i] = left;
                coeff *= Rational(nu[i]).pow(left);
                std::vector<int> exps(nu_exp);
                exps.insert(exps.end(), e_exp.begin(), e_exp.end());
                HodgeKey key(t.genus, k, ExponentTuple(std::move(exps)));
                auto [it, inserted] = out.try_emplace(key, coeff);
                if (!inserted) it->second += coeff;
                return;
            }
            for (int a = 0; a <= left; ++a) {
                nu_exp[i] = a;
                over_nu(i + 1, left - a, coeff * Rational(nu[i]).pow(a));
            }
        };
        std::function<void(std::size_t, int, Rational)> over_e = [&](std::size_t j, int left, Rational coeff) {
            if (j == e.size()) {
                over_nu(0, left, coeff);
                return;
            }
            for (int a = 0; a <= e[j] && a <= left; ++a) {
                e_exp[j] = a;
                Rational c = coeff * Rational(binomial(e[j], a));
                over_e(j + 1, left - a, a % 2 == 0 ? c : -c);
            }
        };
        over_e(0, dim - k, k % 2 == 0 ? Rational(1) : Rational(-1));
    }
    return out;
}

}  // namespace

LinearExpr d_vertex(const VertexTriple& triple, const ExpansionContext& ctx) {
    if (triple.nu_block.empty()) throw InvalidInput("d_vertex: a vertex needs at least one edge");
    if (triple.genus < 0) throw InvalidInput("d_vertex: negative genus");
    if (auto closed = unstable_closed_form(triple)) return LinearExpr(*closed);

    Rational prefactor = Rational(1) / Rational(aut_order(triple.nu_block)) / Rational(aut_order(triple.e_block));
    for (int v : triple.nu_block.parts()) prefactor *= edge_factor(v);

    const int dim = 3 * triple.genus - 3 + triple.nu_block.length() + triple.e_block.length();
    LinearExpr result;
    for (const auto& [key, coeff] : expand_monomials(triple)) {
        if (coeff.is_zero()) continue;
        if (ctx.target_dim && dim > *ctx.target_dim)
            throw InternalError("vertex integral " + key.to_string() + " exceeds the target dimension " +
                                std::to_string(*ctx.target_dim));
        if (ctx.target_dim && dim == *ctx.target_dim) {
            if (ctx.unknowns.contains(key)) {
                result.add_term(key, coeff);
                continue;
            }
            std::optional<Rational> known = ctx.table ? ctx.table->find(key) : std::nullopt;
            if (!known)
                throw InternalError("same-dimension integral " + key.to_string() +
                                    " is neither solved nor a current unknown");
            result.add_constant(coeff * *known);
            continue;
        }
        if (!ctx.resolve) throw InternalError("no resolver for lower-dimensional integral " + key.to_string());
        result.add_constant(coeff * ctx.resolve(key));
    }
    return result * prefactor;
}

const LinearExpr& Expander::vertex(const VertexTriple& triple) {
    auto it = memo_.find(triple);
    if (it != memo_.end()) return it->second;
    LinearExpr value = d_vertex(triple, ctx_);
    return memo_.emplace(triple, std::move(value)).first->second;
}

LinearExpr Expander::bullet(const Partition& nu, const ExponentTuple& e, int chi0) {
    LinearExpr total;
    for (const auto& config : enumerate_vertex_configs(nu, e, chi0)) {
        LinearExpr term(config.weight);
        for (const auto& v : config.vertices) {
            term = term * vertex(v);
            if (term.is_constant() && term.constant().is_zero()) break;
        }
        total += term;
    }
    return total * Rational(aut_order(e));
}

LinearExpr d_bullet(const Partition& nu, const ExponentTuple& e, int chi0, const ExpansionContext& ctx) {
    Expander expander(ctx);
    return expander.bullet(nu, e, chi0);
}

}  // namespace hodge
