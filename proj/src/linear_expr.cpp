#include "hodge/linear_expr.hpp"

#include "hodge/errors.hpp"

namespace hodge {

LinearExpr LinearExpr::unknown(const HodgeKey& key, const Rational& coefficient) {
    LinearExpr e;
    e.add_term(key, coefficient);
    return e;
}

Rational LinearExpr::coefficient(const HodgeKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational() : it->second;
}

void LinearExpr::add_term(const HodgeKey& key, const Rational& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (inserted) return;
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
}

LinearExpr& LinearExpr::operator+=(const LinearExpr& o) {
    constant_ += o.constant_;
    for (const auto& [key, c] : o.terms_) add_term(key, c);
    return *this;
}

LinearExpr& LinearExpr::operator*=(const Rational& s) {
    if (s.is_zero()) {
        constant_ = Rational();
        terms_.clear();
        return *this;
    }
    constant_ *= s;
    for (auto& [key, c] : terms_) c *= s;
    return *this;
}

LinearExpr operator*(const LinearExpr& a, const LinearExpr& b) {
    if (!a.is_constant() && !b.is_constant())
        throw InternalError("product of two expressions with unknowns: " + a.terms_.begin()->first.to_string() +
                            " and " + b.terms_.begin()->first.to_string());
    if (a.is_constant()) return b * a.constant_;
    return a * b.constant_;
}

}  // namespace hodge
