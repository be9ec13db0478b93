#pragma once

#include "hodge/hodge_key.hpp"
#include "hodge/rational.hpp"

#include <map>

namespace hodge {

/// constant + sum coefficient * (unknown integral)
class LinearExpr {
public:
    LinearExpr() = default;
    LinearExpr(Rational constant) : constant_(std::move(constant)) {}  // NOLINT(google-explicit-constructor)

    static LinearExpr unknown(const HodgeKey& key, const Rational& coefficient = 1);

    const Rational& constant() const { return constant_; }
    const std::map<HodgeKey, Rational>& terms() const { return terms_; }
    bool is_constant() const { return terms_.empty(); }
    Rational coefficient(const HodgeKey& key) const;

    void add_term(const HodgeKey& key, const Rational& coefficient);
    void add_constant(const Rational& c) { constant_ += c; }

    LinearExpr& operator+=(const LinearExpr& o);
    LinearExpr& operator*=(const Rational& s);
    friend LinearExpr operator+(LinearExpr a, const LinearExpr& b) { return a += b; }
    friend LinearExpr operator*(LinearExpr a, const Rational& s) { return a *= s; }
    friend LinearExpr operator*(const Rational& s, LinearExpr a) { return a *= s; }
    /// Throws InternalError if both sides carry unknowns: the result would
    /// not be linear.
    friend LinearExpr operator*(const LinearExpr& a, const LinearExpr& b);

    friend bool operator==(const LinearExpr&, const LinearExpr&) = default;

private:
    Rational constant_;
    std::map<HodgeKey, Rational> terms_;  // no zero coefficients
};

}  // namespace hodge
