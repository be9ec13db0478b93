#pragma once

#include "hodge/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hodge {

/// Dense power series in t truncated after t^order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order);
    TruncatedSeries(std::vector<Rational> coefficients);

    static TruncatedSeries constant(const Rational& c, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    Rational& operator[](std::size_t i) { return coeffs_.at(i); }
    std::span<const Rational> coefficients() const { return coeffs_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries pow(unsigned exponent) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Multiplicative inverse mod t^{order+1}. Throws std::domain_error if the
/// constant term is zero.
TruncatedSeries series_reciprocal(const TruncatedSeries& s);

/// sinh(k t / 2) / (k t / 2) up to t^order.
TruncatedSeries sinh_norm_series(unsigned k, std::size_t order);

}  // namespace hodge
