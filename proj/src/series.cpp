#include "hodge/series.hpp"

#include <stdexcept>
#include <utility>

namespace hodge {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least a constant term");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
    TruncatedSeries s(order);
    s[0] = c;
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("series orders differ");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series orders differ");
    const std::size_t n = a.coeffs_.size();
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
    *this = *this * o;
    return *this;
}

TruncatedSeries TruncatedSeries::pow(unsigned exponent) const {
    TruncatedSeries result = constant(1, order());
    TruncatedSeries base = *this;
    while (exponent) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& s) {
    if (s[0].is_zero()) throw std::domain_error("series reciprocal: zero constant term");
    const std::size_t n = s.order();
    TruncatedSeries r(n);
    const Rational inv0 = s[0].reciprocal();
    r[0] = inv0;
    for (std::size_t i = 1; i <= n; ++i) {
        Rational acc;
        for (std::size_t j = 1; j <= i; ++j) acc += s[j] * r[i - j];
        r[i] = -acc * inv0;
    }
    return r;
}

TruncatedSeries sinh_norm_series(unsigned k, std::size_t order) {
    TruncatedSeries s(order);
    const Rational half_k(static_cast<long>(k), 2);
    for (std::size_t m = 0; 2 * m <= order; ++m)
        s[2 * m] = half_k.pow(static_cast<long>(2 * m)) / Rational(factorial(static_cast<unsigned>(2 * m + 1)));
    return s;
}

}  // namespace hodge
