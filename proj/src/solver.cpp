#include "hodge/solver.hpp"

#include "hodge/errors.hpp"

#include <algorithm>

namespace hodge {

LinearSystem::LinearSystem(std::size_t unknown_count) : n_(unknown_count) {
    if (n_ == 0) throw InvalidInput("LinearSystem needs at least one unknown");
}

AddResult LinearSystem::add_row(const RelationRow& row) {
    if (row.coefficients.size() != n_)
        throw InvalidInput("relation row has " + std::to_string(row.coefficients.size()) + " coefficients, expected " +
                           std::to_string(n_));
    std::vector<Rational> coeffs = row.coefficients;
    Rational constant = row.constant;
    for (const auto& er : echelon_) {
        const Rational factor = coeffs[er.pivot];
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (!er.coeffs[j].is_zero()) coeffs[j] -= factor * er.coeffs[j];
        constant -= factor * er.constant;
    }
    auto it = std::find_if(coeffs.begin(), coeffs.end(), [](const Rational& c) { return !c.is_zero(); });
    if (it == coeffs.end()) {
        if (!constant.is_zero()) return AddResult::Inconsistent;
        rows_.push_back(row);
        return AddResult::Redundant;
    }
    const std::size_t pivot = static_cast<std::size_t>(it - coeffs.begin());
    const Rational inv = coeffs[pivot].reciprocal();
    for (auto& c : coeffs) c *= inv;
    constant *= inv;
    // keep earlier rows reduced in the new pivot column
    for (auto& er : echelon_) {
        const Rational factor = er.coeffs[pivot];
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (!coeffs[j].is_zero()) er.coeffs[j] -= factor * coeffs[j];
        er.constant -= factor * constant;
    }
    echelon_.push_back({pivot, std::move(coeffs), std::move(constant)});
    rows_.push_back(row);
    return AddResult::RankIncreased;
}

std::vector<Rational> LinearSystem::solve() const {
    if (!full_rank())
        throw RankDeficient("need more relations: rank " + std::to_string(rank()) + " of " + std::to_string(n_));
    // Fully reduced: each row reads x_pivot + constant = 0.
    std::vector<Rational> x(n_);
    for (const auto& er : echelon_) x[er.pivot] = -er.constant;
    return x;
}

std::vector<Rational> LinearSystem::residuals(const std::vector<Rational>& x) const {
    if (x.size() != n_) throw InvalidInput("residuals: wrong solution length");
    std::vector<Rational> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) {
        Rational acc = row.constant;
        for (std::size_t j = 0; j < n_; ++j) acc += row.coefficients[j] * x[j];
        out.push_back(acc);
    }
    return out;
}

}  // namespace hodge
