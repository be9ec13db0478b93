#pragma once

#include "hodge/recursion.hpp"

#include <vector>

namespace hodge {

enum class AddResult { RankIncreased, Redundant, Inconsistent };

/// Exact incremental Gauss-Jordan elimination. Accepted rows are kept in
/// reduced row-echelon form; the original rows are kept for residual checks.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t unknown_count);

    std::size_t unknown_count() const { return n_; }
    std::size_t rank() const { return echelon_.size(); }
    bool full_rank() const { return rank() == n_; }
    const std::vector<RelationRow>& rows() const { return rows_; }

    /// An inconsistent row (zero coefficients, nonzero constant) is reported
    /// and not kept.
    AddResult add_row(const RelationRow& row);

    /// Unique solution; throws RankDeficient ("need more relations") when
    /// rank < unknown_count.
    std::vector<Rational> solve() const;

    /// Value of every accepted original row at x (all zero for a solution).
    std::vector<Rational> residuals(const std::vector<Rational>& x) const;

private:
    struct EchelonRow {
        std::size_t pivot;
        std::vector<Rational> coeffs;  // pivot entry normalized to 1
        Rational constant;
    };

    std::size_t n_;
    std::vector<EchelonRow> echelon_;
    std::vector<RelationRow> rows_;
};

}  // namespace hodge
