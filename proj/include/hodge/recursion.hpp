#pragma once

#include "hodge/expansion.hpp"
#include "hodge/hodge_key.hpp"
#include "hodge/partitions.hpp"

#include <functional>
#include <vector>

namespace hodge {

/// The integrals of genus g on Mbar_{g, l(e)+1} solved together: the free
/// (edge) point carries a0 >= max(e), the others carry exactly e, and the
/// lambda index takes up the remaining degree. Ordered by increasing a0.
struct UnknownGroup {
    int genus = 0;
    ExponentTuple e;
    int target_dim = 0;  // 3g - 2 + l(e)
    std::vector<HodgeKey> unknowns;
};

/// Sum(coefficients . unknowns) + constant = 0.
struct RelationRow {
    int d = 0;
    std::vector<Rational> coefficients;
    Rational constant;
};

/// Throws InvalidInput for an unstable target or an empty group.
UnknownGroup build_group(int genus, const ExponentTuple& e);

/// The group a key is solved in: the largest exponent is the free point.
UnknownGroup group_of(const HodgeKey& key);

/// Smallest d with d > |e| + chi - 1 (and d >= 1).
int min_degree(const UnknownGroup& group);

/// Same-dimension integrals that show up in the group's relations without
/// belonging to it (some constrained exponent strictly below its bound).
/// They sit in groups with smaller |e| and must be solved first.
std::vector<HodgeKey> prior_keys(const UnknownGroup& group);

/// Builds relation rows of one group for successive degrees, reusing vertex
/// expansions between them. `table` must already hold every prior_keys()
/// value; lower-dimensional values come from `resolve`.
class RelationBuilder {
public:
    RelationBuilder(UnknownGroup group, const HodgeTable& table, std::function<Rational(const HodgeKey&)> resolve);

    const UnknownGroup& group() const { return group_; }
    /// Throws InvalidInput naming min_degree() when d is outside the window.
    RelationRow build(int d);
    /// The row as an expression; the coefficients of build(d) are its terms.
    LinearExpr build_expr(int d);

private:
    UnknownGroup group_;
    Expander expander_;
};

RelationRow build_relation(const UnknownGroup& group, int d, const HodgeTable& table,
                           std::function<Rational(const HodgeKey&)> resolve);

}  // namespace hodge
