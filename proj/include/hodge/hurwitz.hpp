#pragma once

#include "hodge/partitions.hpp"
#include "hodge/rational.hpp"

namespace hodge {

/// [t^{2 g_inf}] prod_k (sinh(kt/2)/(kt/2))^{c_k}, with c_1 = #1-parts - 1 and
/// c_k = #k-parts otherwise. Evaluated through the explicit coefficient sums:
/// the direct product expansion when nu contains a 1, and the telescoped
/// exponential-sum form with h = smallest part when it does not.
Rational sinh_product_coefficient(const Partition& nu, int g_inf);

/// Same coefficient by brute-force truncated-series multiplication (and one
/// series division by sinh(t/2)/(t/2) when c_1 = -1). Used as a cross-check.
Rational sinh_product_coefficient_series(const Partition& nu, int g_inf);

/// H^bullet_{chi_inf}((d), nu) / r!, r = 2 g_inf - 1 + l(nu):
///   d^{2 g_inf - 2 + l(nu)} / |Aut nu| * sinh_product_coefficient(nu, g_inf).
/// Throws InvalidInput when |nu| != d.
Rational hurwitz_weight(int d, const Partition& nu, int g_inf);

/// Number of simple branch points for the (d)-nu cover of genus g_inf.
inline int branch_points(const Partition& nu, int g_inf) { return 2 * g_inf - 1 + nu.length(); }

struct HurwitzWeight {
    int d;
    Partition nu;
    int g_inf;
    Rational value;

    static HurwitzWeight make(int d, const Partition& nu, int g_inf) {
        return {d, nu, g_inf, hurwitz_weight(d, nu, g_inf)};
    }
};

}  // namespace hodge
