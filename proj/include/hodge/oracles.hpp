#pragma once

#include "hodge/rational.hpp"

#include <vector>

namespace hodge {

/// (sum k_i)! / prod k_i!
BigInt multinomial(const std::vector<int>& parts);

/// b_g = (2^{2g-1} - 1)/2^{2g-1} * |B_{2g}| / (2g)!,  g >= 1.
Rational lambda_g_constant(int genus);

/// \int_{Mbar_{g,n}} psi^{k_1}...psi^{k_n} lambda_g for sum k_i = 2g - 3 + n,
/// g >= 1. Throws InvalidInput otherwise.
Rational oracle_lambda_g(int genus, const std::vector<int>& exponents);

/// \int_{Mbar_{0,n}} psi^{k_1}...psi^{k_n} for sum k_i = n - 3, n >= 3.
Rational oracle_genus0(const std::vector<int>& exponents);

/// \int_{Mbar_{g,1}} psi^{2g-1} lambda_{g-1}, g >= 2:
///   b_g H_{2g-1} - 1/2 sum_{g1+g2=g, g1,g2>=1} (2g1-1)!(2g2-1)!/(2g-1)! b_g1 b_g2.
Rational oracle_lambda_gm1_onepoint(int genus);

}  // namespace hodge
