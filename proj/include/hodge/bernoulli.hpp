#pragma once

#include "hodge/rational.hpp"

namespace hodge {

/// B_m from sum_{k=0}^{m} C(m+1, k) B_k = 0 (m > 0), B_0 = 1, so B_1 = -1/2.
/// Values are memoized; safe to call from several threads.
Rational bernoulli(unsigned m);

}  // namespace hodge
