#include "hodge/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace hodge {

Rational bernoulli(unsigned m) {
    static std::mutex mu;
    static std::vector<Rational> memo{Rational(1)};
    std::lock_guard lock(mu);
    while (memo.size() <= m) {
        // (m+1) B_m = -sum_{k<m} C(m+1, k) B_k
        const long next = static_cast<long>(memo.size());
        Rational acc;
        for (long k = 0; k < next; ++k) acc += Rational(binomial(next + 1, k)) * memo[k];
        memo.push_back(-acc / Rational(next + 1));
    }
    return memo[m];
}

}  // namespace hodge
