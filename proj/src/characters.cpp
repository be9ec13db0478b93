#include "hodge/characters.hpp"

#include "hodge/errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <span>

namespace hodge {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

// Border strips are removed through beta-numbers: a k-strip is a bead moved
// from b to b - k, with sign (-1)^{beads strictly between}.
long long mn_rec(const std::vector<int>& lambda, std::span<const int> mu, std::map<Key, long long>& memo) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    Key key{lambda, std::vector<int>(mu.begin(), mu.end())};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int k = mu.front();
    const int n = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < n; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + n - 1 - i;

    long long total = 0;
    for (int i = 0; i < n; ++i) {
        const int from = beta[static_cast<std::size_t>(i)];
        const int to = from - k;
        if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > to && b < from) ++between;
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = to;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> next;
        for (int j = 0; j < n; ++j) {
            int part = moved[static_cast<std::size_t>(j)] - (n - 1 - j);
            if (part > 0) next.push_back(part);
        }
        const long long sub = mn_rec(next, mu.subspan(1), memo);
        total += (between % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

long long mn_character(const Partition& irrep, const Partition& class_type) {
    if (irrep.size() != class_type.size())
        throw InvalidInput("mn_character: |irrep| = " + std::to_string(irrep.size()) +
                           " but |class| = " + std::to_string(class_type.size()));
    std::map<Key, long long> memo;
    return mn_rec(irrep.parts(), class_type.parts(), memo);
}

CharacterTable::CharacterTable(int d) : d_(d), partitions_(enumerate_partitions(d)) {
    if (d < 0) throw InvalidInput("CharacterTable: negative degree");
    std::map<Key, long long> memo;
    values_.resize(partitions_.size());
    for (std::size_t i = 0; i < partitions_.size(); ++i)
        for (const auto& cls : partitions_)
            values_[i].push_back(mn_rec(partitions_[i].parts(), cls.parts(), memo));
}

const CharacterTable& CharacterTable::of_degree(int d) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CharacterTable>> tables;
    std::lock_guard lock(mu);
    auto& slot = tables[d];
    if (!slot) slot = std::make_unique<CharacterTable>(d);
    return *slot;
}

std::size_t CharacterTable::index_of(const Partition& p) const {
    auto it = std::find(partitions_.begin(), partitions_.end(), p);
    if (it == partitions_.end()) throw InvalidInput("partition " + p.to_string() + " is not of size " + std::to_string(d_));
    return static_cast<std::size_t>(it - partitions_.begin());
}

long long CharacterTable::value(const Partition& irrep, const Partition& class_type) const {
    return values_[index_of(irrep)][index_of(class_type)];
}

long long CharacterTable::dimension(const Partition& irrep) const {
    return values_[index_of(irrep)].back();  // class 1^d is enumerated last
}

Rational transposition_central_character(const Partition& xi) {
    const int d = xi.size();
    if (d < 2) return 0;
    const auto& table = CharacterTable::of_degree(d);
    std::vector<int> cls(static_cast<std::size_t>(d - 1), 1);
    cls.front() = 2;
    return Rational(static_cast<long>(d) * (d - 1) / 2) * Rational(table.value(xi, Partition(cls))) /
           Rational(table.dimension(xi));
}

Rational burnside_double_hurwitz(const Partition& mu, const Partition& nu, int r) {
    if (mu.size() != nu.size()) throw InvalidInput("burnside_double_hurwitz: |mu| != |nu|");
    if (r < 0) throw InvalidInput("burnside_double_hurwitz: negative r");
    const auto& table = CharacterTable::of_degree(mu.size());
    const Rational z_mu(z_factor(mu)), z_nu(z_factor(nu));
    Rational total;
    for (const auto& xi : table.partitions()) {
        const Rational f = transposition_central_character(xi);
        total += f.pow(r) * Rational(table.value(xi, nu)) / z_nu * Rational(table.value(xi, mu)) / z_mu;
    }
    return total;
}

}  // namespace hodge
