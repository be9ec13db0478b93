#include "hodge/partitions.hpp"

#include "hodge/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace hodge {

namespace {

std::string bracketed(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::map<int, int> count_values(const std::vector<int>& v) {
    std::map<int, int> m;
    for (int x : v) ++m[x];
    return m;
}

BigInt product_of_factorials(const std::map<int, int>& mult) {
    BigInt r = 1;
    for (const auto& [value, count] : mult) r *= factorial(static_cast<unsigned>(count));
    return r;
}

// All compositions of total into `parts` non-negative entries.
void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == parts - 1) {
            cur[static_cast<std::size_t>(idx)] = left;
            fn(cur);
            return;
        }
        for (int x = left; x >= 0; --x) {
            cur[static_cast<std::size_t>(idx)] = x;
            rec(idx + 1, left - x);
        }
    };
    if (parts == 0) {
        if (total == 0) fn(cur);
        return;
    }
    rec(0, total);
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw InvalidInput("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::map<int, int> Partition::multiplicities() const { return count_values(parts_); }

int Partition::count(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const { return bracketed(parts_); }

ExponentTuple::ExponentTuple(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int x : entries_)
        if (x < 0) throw InvalidInput("exponents must be non-negative");
    std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

int ExponentTuple::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::map<int, int> ExponentTuple::multiplicities() const { return count_values(entries_); }

std::string ExponentTuple::to_string() const { return bracketed(entries_); }

std::vector<Partition> enumerate_partitions(int d) {
    std::vector<Partition> out;
    if (d < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

BigInt z_factor(const Partition& nu) {
    BigInt r = 1;
    for (const auto& [value, count] : nu.multiplicities()) {
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(value), static_cast<unsigned long>(count));
        r *= pw * factorial(static_cast<unsigned>(count));
    }
    return r;
}

BigInt aut_order(const Partition& nu) { return product_of_factorials(nu.multiplicities()); }

BigInt aut_order(const ExponentTuple& e) { return product_of_factorials(e.multiplicities()); }

std::vector<std::vector<Partition>> multiset_splits(const Partition& nu) {
    // Work on multiplicity vectors over the distinct values (largest first);
    // blocks are emitted in lexicographically non-increasing order, which
    // makes every unordered split appear once.
    std::vector<int> values, remaining;
    const auto mult = nu.multiplicities();
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        values.push_back(it->first);
        remaining.push_back(it->second);
    }
    const std::size_t r = values.size();
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> blocks;

    auto to_partition = [&](const std::vector<int>& v) {
        std::vector<int> parts;
        for (std::size_t i = 0; i < r; ++i)
            for (int c = 0; c < v[i]; ++c) parts.push_back(values[i]);
        return Partition(std::move(parts));
    };

    std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& prev) {
        if (std::all_of(remaining.begin(), remaining.end(), [](int c) { return c == 0; })) {
            out.push_back(blocks);
            return;
        }
        // Enumerate candidate blocks v <= remaining (componentwise), v <=lex prev, v != 0.
        std::vector<int> v(r, 0);
        std::function<void(std::size_t, bool)> pick = [&](std::size_t i, bool below_prev) {
            if (i == r) {
                if (std::all_of(v.begin(), v.end(), [](int c) { return c == 0; })) return;
                for (std::size_t j = 0; j < r; ++j) remaining[j] -= v[j];
                blocks.push_back(to_partition(v));
                rec(v);
                blocks.pop_back();
                for (std::size_t j = 0; j < r; ++j) remaining[j] += v[j];
                return;
            }
            const int hi = below_prev ? remaining[i] : std::min(remaining[i], prev[i]);
            for (int c = hi; c >= 0; --c) {
                v[i] = c;
                pick(i + 1, below_prev || c < prev[i]);
            }
            v[i] = 0;
        };
        pick(0, false);
    };
    rec(remaining);
    return out;
}

std::vector<VertexConfig> enumerate_vertex_configs(const Partition& nu, const ExponentTuple& e, int chi0) {
    std::vector<VertexConfig> out;
    if (chi0 % 2 != 0 || chi0 > 2 * nu.length() || nu.empty()) return out;

    const auto e_mult = e.multiplicities();
    std::vector<std::pair<int, int>> e_values(e_mult.begin(), e_mult.end());

    std::set<std::vector<VertexTriple>> seen;
    for (const auto& blocks : multiset_splits(nu)) {
        const std::size_t m = blocks.size();
        const int total_genus = static_cast<int>(m) - chi0 / 2;
        if (total_genus < 0) continue;

        std::vector<std::vector<int>> e_parts(m);
        for_each_composition(total_genus, static_cast<int>(m), [&](const std::vector<int>& genera) {
            // distribute each distinct exponent value over the m vertices
            std::function<void(std::size_t)> place = [&](std::size_t vi) {
                if (vi == e_values.size()) {
                    std::vector<VertexTriple> triples;
                    triples.reserve(m);
                    for (std::size_t i = 0; i < m; ++i)
                        triples.push_back({genera[i], blocks[i], ExponentTuple(e_parts[i])});
                    std::sort(triples.begin(), triples.end());
                    seen.insert(std::move(triples));
                    return;
                }
                const auto [value, count] = e_values[vi];
                for_each_composition(count, static_cast<int>(m), [&](const std::vector<int>& split) {
                    for (std::size_t i = 0; i < m; ++i) e_parts[i].insert(e_parts[i].end(), split[i], value);
                    place(vi + 1);
                    for (std::size_t i = 0; i < m; ++i) e_parts[i].resize(e_parts[i].size() - split[i]);
                });
            };
            place(0);
        });
    }

    out.reserve(seen.size());
    for (const auto& triples : seen) {
        BigInt denom = 1;
        std::size_t i = 0;
        while (i < triples.size()) {
            std::size_t j = i;
            while (j < triples.size() && triples[j] == triples[i]) ++j;
            denom *= factorial(static_cast<unsigned>(j - i));
            i = j;
        }
        out.push_back({triples, Rational(BigInt(1), denom)});
    }
    return out;
}

}  // namespace hodge
