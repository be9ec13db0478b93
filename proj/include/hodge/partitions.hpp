#pragma once

#include "hodge/rational.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace hodge {

/// Integer partition: positive parts stored weakly decreasing.
class Partition {
public:
    Partition() = default;
    Partition(std::vector<int> parts);  // sorts; throws InvalidInput on parts <= 0
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// part value -> multiplicity
    std::map<int, int> multiplicities() const;
    int count(int value) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Multiset of non-negative exponents, stored weakly decreasing.
class ExponentTuple {
public:
    ExponentTuple() = default;
    ExponentTuple(std::vector<int> entries);  // sorts; throws InvalidInput on negatives
    ExponentTuple(std::initializer_list<int> entries) : ExponentTuple(std::vector<int>(entries)) {}

    const std::vector<int>& entries() const { return entries_; }
    int length() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    int sum() const;
    int max() const { return entries_.empty() ? 0 : entries_.front(); }
    std::map<int, int> multiplicities() const;

    std::string to_string() const;

    friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;
    friend auto operator<=>(const ExponentTuple& a, const ExponentTuple& b) { return a.entries_ <=> b.entries_; }

private:
    std::vector<int> entries_;
};

/// One vertex on the zero side: its genus, the edge degrees it carries and
/// the marked-point exponents placed on it.
struct VertexTriple {
    int genus = 0;
    Partition nu_block;
    ExponentTuple e_block;

    friend bool operator==(const VertexTriple&, const VertexTriple&) = default;
    friend auto operator<=>(const VertexTriple&, const VertexTriple&) = default;
};

struct VertexConfig {
    std::vector<VertexTriple> vertices;  // sorted ascending
    Rational weight;                     // 1 / prod(multiplicity of identical vertices)!
};

/// All partitions of d, lexicographically decreasing ([d] first, [1^d] last).
std::vector<Partition> enumerate_partitions(int d);

/// prod_i i^{m_i} m_i!
BigInt z_factor(const Partition& nu);
/// prod_i m_i!
BigInt aut_order(const Partition& nu);
BigInt aut_order(const ExponentTuple& e);

/// Every way of cutting the multiset nu into nonempty sub-multisets,
/// each unordered split exactly once. Blocks come out in decreasing order.
std::vector<std::vector<Partition>> multiset_splits(const Partition& nu);

/// Unordered vertex configurations with total Euler characteristic chi0,
/// i.e. sum(2 - 2 genus) = chi0, nu and e distributed over the vertices.
/// Returns an empty list for odd chi0 or chi0 > 2 l(nu).
std::vector<VertexConfig> enumerate_vertex_configs(const Partition& nu, const ExponentTuple& e, int chi0);

}  // namespace hodge
