#pragma once

#include "hodge/partitions.hpp"

#include <compare>
#include <string>
#include <variant>
#include <vector>

namespace hodge {

/// Identity of  \int_{Mbar_{g,m}} psi_1^{a_1} ... psi_m^{a_m} lambda_k.
/// Only stable, dimension-consistent keys can be constructed.
class HodgeKey {
public:
    /// Throws InvalidInput unless stable and k + sum(a) = 3g - 3 + m.
    HodgeKey(int genus, int lambda_index, ExponentTuple psi);

    int genus() const { return genus_; }
    int lambda_index() const { return lambda_; }
    const ExponentTuple& psi() const { return psi_; }
    int points() const { return psi_.length(); }
    int dimension() const { return 3 * genus_ - 3 + points(); }

    /// "g k [a_1,...,a_m]"
    std::string to_string() const;
    /// Inverse of to_string().
    static HodgeKey parse(std::string_view text);

    friend bool operator==(const HodgeKey&, const HodgeKey&) = default;
    /// Orders by (dimension, genus, lambda index, exponents).
    friend std::strong_ordering operator<=>(const HodgeKey& a, const HodgeKey& b);

private:
    int genus_;
    int lambda_;
    ExponentTuple psi_;
};

struct ZeroIntegral {
    friend bool operator==(ZeroIntegral, ZeroIntegral) = default;
};
struct UnstableSpace {
    friend bool operator==(UnstableSpace, UnstableSpace) = default;
};

using CanonicalKey = std::variant<HodgeKey, ZeroIntegral, UnstableSpace>;

/// Canonicalizes an arbitrary request. Unstable when 2g - 2 + m <= 0,
/// Zero when lambda_index > genus or the degree does not match the
/// dimension. Negative arguments or m = 0 throw InvalidInput.
CanonicalKey canonical_key(int genus, int lambda_index, const std::vector<int>& exponents);

}  // namespace hodge
