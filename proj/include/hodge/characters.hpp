#pragma once

#include "hodge/partitions.hpp"
#include "hodge/rational.hpp"

#include <vector>

namespace hodge {

/// Irreducible characters of S_d; rows are irreps, columns conjugacy classes,
/// both indexed by enumerate_partitions(d).
class CharacterTable {
public:
    /// Shared, lazily built table for degree d.
    static const CharacterTable& of_degree(int d);

    explicit CharacterTable(int d);

    int degree() const { return d_; }
    const std::vector<Partition>& partitions() const { return partitions_; }
    long long value(const Partition& irrep, const Partition& class_type) const;
    long long dimension(const Partition& irrep) const;

private:
    std::size_t index_of(const Partition& p) const;

    int d_;
    std::vector<Partition> partitions_;
    std::vector<std::vector<long long>> values_;
};

/// chi_irrep(class_type) by the Murnaghan-Nakayama rule.
long long mn_character(const Partition& irrep, const Partition& class_type);

/// Central character value |C_(2)| chi_xi(2,1^{d-2}) / dim R_xi (0 when d < 2).
Rational transposition_central_character(const Partition& xi);

/// Disconnected double Hurwitz number with r simple branch points:
///   sum_xi f_xi(2)^r chi_xi(nu)/z_nu chi_xi(mu)/z_mu.
Rational burnside_double_hurwitz(const Partition& mu, const Partition& nu, int r);

}  // namespace hodge
