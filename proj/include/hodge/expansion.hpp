#pragma once

#include "hodge/hodge_table.hpp"
#include "hodge/linear_expr.hpp"
#include "hodge/partitions.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>

namespace hodge {

/// What to do with the integrals met while expanding vertex contributions.
/// Keys of dimension target_dim are symbolic when listed in `unknowns` and
/// are read from `table` otherwise; lower keys go through `resolve`.
struct ExpansionContext {
    std::optional<int> target_dim;
    std::set<HodgeKey> unknowns;
    const HodgeTable* table = nullptr;
    std::function<Rational(const HodgeKey&)> resolve;
};

/// Vertex contribution D_{g, nu, e}. The three unstable shapes (g, l(nu), l(e))
/// = (0,1,0), (0,2,0), (0,1,1) are closed forms; everything else is
///   1/(|Aut nu| |Aut e|) prod nu_i^{nu_i}/nu_i!
///     * \int Lambda_g^vee(1) prod_j (1 - psi_j)^{e_j} / prod_i (1 - nu_i psi_i)
/// expanded into single-lambda integrals.
LinearExpr d_vertex(const VertexTriple& triple, const ExpansionContext& ctx);

/// Disconnected contribution D^bullet_{chi0, nu, e} for labelled marked
/// points: |Aut e| * sum over vertex configurations of weight * prod D.
LinearExpr d_bullet(const Partition& nu, const ExponentTuple& e, int chi0, const ExpansionContext& ctx);

/// d_vertex / d_bullet with vertex values memoized across calls. The
/// context (and the table it points to) must outlive the expander.
class Expander {
public:
    explicit Expander(ExpansionContext ctx) : ctx_(std::move(ctx)) {}

    const ExpansionContext& context() const { return ctx_; }
    const LinearExpr& vertex(const VertexTriple& triple);
    LinearExpr bullet(const Partition& nu, const ExponentTuple& e, int chi0);

private:
    ExpansionContext ctx_;
    std::map<VertexTriple, LinearExpr> memo_;
};

}  // namespace hodge
