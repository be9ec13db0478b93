#pragma once

#include "hodge/hodge_table.hpp"
#include "hodge/recursion.hpp"
#include "hodge/solver.hpp"

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hodge {

inline constexpr const char* kCacheEnvVar = "HODGE_CACHE";

struct EngineOptions {
    std::optional<std::filesystem::path> cache_path;
    /// Escalation ceiling is min_degree + unknown count + degree_slack.
    int degree_slack = 32;

    /// Defaults, with cache_path taken from $HODGE_CACHE when set.
    static EngineOptions from_environment();
};

struct EngineStats {
    std::size_t groups_solved = 0;
    std::size_t rows_built = 0;
    std::size_t loaded_from_cache = 0;
};

/// One group solve: the rows that were used, the solution and the residual
/// of every accepted row at that solution.
struct SolveRecord {
    UnknownGroup group;
    std::vector<RelationRow> rows;
    std::vector<Rational> solution;
    std::vector<Rational> residuals;
};

class Engine {
public:
    explicit Engine(EngineOptions options = {});

    /// 0 for dimension-violating or lambda_index > genus requests (no
    /// solving); InvalidInput for unstable ones.
    Rational compute(int genus, int lambda_index, const std::vector<int>& exponents);
    Rational compute(const HodgeKey& key);

    /// Relation row of the group (genus, e) at degree d, with every value it
    /// depends on solved first.
    RelationRow relation(int genus, const ExponentTuple& e, int d);

    /// Solves the group if any member is missing; returns the record of the
    /// solve, or nullopt when everything was already known.
    std::optional<SolveRecord> solve_group(const UnknownGroup& group);

    /// Computes every key of dimension <= max_dim; returns them sorted.
    std::vector<HodgeKey> fill_table(int max_dim);
    /// fill_table, then writes exactly those records to `path` (full rewrite).
    void write_table(int max_dim, const std::filesystem::path& path);

    const HodgeTable& table() const { return table_; }
    const EngineStats& stats() const { return stats_; }
    const std::vector<SolveRecord>& solve_log() const { return log_; }
    const EngineOptions& options() const { return options_; }

private:
    void persist(const std::vector<HodgeKey>& keys);

    EngineOptions options_;
    HodgeTable table_;
    EngineStats stats_;
    std::vector<SolveRecord> log_;
    std::set<std::pair<int, ExponentTuple>> in_progress_;
};

/// Every weakly decreasing tuple of `length` non-negative ints summing to `total`.
std::vector<ExponentTuple> exponent_tuples(int total, int length);

/// Every stable key (m >= 1) of dimension 1 to max_dim, canonically ordered.
/// The point space Mbar_{0,3} is left out.
std::vector<HodgeKey> enumerate_keys(int max_dim);
/// Number of keys of exactly this dimension.
std::size_t count_keys(int dimension);

struct ReferenceValue {
    HodgeKey key;
    Rational value;
};

/// The 32 published integrals of dimensions 1 to 4.
const std::vector<ReferenceValue>& reference_corpus();

struct VerifyScope {
    std::optional<int> max_dim;  // published values, else oracles, for every key up to this dimension
    bool genus0 = false;
    int max_n = 7;
    bool lambda_g = false;
    int lambda_g_max_dim = 5;
    bool lambda_gm1 = false;
    int max_g = 2;
    bool hurwitz = false;
    int max_d = 6;
    int hurwitz_max_g_inf = 2;
};

struct VerifyEntry {
    std::string source;  // "reference", "genus0", "lambda_g", "lambda_gm1", "hurwitz"
    std::string subject;
    Rational expected;
    Rational actual;
    bool matched() const { return expected == actual; }
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;
    std::size_t matched() const;
    std::size_t total() const { return entries.size(); }
    bool ok() const { return matched() == total(); }
};

VerifyReport verify(Engine& engine, const VerifyScope& scope);

}  // namespace hodge
