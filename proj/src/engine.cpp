#include "hodge/engine.hpp"

#include "hodge/errors.hpp"

#include <cstdlib>
#include <fstream>

namespace hodge {

EngineOptions EngineOptions::from_environment() {
    EngineOptions options;
    if (const char* path = std::getenv(kCacheEnvVar); path != nullptr && *path != '\0') options.cache_path = path;
    return options;
}

Engine::Engine(EngineOptions options) : options_(std::move(options)) {
    if (options_.degree_slack < 0) throw InvalidInput("degree slack must be non-negative");
    if (options_.cache_path && std::filesystem::exists(*options_.cache_path)) {
        table_ = HodgeTable::load(*options_.cache_path);
        stats_.loaded_from_cache = table_.size();
    }
}

Rational Engine::compute(int genus, int lambda_index, const std::vector<int>& exponents) {
    const CanonicalKey canonical = canonical_key(genus, lambda_index, exponents);
    if (std::holds_alternative<UnstableSpace>(canonical))
        throw InvalidInput("Mbar_{" + std::to_string(genus) + "," + std::to_string(exponents.size()) +
                           "} is unstable");
    if (std::holds_alternative<ZeroIntegral>(canonical)) return Rational(0);
    return compute(std::get<HodgeKey>(canonical));
}

Rational Engine::compute(const HodgeKey& key) {
    if (auto hit = table_.find(key)) return *hit;
    solve_group(group_of(key));
    if (auto hit = table_.find(key)) return *hit;
    throw InternalError("group solve did not produce " + key.to_string());
}

namespace {

void require_priors(Engine& engine, const UnknownGroup& group) {
    for (const auto& key : prior_keys(group)) engine.compute(key);
}

}  // namespace

RelationRow Engine::relation(int genus, const ExponentTuple& e, int d) {
    const UnknownGroup group = build_group(genus, e);
    if (d < min_degree(group))
        throw InvalidInput("degree " + std::to_string(d) + " is outside the validity window; minimal legal d is " +
                           std::to_string(min_degree(group)));
    require_priors(*this, group);
    RelationBuilder builder(group, table_, [this](const HodgeKey& k) { return compute(k); });
    ++stats_.rows_built;
    return builder.build(d);
}

std::optional<SolveRecord> Engine::solve_group(const UnknownGroup& group) {
    bool complete = true;
    for (const auto& key : group.unknowns) complete = complete && table_.contains(key);
    if (complete) return std::nullopt;

    const auto tag = std::make_pair(group.genus, group.e);
    if (!in_progress_.insert(tag).second)
        throw InternalError("cyclic dependency on group g=" + std::to_string(group.genus) + " e=" + group.e.to_string());
    struct Release {
        std::set<std::pair<int, ExponentTuple>>& set;
        std::pair<int, ExponentTuple> tag;
        ~Release() { set.erase(tag); }
    } release{in_progress_, tag};

    require_priors(*this, group);

    RelationBuilder builder(group, table_, [this](const HodgeKey& k) { return compute(k); });
    LinearSystem system(group.unknowns.size());
    const int first = min_degree(group);
    const int ceiling = first + static_cast<int>(group.unknowns.size()) + options_.degree_slack;
    for (int d = first; !system.full_rank(); ++d) {
        if (d > ceiling)
            throw EscalationError("no full-rank system for g=" + std::to_string(group.genus) + " e=" +
                                  group.e.to_string() + " up to d=" + std::to_string(ceiling) + " (rank " +
                                  std::to_string(system.rank()) + " of " + std::to_string(group.unknowns.size()) + ")");
        const RelationRow row = builder.build(d);
        ++stats_.rows_built;
        if (system.add_row(row) == AddResult::Inconsistent)
            throw InconsistentSystem(d, "relation at d=" + std::to_string(d) + " contradicts earlier rows for g=" +
                                            std::to_string(group.genus) + " e=" + group.e.to_string());
    }

    SolveRecord record{group, system.rows(), system.solve(), {}};
    record.residuals = system.residuals(record.solution);
    for (const auto& r : record.residuals)
        if (!r.is_zero()) throw InternalError("nonzero residual after solving g=" + std::to_string(group.genus));

    std::vector<HodgeKey> fresh;
    for (std::size_t i = 0; i < group.unknowns.size(); ++i) {
        const HodgeKey& key = group.unknowns[i];
        if (table_.contains(key)) {
            if (table_.at(key) != record.solution[i])
                throw InconsistentSystem(first, "solved " + key.to_string() + " = " + record.solution[i].to_string() +
                                                    " disagrees with the cached " + table_.at(key).to_string());
            continue;
        }
        table_.insert(key, record.solution[i]);
        fresh.push_back(key);
    }
    persist(fresh);
    ++stats_.groups_solved;
    log_.push_back(record);
    return record;
}

void Engine::persist(const std::vector<HodgeKey>& keys) {
    if (!options_.cache_path || keys.empty()) return;
    std::ofstream out(*options_.cache_path, std::ios::app);
    if (!out) throw CacheError("cannot open cache file " + options_.cache_path->string() + " for appending");
    for (const auto& key : keys) out << HodgeTable::format_record(key, table_.at(key)) << '\n';
    out.flush();
    if (!out) throw CacheError("failed writing cache file " + options_.cache_path->string());
    for (const auto& key : keys) table_.mark_persisted(key);
}

std::vector<HodgeKey> Engine::fill_table(int max_dim) {
    if (max_dim < 1) throw InvalidInput("table dimension must be at least 1");
    std::vector<HodgeKey> keys = enumerate_keys(max_dim);
    for (const auto& key : keys) compute(key);
    return keys;
}

void Engine::write_table(int max_dim, const std::filesystem::path& path) {
    HodgeTable out;
    for (const auto& key : fill_table(max_dim)) out.insert(key, table_.at(key));
    out.save(path);
}

namespace {

// Non-increasing sequences of `length` non-negative ints summing to `total`.
void exponent_multisets(int total, int length, int cap, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (length == 0) {
        if (total == 0) out.push_back(prefix);
        return;
    }
    for (int x = std::min(total, cap); x >= 0; --x) {
        if (x * length < total) break;
        prefix.push_back(x);
        exponent_multisets(total - x, length - 1, x, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<ExponentTuple> exponent_tuples(int total, int length) {
    if (total < 0 || length < 0) return {};
    std::vector<std::vector<int>> raw;
    std::vector<int> prefix;
    exponent_multisets(total, length, total, prefix, raw);
    return {raw.begin(), raw.end()};
}

std::vector<HodgeKey> enumerate_keys(int max_dim) {
    std::set<HodgeKey> keys;
    for (int g = 0; 3 * g - 2 <= max_dim; ++g) {
        for (int m = 1; 3 * g - 3 + m <= max_dim; ++m) {
            const int dim = 3 * g - 3 + m;
            if (2 * g - 2 + m <= 0 || dim < 1) continue;
            for (int k = 0; k <= g && k <= dim; ++k) {
                for (auto& t : exponent_tuples(dim - k, m)) keys.emplace(g, k, std::move(t));
            }
        }
    }
    return {keys.begin(), keys.end()};
}

std::size_t count_keys(int dimension) {
    std::size_t n = 0;
    for (const auto& key : enumerate_keys(dimension))
        if (key.dimension() == dimension) ++n;
    return n;
}

}  // namespace hodge
