#pragma once

#include "hodge/hodge_key.hpp"
#include "hodge/rational.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

namespace hodge {

/// Solved integral values. Cache file format, one record per line:
///   g k [a_1,...,a_m] = num/den
/// sorted by (dimension, g, k, exponents).
class HodgeTable {
public:
    bool contains(const HodgeKey& key) const { return values_.contains(key); }
    std::optional<Rational> find(const HodgeKey& key) const;
    const Rational& at(const HodgeKey& key) const;
    std::size_t size() const { return values_.size(); }
    const std::map<HodgeKey, Rational>& values() const { return values_; }
    bool is_persisted(const HodgeKey& key) const;

    /// Inserting a key twice with different values throws InternalError.
    void insert(const HodgeKey& key, const Rational& value, bool persisted = false);
    void mark_persisted(const HodgeKey& key);

    /// Throws CacheError with the offending line number on malformed input.
    static HodgeTable read(std::istream& in);
    static HodgeTable load(const std::filesystem::path& path);

    void write(std::ostream& out) const;
    void save(const std::filesystem::path& path) const;

    static std::string format_record(const HodgeKey& key, const Rational& value);

private:
    std::map<HodgeKey, Rational> values_;
    std::map<HodgeKey, bool> persisted_;
};

}  // namespace hodge
