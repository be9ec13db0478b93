#include "hodge/hodge_table.hpp"

#include "hodge/errors.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hodge {

std::optional<Rational> HodgeTable::find(const HodgeKey& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

const Rational& HodgeTable::at(const HodgeKey& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw InternalError("no table entry for " + key.to_string());
    return it->second;
}

bool HodgeTable::is_persisted(const HodgeKey& key) const {
    auto it = persisted_.find(key);
    return it != persisted_.end() && it->second;
}

void HodgeTable::insert(const HodgeKey& key, const Rational& value, bool persisted) {
    auto [it, inserted] = values_.try_emplace(key, value);
    if (!inserted && it->second != value)
        throw InternalError("conflicting values for " + key.to_string() + ": " + it->second.to_string() + " vs " +
                            value.to_string());
    auto& flag = persisted_[key];
    flag = flag || persisted;
}

void HodgeTable::mark_persisted(const HodgeKey& key) { persisted_[key] = true; }

std::string HodgeTable::format_record(const HodgeKey& key, const Rational& value) {
    return key.to_string() + " = " + value.to_string();
}

HodgeTable HodgeTable::read(std::istream& in) {
    HodgeTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CacheError("cache line " + std::to_string(lineno) + ": missing '='");
        try {
            std::string lhs = line.substr(0, eq);
            std::string rhs = line.substr(eq + 1);
            auto trim = [](std::string& s) {
                s.erase(0, s.find_first_not_of(" \t"));
                s.erase(s.find_last_not_of(" \t") + 1);
            };
            trim(lhs);
            trim(rhs);
            const HodgeKey key = HodgeKey::parse(lhs);
            const Rational value = Rational::parse(rhs);
            if (auto prev = table.find(key); prev && *prev != value)
                throw CacheError("conflicting duplicate entry for " + key.to_string());
            table.insert(key, value, true);
        } catch (const CacheError& e) {
            throw CacheError("cache line " + std::to_string(lineno) + ": " + e.what());
        } catch (const std::exception& e) {
            throw CacheError("cache line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return table;
}

HodgeTable HodgeTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CacheError("cannot open cache file " + path.string());
    try {
        return read(in);
    } catch (const CacheError& e) {
        throw CacheError(path.string() + ": " + e.what());
    }
}

void HodgeTable::write(std::ostream& out) const {
    for (const auto& [key, value] : values_) out << format_record(key, value) << '\n';
}

void HodgeTable::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw CacheError("cannot write " + path.string());
    write(out);
    out.flush();
    if (!out) throw CacheError("write failed for " + path.string());
}

}  // namespace hodge
