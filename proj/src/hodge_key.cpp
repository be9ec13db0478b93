#include "hodge/hodge_key.hpp"

#include "hodge/errors.hpp"

#include <cctype>
#include <charconv>

namespace hodge {

HodgeKey::HodgeKey(int genus, int lambda_index, ExponentTuple psi)
    : genus_(genus), lambda_(lambda_index), psi_(std::move(psi)) {
    if (genus_ < 0 || lambda_ < 0 || lambda_ > genus_) throw InvalidInput("HodgeKey: bad genus/lambda index");
    if (2 * genus_ - 2 + points() <= 0) throw InvalidInput("HodgeKey: unstable space");
    if (lambda_ + psi_.sum() != dimension()) throw InvalidInput("HodgeKey: degree does not match dimension");
}

std::string HodgeKey::to_string() const {
    return std::to_string(genus_) + " " + std::to_string(lambda_) + " " + psi_.to_string();
}

HodgeKey HodgeKey::parse(std::string_view text) {
    auto fail = [&](const char* why) {
        return InvalidInput(std::string("cannot parse key '") + std::string(text) + "': " + why);
    };
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&] {
        skip_ws();
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc()) throw fail("expected integer");
        pos = static_cast<std::size_t>(ptr - text.data());
        return v;
    };
    const int g = read_int();
    const int k = read_int();
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') throw fail("expected '['");
    ++pos;
    std::vector<int> exps;
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            exps.push_back(read_int());
            skip_ws();
            if (pos >= text.size()) throw fail("unterminated exponent list");
            if (text[pos] == ']') {
                ++pos;
                break;
            }
            if (text[pos] != ',') throw fail("expected ','");
            ++pos;
        }
    }
    skip_ws();
    if (pos != text.size()) throw fail("trailing characters");
    return HodgeKey(g, k, ExponentTuple(std::move(exps)));
}

std::strong_ordering operator<=>(const HodgeKey& a, const HodgeKey& b) {
    if (auto c = a.dimension() <=> b.dimension(); c != 0) return c;
    if (auto c = a.genus_ <=> b.genus_; c != 0) return c;
    if (auto c = a.lambda_ <=> b.lambda_; c != 0) return c;
    return a.psi_.entries() <=> b.psi_.entries();
}

CanonicalKey canonical_key(int genus, int lambda_index, const std::vector<int>& exponents) {
    if (genus < 0) throw InvalidInput("genus must be non-negative");
    if (lambda_index < 0) throw InvalidInput("lambda index must be non-negative");
    if (exponents.empty()) throw InvalidInput("at least one marked point is required");
    ExponentTuple psi(exponents);  // validates non-negativity
    const int m = psi.length();
    if (2 * genus - 2 + m <= 0) return UnstableSpace{};
    if (lambda_index > genus) return ZeroIntegral{};
    if (lambda_index + psi.sum() != 3 * genus - 3 + m) return ZeroIntegral{};
    return HodgeKey(genus, lambda_index, std::move(psi));
}

}  // namespace hodge
