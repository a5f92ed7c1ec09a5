#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace latgm {

/// Largest supported ground set. Everything indexes into 2^[m] bitmasks, so
/// this bound keeps full-Boolean enumerations within reach.
inline constexpr int kMaxGroundSet = 16;

/// A subset of [m] = {1, ..., m} as a bit vector: element i <-> bit i-1.
///
/// operator< is the (cardinality, numeric value) total order. It refines
/// inclusion, so sorted containers of masks iterate in a linear extension of
/// the subset order; that order is the canonical one used for lattice
/// elements, matrix columns, and all printed listings.
struct SubsetMask {
    std::uint32_t bits = 0;

    constexpr SubsetMask() = default;
    constexpr explicit SubsetMask(std::uint32_t raw) : bits(raw) {}

    static SubsetMask of(std::initializer_list<int> elements) {
        SubsetMask s;
        for (int i : elements) s = s.with(i);
        return s;
    }

    static constexpr SubsetMask empty_set() { return SubsetMask{}; }
    static constexpr SubsetMask full(int m) {
        return SubsetMask(static_cast<std::uint32_t>((1u << m) - 1u));
    }

    constexpr bool contains(int i) const { return (bits >> (i - 1)) & 1u; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }

    SubsetMask with(int i) const {
        if (i < 1 || i > kMaxGroundSet) throw std::invalid_argument("element out of range");
        return SubsetMask(bits | (1u << (i - 1)));
    }
    SubsetMask without(int i) const {
        if (i < 1 || i > kMaxGroundSet) throw std::invalid_argument("element out of range");
        return SubsetMask(bits & ~(1u << (i - 1)));
    }

    constexpr bool subset_of(SubsetMask other) const { return (bits & ~other.bits) == 0; }

    friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits | b.bits); }
    friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits & b.bits); }
    /// Set difference.
    friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits & ~b.bits); }

    friend constexpr bool operator==(SubsetMask a, SubsetMask b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(SubsetMask a, SubsetMask b) { return a.bits != b.bits; }
    friend constexpr bool operator<(SubsetMask a, SubsetMask b) {
        const int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a.bits < b.bits;
    }
    friend constexpr bool operator>(SubsetMask a, SubsetMask b) { return b < a; }
    friend constexpr bool operator<=(SubsetMask a, SubsetMask b) { return !(b < a); }
    friend constexpr bool operator>=(SubsetMask a, SubsetMask b) { return !(a < b); }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint32_t rest = bits; rest != 0; rest &= rest - 1)
            out.push_back(std::countr_zero(rest) + 1);
        return out;
    }

    int min_element() const {
        if (bits == 0) throw std::logic_error("min_element of empty set");
        return std::countr_zero(bits) + 1;
    }

    /// Human-readable form: "{1,3}"; the empty set prints as "{}".
    std::string to_string() const {
        if (bits == 0) return "{}";
        std::string out = "{";
        bool first = true;
        for (int i : elements()) {
            if (!first) out += ",";
            out += std::to_string(i);
            first = false;
        }
        return out + "}";
    }

    /// File-format key: comma-separated ascending elements, "" for the empty set.
    std::string to_key() const {
        std::string out;
        bool first = true;
        for (int i : elements()) {
            if (!first) out += ",";
            out += std::to_string(i);
            first = false;
        }
        return out;
    }
};

/// Parses the file-format key ("", "1,3", ...). Elements must be strictly
/// ascending and within [1, m].
inline SubsetMask parse_subset_key(const std::string& key, int m) {
    SubsetMask s;
    if (key.empty()) return s;
    int prev = 0;
    std::size_t pos = 0;
    while (pos <= key.size()) {
        const auto comma = key.find(',', pos);
        const std::string tok = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed subset key '" + key + "'");
        const int v = std::stoi(tok);
        if (v < 1 || v > m) throw std::invalid_argument("subset key element out of range in '" + key + "'");
        if (v <= prev) throw std::invalid_argument("subset key must be strictly ascending: '" + key + "'");
        s = s.with(v);
        prev = v;
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return s;
}

/// Lexicographic order on ascending element sequences ({1,4} before {2,3}).
/// Used only for deterministic tie-breaking among cliques.
inline bool lex_less(SubsetMask a, SubsetMask b) {
    if (a == b) return false;
    std::uint32_t x = a.bits, y = b.bits;
    while (x != 0 && y != 0) {
        const int ea = std::countr_zero(x), eb = std::countr_zero(y);
        if (ea != eb) return ea < eb;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0; // shorter prefix wins
}

} // namespace latgm
