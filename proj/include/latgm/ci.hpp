#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latgm/errors.hpp"
#include "latgm/graph.hpp"
#include "latgm/rational.hpp"
#include "latgm/report.hpp"
#include "latgm/subset.hpp"

namespace latgm {

/// Conditional independence statement A _||_ B | C. A and B are swapped on
/// construction if needed so that min(A) < min(B); the statement is symmetric
/// and this makes deduplication structural.
struct CIStatement {
    SubsetMask A, B, C;

    CIStatement(SubsetMask a, SubsetMask b, SubsetMask c) : A(a), B(b), C(c) {
        if (A.empty() || B.empty())
            throw InvalidTripleError("CI statement: A and B must be nonempty");
        if (!(A & B).empty() || !(A & C).empty() || !(B & C).empty())
            throw InvalidTripleError("CI statement: A, B, C must be pairwise disjoint");
        if (B.min_element() < A.min_element()) std::swap(A, B);
    }

    bool saturated(int m) const { return (A | B | C) == SubsetMask::full(m); }

    friend bool operator==(const CIStatement& x, const CIStatement& y) {
        return x.A == y.A && x.B == y.B && x.C == y.C;
    }
    friend bool operator<(const CIStatement& x, const CIStatement& y) {
        if (x.A != y.A) return x.A < y.A;
        if (x.B != y.B) return x.B < y.B;
        return x.C < y.C;
    }

    std::string to_string() const {
        return A.to_string() + " _||_ " + B.to_string() + " | " + C.to_string();
    }
};

/// Distribution on 2^[m] with exact nonnegative rational values. Missing
/// keys are zero; sparse supports are the normal case. Never needs to be
/// normalized: every check in the library is scale invariant.
class Distribution {
public:
    Distribution(int m, std::map<SubsetMask, Rat> values) : m_(m), values_(std::move(values)) {
        if (m < 1 || m > kMaxGroundSet)
            throw std::invalid_argument("distribution: m must be in [1," + std::to_string(kMaxGroundSet) + "]");
        Rat sum = 0;
        for (const auto& [s, v] : values_) {
            if (!s.subset_of(SubsetMask::full(m)))
                throw std::invalid_argument("distribution: key " + s.to_string() + " exceeds ground set");
            if (v < 0)
                throw std::invalid_argument("distribution: negative value at " + s.to_string());
            sum += v;
        }
        normalized_ = (sum == 1);
    }

    int m() const { return m_; }
    bool normalized() const { return normalized_; }
    const std::map<SubsetMask, Rat>& values() const { return values_; }

    Rat value(SubsetMask s) const {
        const auto it = values_.find(s);
        return it == values_.end() ? Rat(0) : it->second;
    }

    /// Keys with strictly positive value, sorted.
    std::vector<SubsetMask> support() const {
        std::vector<SubsetMask> out;
        for (const auto& [s, v] : values_)
            if (v > 0) out.push_back(s);
        return out;
    }

    Distribution normalize() const {
        Rat sum = 0;
        for (const auto& [s, v] : values_) sum += v;
        if (sum <= 0) throw std::invalid_argument("distribution: cannot normalize, total mass is zero");
        std::map<SubsetMask, Rat> scaled;
        for (const auto& [s, v] : values_) scaled[s] = v / sum;
        return Distribution(m_, std::move(scaled));
    }

private:
    int m_;
    std::map<SubsetMask, Rat> values_;
    bool normalized_;
};

/// Difference of two monomials in the p_S, stored as multisets of masks.
/// Both sides have equal degree and differ as multisets. The stored
/// orientation is the definitional one of whatever produced the binomial;
/// comparisons that should not care about sign go through canonical_key().
class Binomial {
public:
    Binomial(std::vector<SubsetMask> plus, std::vector<SubsetMask> minus)
        : plus_(std::move(plus)), minus_(std::move(minus)) {
        std::sort(plus_.begin(), plus_.end());
        std::sort(minus_.begin(), minus_.end());
        if (plus_.size() != minus_.size())
            throw std::invalid_argument("binomial: sides must have equal degree");
        if (plus_.empty()) throw std::invalid_argument("binomial: empty monomials");
        if (plus_ == minus_) throw std::invalid_argument("binomial: sides are equal (zero binomial)");
    }

    const std::vector<SubsetMask>& plus() const { return plus_; }
    const std::vector<SubsetMask>& minus() const { return minus_; }
    std::size_t degree() const { return plus_.size(); }

    Rat eval(const Distribution& p) const {
        Rat pos = 1, neg = 1;
        for (SubsetMask s : plus_) pos *= p.value(s);
        for (SubsetMask s : minus_) neg *= p.value(s);
        return pos - neg;
    }

    /// Sign-insensitive identity: the two sides ordered by the fixed
    /// monomial order. Two binomials are the same polynomial up to sign iff
    /// their keys match.
    std::pair<std::vector<SubsetMask>, std::vector<SubsetMask>> canonical_key() const {
        if (std::lexicographical_compare(plus_.begin(), plus_.end(), minus_.begin(), minus_.end()))
            return {minus_, plus_};
        return {plus_, minus_};
    }

    friend bool operator==(const Binomial& a, const Binomial& b) {
        return a.plus_ == b.plus_ && a.minus_ == b.minus_;
    }
    friend bool operator<(const Binomial& a, const Binomial& b) {
        if (a.plus_ != b.plus_)
            return std::lexicographical_compare(a.plus_.begin(), a.plus_.end(), b.plus_.begin(), b.plus_.end());
        return std::lexicographical_compare(a.minus_.begin(), a.minus_.end(), b.minus_.begin(), b.minus_.end());
    }

    std::string to_string() const {
        auto side = [](const std::vector<SubsetMask>& ms) {
            std::string out;
            for (std::size_t k = 0; k < ms.size(); ++k) {
                if (k > 0) out += " ";
                out += "p" + ms[k].to_string();
            }
            return out;
        };
        return side(plus_) + " - " + side(minus_);
    }

private:
    std::vector<SubsetMask> plus_, minus_;
};

/// One statement i _||_ j | [m] \ {i,j} per non-edge of G.
inline std::vector<CIStatement> pairwise_statements(const Graph& g) {
    std::vector<CIStatement> out;
    const SubsetMask full = SubsetMask::full(g.m());
    for (auto [i, j] : g.non_edges()) {
        const SubsetMask a = SubsetMask{}.with(i), b = SubsetMask{}.with(j);
        out.emplace_back(a, b, full - a - b);
    }
    return out;
}

/// All saturated statements A _||_ B | C with C separating A and B,
/// deduplicated by requiring min(A) < min(B). Enumerative over 3^m splits.
inline std::vector<CIStatement> saturated_global_statements(const Graph& g) {
    std::vector<CIStatement> out;
    const std::uint32_t full = SubsetMask::full(g.m()).bits;
    for (std::uint32_t a = 1; a <= full; ++a) {
        const std::uint32_t rest = full & ~a;
        // nonempty submasks b of rest
        for (std::uint32_t b = rest; b != 0; b = (b - 1) & rest) {
            const SubsetMask A(a), B(b), C(SubsetMask(full & ~a & ~b));
            if (A.min_element() >= B.min_element()) continue;
            if (separates(g, A, B, C)) out.emplace_back(A, B, C);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Generators of the CI ideal of a saturated statement: one binomial per
/// unordered pair of A-parts, unordered pair of B-parts, and C-part.
inline std::vector<Binomial> ci_binomials(const CIStatement& stmt, int m) {
    if (!stmt.saturated(m))
        throw UnsaturatedError("ci_binomials: statement " + stmt.to_string() + " is not saturated");
    auto submasks = [](SubsetMask s) {
        std::vector<SubsetMask> out;
        const std::uint32_t bits = s.bits;
        std::uint32_t sub = 0;
        while (true) {
            out.push_back(SubsetMask(sub));
            if (sub == bits) break;
            sub = (sub - bits) & bits; // next submask in ascending numeric order
        }
        return out;
    };
    const auto as = submasks(stmt.A), bs = submasks(stmt.B), cs = submasks(stmt.C);
    std::vector<Binomial> out;
    for (std::size_t a1 = 0; a1 < as.size(); ++a1)
        for (std::size_t a2 = a1 + 1; a2 < as.size(); ++a2)
            for (std::size_t b1 = 0; b1 < bs.size(); ++b1)
                for (std::size_t b2 = b1 + 1; b2 < bs.size(); ++b2)
                    for (SubsetMask c1 : cs) {
                        std::vector<SubsetMask> plus = {as[a1] | bs[b1] | c1, as[a2] | bs[b2] | c1};
                        std::vector<SubsetMask> minus = {as[a1] | bs[b2] | c1, as[a2] | bs[b1] | c1};
                        std::sort(plus.begin(), plus.end());
                        std::sort(minus.begin(), minus.end());
                        if (plus == minus) continue; // degenerate, zero binomial
                        out.emplace_back(std::move(plus), std::move(minus));
                    }
    return out;
}

/// Generators of the pairwise Markov ideal: p_C p_{C+ij} - p_{C+i} p_{C+j}
/// over non-edges {i,j} and C inside the complement.
inline std::vector<Binomial> pairwise_binomials(const Graph& g) {
    std::vector<Binomial> out;
    for (const CIStatement& stmt : pairwise_statements(g))
        for (Binomial& b : ci_binomials(stmt, g.m())) out.push_back(std::move(b));
    return out;
}

inline Rat eval_binomial(const Binomial& b, const Distribution& p) { return b.eval(p); }

/// Evaluates every binomial at p; the report lists the ones that do not
/// vanish. Empty report <=> p is a common zero.
inline Report satisfies_all(const std::vector<Binomial>& bs, const Distribution& p) {
    Report report;
    for (const Binomial& b : bs) {
        const Rat v = b.eval(p);
        if (v != 0) report.fail(b.to_string(), "= " + format_rational(v));
    }
    return report;
}

} // namespace latgm
