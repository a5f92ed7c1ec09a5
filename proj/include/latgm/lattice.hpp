#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "latgm/errors.hpp"
#include "latgm/graph.hpp"
#include "latgm/poset.hpp"
#include "latgm/subset.hpp"

namespace latgm {

/// A family of subsets of [m] closed under pairwise union and intersection.
/// Elements are kept sorted by (cardinality, value); since that order refines
/// inclusion, the element list is the canonical linear extension used
/// throughout.
class DistributiveLattice {
public:
    /// Validates closure under union and intersection.
    static DistributiveLattice from_sets(int m, std::vector<SubsetMask> sets) {
        DistributiveLattice l(m, std::move(sets));
        const auto& es = l.elements_;
        for (std::size_t a = 0; a < es.size(); ++a)
            for (std::size_t b = a + 1; b < es.size(); ++b) {
                if (!l.contains(es[a] | es[b]))
                    throw std::invalid_argument("not a lattice: missing union " + (es[a] | es[b]).to_string());
                if (!l.contains(es[a] & es[b]))
                    throw std::invalid_argument("not a lattice: missing intersection " +
                                                (es[a] & es[b]).to_string());
            }
        return l;
    }

    int m() const { return m_; }
    const std::vector<SubsetMask>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(SubsetMask s) const { return member_[s.bits]; }

    /// The minimum element (intersection of everything).
    SubsetMask bottom() const { return elements_.front(); }
    SubsetMask top() const { return elements_.back(); }

    friend bool operator==(const DistributiveLattice& a, const DistributiveLattice& b) {
        return a.m_ == b.m_ && a.elements_ == b.elements_;
    }

private:
    DistributiveLattice(int m, std::vector<SubsetMask> sets) : m_(m) {
        if (m < 1 || m > kMaxGroundSet)
            throw std::invalid_argument("lattice: m must be in [1," + std::to_string(kMaxGroundSet) + "]");
        if (sets.empty()) throw std::invalid_argument("lattice: empty family");
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        for (SubsetMask s : sets)
            if (!s.subset_of(SubsetMask::full(m)))
                throw std::invalid_argument("lattice: element " + s.to_string() + " exceeds ground set");
        elements_ = std::move(sets);
        member_.assign(std::size_t{1} << m, false);
        for (SubsetMask s : elements_) member_[s.bits] = true;
    }

    // Closure-producing operations construct without the O(n^2) validation.
    struct Trusted {};
    DistributiveLattice(Trusted, int m, std::vector<SubsetMask> sets)
        : DistributiveLattice(m, std::move(sets)) {}

    friend DistributiveLattice order_ideals(const Poset&);
    friend DistributiveLattice lattice_close(int, const std::vector<SubsetMask>&);

    int m_;
    std::vector<SubsetMask> elements_;
    std::vector<bool> member_;
};

/// J(P): all order ideals of P, a natural distributive lattice.
inline DistributiveLattice order_ideals(const Poset& p) {
    std::vector<SubsetMask> ideals;
    const std::uint32_t limit = 1u << p.m();
    for (std::uint32_t b = 0; b < limit; ++b)
        if (p.is_ideal(SubsetMask(b))) ideals.push_back(SubsetMask(b));
    return DistributiveLattice(DistributiveLattice::Trusted{}, p.m(), std::move(ideals));
}

/// Smallest union/intersection-closed family containing the input.
inline DistributiveLattice lattice_close(int m, const std::vector<SubsetMask>& family) {
    if (family.empty()) throw std::invalid_argument("lattice_close: empty family");
    std::set<SubsetMask> closed(family.begin(), family.end());
    std::vector<SubsetMask> work(closed.begin(), closed.end());
    while (!work.empty()) {
        const SubsetMask s = work.back();
        work.pop_back();
        std::vector<SubsetMask> fresh;
        for (SubsetMask t : closed) {
            for (SubsetMask u : {s | t, s & t})
                if (!closed.count(u)) fresh.push_back(u);
        }
        for (SubsetMask u : fresh)
            if (closed.insert(u).second) work.push_back(u);
    }
    return DistributiveLattice(DistributiveLattice::Trusted{}, m,
                               std::vector<SubsetMask>(closed.begin(), closed.end()));
}

namespace detail {

/// For each i, the smallest lattice element containing i (intersection of all
/// members containing i). Requires top = [m] so the intersection is nonempty.
inline std::vector<SubsetMask> principal_ideals(const DistributiveLattice& l) {
    std::vector<SubsetMask> d(l.m() + 1, SubsetMask::full(l.m()));
    for (SubsetMask s : l.elements())
        for (int i = 1; i <= l.m(); ++i)
            if (s.contains(i)) d[i] = d[i] & s;
    return d;
}

} // namespace detail

/// True iff the lattice contains {} and [m] and is graded by cardinality
/// (every cover adds exactly one element). Equivalently: L = J(P) for a
/// poset P on [m]. Decided by reconstructing the candidate P from the
/// principal ideals and counting its order ideals.
inline bool is_natural(const DistributiveLattice& l) {
    const int m = l.m();
    if (!l.contains(SubsetMask::empty_set()) || !l.contains(SubsetMask::full(m))) return false;
    const auto d = detail::principal_ideals(l);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (i != j && d[i].contains(j) && d[j].contains(i)) return false; // i, j inseparable
    // Every element of L is an ideal of the candidate order by construction,
    // so L = J(P) iff the ideal counts match.
    std::size_t ideal_count = 0;
    const std::uint32_t limit = 1u << m;
    for (std::uint32_t b = 0; b < limit; ++b) {
        SubsetMask closure;
        for (int i : SubsetMask(b).elements()) closure = closure | d[i];
        if (closure == SubsetMask(b)) ++ideal_count;
    }
    return ideal_count == l.size();
}

/// Elements covering exactly one other element. In a lattice of sets, S is
/// join irreducible iff the union U of all strictly smaller members differs
/// from S (and then U is the unique element covered by S).
inline std::vector<SubsetMask> join_irreducibles(const DistributiveLattice& l) {
    std::vector<SubsetMask> out;
    for (SubsetMask s : l.elements()) {
        if (s == l.bottom()) continue;
        SubsetMask u;
        bool any = false;
        for (SubsetMask t : l.elements()) {
            if (t == s) break; // linear extension: strict subsets come earlier
            if (t.subset_of(s) && t != s) { u = u | t; any = true; }
        }
        if (any && u != s) out.push_back(s);
    }
    return out;
}

/// The poset P on [m] with J(P) = L. Requires is_natural(l).
inline Poset underlying_poset(const DistributiveLattice& l) {
    if (!is_natural(l)) throw NotNaturalError("underlying_poset: lattice is not natural");
    const auto d = detail::principal_ideals(l);
    // Covers: transitive reduction of j <= i  <=>  j in d[i].
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i <= l.m(); ++i)
        for (int j : (d[i].without(i)).elements()) {
            bool direct = true;
            for (int k : (d[i].without(i).without(j)).elements())
                if (d[k].contains(j)) { direct = false; break; }
            if (direct) covers.push_back({i, j});
        }
    return Poset(l.m(), std::move(covers));
}

/// Graph of the Hasse diagram of the underlying poset. Requires naturality.
inline Graph minimal_graph(const DistributiveLattice& l) {
    const Poset p = underlying_poset(l);
    std::vector<std::pair<int, int>> edges;
    for (auto [i, j] : p.covers()) edges.push_back({std::min(i, j), std::max(i, j)});
    return Graph(l.m(), std::move(edges));
}

} // namespace latgm
