#pragma once

// Shared test instances: the running four-cycle example with its poset,
// lattices, distribution, and the generator lists of its pairwise and toric
// ideals.

#include <map>
#include <vector>

#include "latgm/ci.hpp"
#include "latgm/graph.hpp"
#include "latgm/lattice.hpp"
#include "latgm/poset.hpp"
#include "latgm/rational.hpp"
#include "latgm/subset.hpp"

namespace fixtures {

using namespace latgm;

inline Poset fig1_poset() { return Poset(4, {{2, 1}, {2, 3}, {4, 3}}); }

inline Graph four_cycle() { return Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

inline Graph path4() { return Graph(4, {{1, 2}, {2, 3}, {3, 4}}); }

inline std::vector<SubsetMask> fig1_lattice_sets() {
    return {SubsetMask::of({}),        SubsetMask::of({1}),       SubsetMask::of({3}),
            SubsetMask::of({1, 3}),    SubsetMask::of({3, 4}),    SubsetMask::of({1, 2, 3}),
            SubsetMask::of({1, 3, 4}), SubsetMask::of({1, 2, 3, 4})};
}

inline std::vector<SubsetMask> fig2_lattice_sets() {
    return {SubsetMask::of({}),        SubsetMask::of({1, 2}),    SubsetMask::of({3}),
            SubsetMask::of({4}),       SubsetMask::of({3, 4}),    SubsetMask::of({1, 2, 3}),
            SubsetMask::of({1, 2, 4}), SubsetMask::of({1, 2, 3, 4})};
}

// The feasible-and-facial support S and the facial-but-not-feasible support T
// of the four-cycle example.
inline std::vector<SubsetMask> support_S() { return fig1_lattice_sets(); }

inline std::vector<SubsetMask> support_T() {
    return {SubsetMask::of({}),        SubsetMask::of({4}),       SubsetMask::of({3}),
            SubsetMask::of({2, 3}),    SubsetMask::of({1, 4}),    SubsetMask::of({1, 2, 4}),
            SubsetMask::of({1, 2, 3}), SubsetMask::of({1, 2, 3, 4})};
}

inline Binomial quadric(std::vector<int> p1, std::vector<int> p2, std::vector<int> m1,
                        std::vector<int> m2) {
    auto mk = [](const std::vector<int>& v) {
        SubsetMask s;
        for (int i : v) s = s.with(i);
        return s;
    };
    return Binomial({mk(p1), mk(p2)}, {mk(m1), mk(m2)});
}

/// The eight quadric generators of the pairwise (= global) ideal of the
/// four-cycle, in the published orientation.
inline std::vector<Binomial> four_cycle_quadrics() {
    return {
        quadric({1, 3, 4}, {1, 2, 3}, {1, 3}, {1, 2, 3, 4}),
        quadric({2, 3, 4}, {1, 2, 4}, {2, 4}, {1, 2, 3, 4}),
        quadric({1, 4}, {1, 2}, {1}, {1, 2, 4}),
        quadric({2, 3}, {1, 2}, {2}, {1, 2, 3}),
        quadric({3, 4}, {1, 4}, {4}, {1, 3, 4}),
        quadric({3}, {1}, {}, {1, 3}),
        quadric({3, 4}, {2, 3}, {3}, {2, 3, 4}),
        quadric({4}, {2}, {}, {2, 4}),
    };
}

inline Binomial quartic(std::vector<std::vector<int>> plus, std::vector<std::vector<int>> minus) {
    auto mk = [](const std::vector<int>& v) {
        SubsetMask s;
        for (int i : v) s = s.with(i);
        return s;
    };
    std::vector<SubsetMask> p, m;
    for (const auto& v : plus) p.push_back(mk(v));
    for (const auto& v : minus) m.push_back(mk(v));
    return Binomial(p, m);
}

/// The eight degree-four generators completing the toric ideal of the
/// four-cycle, in the published orientation (the first one is the witness
/// used by the unnatural-lattice counterexample).
inline std::vector<Binomial> four_cycle_quartics() {
    return {
        quartic({{}, {3, 4}, {1, 2, 4}, {1, 2, 3}}, {{4}, {3}, {1, 2}, {1, 2, 3, 4}}),
        quartic({{}, {2, 3, 4}, {1, 4}, {1, 2, 3}}, {{4}, {2, 3}, {1}, {1, 2, 3, 4}}),
        quartic({{}, {2, 3}, {1, 3, 4}, {1, 2, 4}}, {{3}, {2}, {1, 4}, {1, 2, 3, 4}}),
        quartic({{4}, {2, 3}, {1, 3}, {1, 2, 4}}, {{3}, {2, 4}, {1, 4}, {1, 2, 3}}),
        quartic({{}, {2, 3, 4}, {1, 3, 4}, {1, 2}}, {{3, 4}, {2}, {1}, {1, 2, 3, 4}}),
        quartic({{3}, {2, 4}, {1, 3, 4}, {1, 2}}, {{3, 4}, {2}, {1, 3}, {1, 2, 4}}),
        quartic({{4}, {2, 3, 4}, {1, 3}, {1, 2}}, {{3, 4}, {2, 4}, {1}, {1, 2, 3}}),
        quartic({{2}, {2, 3, 4}, {1, 4}, {1, 3}}, {{2, 4}, {2, 3}, {1}, {1, 3, 4}}),
    };
}

/// Distribution on the running lattice whose independent coordinates are
/// free and whose dependent ones satisfy p_13 = p_1 p_3 / p_{} and
/// p_1234 = p_123 p_134 p_{} / (p_1 p_3).
inline Distribution master_distribution() {
    std::map<SubsetMask, Rat> v;
    v[SubsetMask::of({})] = Rat(1, 4);
    v[SubsetMask::of({1})] = Rat(1, 8);
    v[SubsetMask::of({3})] = Rat(1, 8);
    v[SubsetMask::of({3, 4})] = Rat(1, 16);
    v[SubsetMask::of({1, 2, 3})] = Rat(1, 16);
    v[SubsetMask::of({1, 3, 4})] = Rat(1, 16);
    v[SubsetMask::of({1, 3})] = Rat(1, 16);
    v[SubsetMask::of({1, 2, 3, 4})] = Rat(1, 16);
    return Distribution(4, std::move(v));
}

/// The 1/2-and-1/14 witness on the unnatural lattice.
inline Distribution fig2_witness(Rat p_empty = Rat(1, 2)) {
    std::map<SubsetMask, Rat> v;
    for (SubsetMask s : fig2_lattice_sets()) v[s] = s.empty() ? p_empty : Rat(1, 14);
    return Distribution(4, std::move(v));
}

/// Multiset equality of binomial lists up to sign.
inline bool same_binomials(const std::vector<Binomial>& a, const std::vector<Binomial>& b) {
    auto keys = [](const std::vector<Binomial>& v) {
        std::vector<std::pair<std::vector<SubsetMask>, std::vector<SubsetMask>>> k;
        for (const Binomial& x : v) k.push_back(x.canonical_key());
        std::sort(k.begin(), k.end());
        return k;
    };
    return keys(a) == keys(b);
}

} // namespace fixtures
