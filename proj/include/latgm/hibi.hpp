#pragma once

#include <map>
#include <utility>
#include <vector>

#include "latgm/ci.hpp"
#include "latgm/errors.hpp"
#include "latgm/factorize.hpp"
#include "latgm/graph.hpp"
#include "latgm/lattice.hpp"
#include "latgm/param.hpp"
#include "latgm/poset.hpp"
#include "latgm/subset.hpp"

namespace latgm {

/// Join-meet generators p_S p_T - p_{S cap T} p_{S cup T}, one per unordered
/// incomparable pair of L. The p_S p_T side comes first; with the marked
/// order those are the leading terms of a Groebner basis.
inline std::vector<Binomial> hibi_generators(const DistributiveLattice& l) {
    std::vector<Binomial> out;
    const auto& es = l.elements();
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            if (es[a].subset_of(es[b]) || es[b].subset_of(es[a])) continue;
            out.emplace_back(std::vector<SubsetMask>{es[a], es[b]},
                             std::vector<SubsetMask>{es[a] & es[b], es[a] | es[b]});
        }
    return out;
}

/// Matrix of the map p_S -> t * prod_{i in S} b_i, with columns restricted
/// to the lattice. Its kernel is the Hibi ideal of L.
inline ParamMatrix hibi_matrix(const DistributiveLattice& l) {
    if (!is_natural(l)) throw NotNaturalError("hibi_matrix: lattice is not natural");
    std::vector<RowLabel> row_labels;
    row_labels.push_back(RowLabel::hibi_t());
    for (int i = 1; i <= l.m(); ++i) row_labels.push_back(RowLabel::hibi_b(i));
    const auto& cols = l.elements();
    std::vector<std::vector<std::uint8_t>> entries(row_labels.size(),
                                                   std::vector<std::uint8_t>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        entries[0][j] = 1;
        for (int i = 1; i <= l.m(); ++i) entries[i][j] = cols[j].contains(i) ? 1 : 0;
    }
    return ParamMatrix(l.m(), std::move(row_labels), cols, std::move(entries));
}

/// The per-clique matrix of G with columns restricted to L. Its rational
/// kernel decides membership in the lattice graphical model ideal for
/// binomials supported on L.
inline ParamMatrix lattice_model_matrix(const DistributiveLattice& l, const Graph& g) {
    if (!is_natural(l)) throw NotNaturalError("lattice_model_matrix: lattice is not natural");
    const Poset p = underlying_poset(l);
    for (auto [i, j] : p.covers())
        if (!g.has_edge(i, j))
            throw MissingCoverEdgeError(i, j, "cover pair (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ") is not an edge of the graph");
    const auto cs = cliques(g);
    std::vector<RowLabel> row_labels;
    for (SubsetMask s : cs.all) row_labels.push_back(RowLabel::clique(s));
    const auto& cols = l.elements();
    std::vector<std::vector<std::uint8_t>> entries(cs.all.size(),
                                                   std::vector<std::uint8_t>(cols.size(), 0));
    for (std::size_t i = 0; i < cs.all.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            entries[i][j] = cs.all[i].subset_of(cols[j]) ? 1 : 0;
    return ParamMatrix(l.m(), std::move(row_labels), cols, std::move(entries));
}

/// Whether the lattice graphical model ideal of (L, G) equals the Hibi ideal
/// of L, decided as equality of rational row spaces. Guaranteed true when G
/// sits between the minimal graph and the comparability graph; callable on
/// any graph containing the minimal graph, for exploration.
inline bool check_hibi_equality(const DistributiveLattice& l, const Graph& g) {
    return same_row_space(lattice_model_matrix(l, g), hibi_matrix(l));
}

/// The grouping of clique parameters that realizes the Hibi parameters:
/// t <- {the empty clique}, b_i <- {cliques whose maximum element is i}.
/// Every clique of a graph inside the comparability graph is a chain of the
/// poset, so the maximum exists; a clique without one certifies that G is
/// not contained in Comp(P).
inline std::map<RowLabel, std::vector<SubsetMask>>
substitution_witness(const DistributiveLattice& l, const Graph& g) {
    if (!is_natural(l)) throw NotNaturalError("substitution_witness: lattice is not natural");
    const Poset p = underlying_poset(l);
    for (auto [i, j] : p.covers())
        if (!g.has_edge(i, j))
            throw MissingCoverEdgeError(i, j, "cover pair (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ") is not an edge of the graph");
    std::map<RowLabel, std::vector<SubsetMask>> out;
    out[RowLabel::hibi_t()] = {SubsetMask::empty_set()};
    for (int i = 1; i <= l.m(); ++i) out[RowLabel::hibi_b(i)] = {};
    for (SubsetMask c : cliques(g).all) {
        if (c.empty()) continue;
        int max_elem = 0;
        for (int i : c.elements()) {
            bool dominates = true;
            for (int j : c.elements())
                if (!p.leq(j, i)) { dominates = false; break; }
            if (dominates) { max_elem = i; break; }
        }
        if (max_elem == 0)
            throw NotComparabilitySubgraphError(
                c.bits, "clique " + c.to_string() + " has no maximum element in the poset");
        out[RowLabel::hibi_b(max_elem)].push_back(c);
    }
    return out;
}

} // namespace latgm
