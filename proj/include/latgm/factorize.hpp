#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "latgm/ci.hpp"
#include "latgm/errors.hpp"
#include "latgm/graph.hpp"
#include "latgm/lattice.hpp"
#include "latgm/param.hpp"
#include "latgm/subset.hpp"

namespace latgm {

/// The order-ideal closures of the cliques of G inside L, in the lattice's
/// linear extension, with one representative clique per closure. These index
/// the algebraically independent coordinates of the lattice-supported model.
struct CliqueClosureSet {
    std::vector<SubsetMask> closures;
    std::map<SubsetMask, SubsetMask> representative; // closure -> clique
};

inline CliqueClosureSet clique_closures(const DistributiveLattice& l, const Graph& g) {
    if (!is_natural(l)) throw NotNaturalError("clique_closures: lattice is not natural");
    const Poset p = underlying_poset(l);
    for (auto [i, j] : p.covers())
        if (!g.has_edge(i, j))
            throw MissingCoverEdgeError(i, j, "cover pair (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ") is not an edge of the graph");
    CliqueClosureSet out;
    for (SubsetMask c : cliques(g).all) {
        const SubsetMask cl = p.ideal_closure(c);
        auto it = out.representative.find(cl);
        if (it == out.representative.end()) {
            out.representative[cl] = c;
            out.closures.push_back(cl);
        } else {
            // Keep the representative of maximal cardinality, ties broken by
            // the lexicographically smallest element sequence.
            const SubsetMask cur = it->second;
            if (c.count() > cur.count() || (c.count() == cur.count() && lex_less(c, cur)))
                it->second = c;
        }
    }
    std::sort(out.closures.begin(), out.closures.end());
    return out;
}

/// Proof object of a factorization: one positive parameter per clique, plus
/// the trace of binomial identities used for the dependent coordinates.
struct FactorizationCertificate {
    struct DependentStep {
        SubsetMask set;
        int i, j; // the non-edge used
    };
    std::map<SubsetMask, Rat> clique_params;
    std::vector<DependentStep> dependent_trace;
};

namespace detail {

/// Lexicographically smallest non-edge {i,j} inside s, as (i, j) with i < j.
inline std::pair<int, int> smallest_non_edge(const Graph& g, SubsetMask s) {
    const auto es = s.elements();
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b)
            if (!g.has_edge(es[a], es[b])) return {es[a], es[b]};
    throw std::logic_error("no non-edge inside " + s.to_string());
}

using NonEdgeChooser = std::function<std::pair<int, int>(const Graph&, SubsetMask)>;

inline FactorizationCertificate factorize_impl(const Distribution& p, const Graph& g,
                                               const NonEdgeChooser& choose) {
    if (p.m() != g.m()) throw std::invalid_argument("factorize: distribution and graph disagree on m");
    const auto supp = p.support();
    if (supp.empty()) throw NotNaturalSupportError("factorize: support is empty");
    const DistributiveLattice closed = lattice_close(p.m(), supp);
    if (closed.elements() != supp || !is_natural(closed))
        throw NotNaturalSupportError("factorize: support is not a natural distributive lattice");
    const DistributiveLattice& l = closed;
    const Poset poset = underlying_poset(l);
    const CliqueClosureSet ccs = clique_closures(l, g); // throws MissingCoverEdge if needed

    FactorizationCertificate cert;
    const auto all_cliques = cliques(g).all;

    // Independent pass: walk the closures in the linear extension. For each
    // closure S with representative clique C, the monomial for p_S is the
    // product of c_T over cliques T <= S. Parameters seen for the first time
    // are pinned to 1, except c_C, which is solved for. c_C cannot have been
    // assigned before: any earlier closure containing C would contain S.
    for (SubsetMask s : ccs.closures) {
        const SubsetMask rep = ccs.representative.at(s);
        Rat assigned_product = 1;
        for (SubsetMask t : all_cliques) {
            if (!t.subset_of(s) || t == rep) continue;
            auto it = cert.clique_params.find(t);
            if (it == cert.clique_params.end())
                it = cert.clique_params.emplace(t, Rat(1)).first;
            assigned_product *= it->second;
        }
        cert.clique_params[rep] = p.value(s) / assigned_product;
    }

    // Dependent pass: each remaining lattice element S has a non-clique set
    // of maximal elements, hence a non-edge {i,j} with S, S-i, S-j, S-ij all
    // in the lattice; the pairwise binomial ties p_S to earlier values.
    std::vector<bool> is_closure(std::size_t{1} << p.m(), false);
    for (SubsetMask s : ccs.closures) is_closure[s.bits] = true;
    for (SubsetMask s : l.elements()) {
        if (is_closure[s.bits]) continue;
        const SubsetMask maximal = poset.maximal_elements(s);
        const auto [i, j] = choose(g, maximal);
        const Rat lhs = p.value(s) * p.value(s.without(i).without(j));
        const Rat rhs = p.value(s.without(i)) * p.value(s.without(j));
        if (lhs != rhs)
            throw PairwiseViolationError(s.bits, i, j,
                                         "pairwise statement for non-edge {" + std::to_string(i) +
                                             "," + std::to_string(j) + "} fails at " + s.to_string());
        cert.dependent_trace.push_back({s, i, j});
    }
    return cert;
}

} // namespace detail

/// Factorizes p according to G. Requires the support of p to be a natural
/// distributive lattice whose minimal graph is contained in G. On success
/// the certificate reproduces p exactly on its support; a failed dependent
/// check certifies that p violates a pairwise Markov statement of G.
inline FactorizationCertificate factorize(const Distribution& p, const Graph& g) {
    return detail::factorize_impl(p, g, [](const Graph& gg, SubsetMask s) {
        return detail::smallest_non_edge(gg, s);
    });
}

/// Recomputes the per-clique product on the support of p and compares
/// exactly; everything off the support must be zero (which holds by
/// definition of support, so the comparison is on the lattice).
inline bool verify_certificate(const FactorizationCertificate& cert, const Distribution& p,
                               const Graph& g) {
    const auto all_cliques = cliques(g).all;
    for (SubsetMask c : all_cliques)
        if (!cert.clique_params.count(c)) throw std::invalid_argument(
            "verify_certificate: missing parameter for clique " + c.to_string());
    if (cert.clique_params.size() != all_cliques.size())
        throw std::invalid_argument("verify_certificate: parameters do not match the cliques of G");
    for (SubsetMask s : p.support()) {
        Rat v = 1;
        for (SubsetMask c : all_cliques)
            if (c.subset_of(s)) v *= cert.clique_params.at(c);
        if (v != p.value(s)) return false;
    }
    return true;
}

/// Converts per-clique parameters to standard (maximal clique, subset)
/// parameters: each clique is charged to its host, the first maximal clique
/// containing it, and a^S_T collects the charges of the cliques below T
/// hosted at S. The two parametrizations then agree on every column.
inline std::map<std::pair<SubsetMask, SubsetMask>, Rat>
to_standard_params(const FactorizationCertificate& cert, const Graph& g) {
    const auto cs = cliques(g);
    auto host = [&](SubsetMask c) {
        for (SubsetMask s : cs.maximal)
            if (c.subset_of(s)) return s;
        throw std::logic_error("clique without a maximal host");
    };
    std::map<std::pair<SubsetMask, SubsetMask>, Rat> a;
    for (SubsetMask s : cs.maximal)
        for (SubsetMask t : detail::sorted_submasks(s)) a[{s, t}] = 1;
    for (const auto& [c, value] : cert.clique_params) {
        const SubsetMask h = host(c);
        for (SubsetMask t : detail::sorted_submasks(h))
            if (c.subset_of(t)) a[{h, t}] *= value;
    }
    return a;
}

/// (#independent coordinates, #dependent coordinates) of the model on L.
inline std::pair<int, int> dimension_counts(const DistributiveLattice& l, const Graph& g) {
    const auto ccs = clique_closures(l, g);
    return {static_cast<int>(ccs.closures.size()),
            static_cast<int>(l.size() - ccs.closures.size())};
}

} // namespace latgm
