#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latgm/ci.hpp"
#include "latgm/factorize.hpp"
#include "latgm/graph.hpp"
#include "latgm/hibi.hpp"
#include "latgm/lattice.hpp"
#include "latgm/param.hpp"
#include "latgm/poset.hpp"
#include "latgm/report.hpp"
#include "latgm/rng.hpp"
#include "latgm/subset.hpp"

namespace latgm {

/// Random poset on [m]: a random relation compatible with a shuffled total
/// order, transitively closed, then reduced to covers. Deterministic per
/// seed.
inline Poset random_poset(int m, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i + 1;
    for (int i = m - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.uniform(0, i)]);

    std::vector<std::vector<bool>> less(m + 1, std::vector<bool>(m + 1, false));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (rng.coin()) less[perm[a]][perm[b]] = true;
    for (int k = 1; k <= m; ++k)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                if (less[i][k] && less[k][j]) less[i][j] = true;

    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (!less[j][i]) continue;
            bool direct = true;
            for (int k = 1; k <= m && direct; ++k)
                if (less[j][k] && less[k][i]) direct = false;
            if (direct) covers.push_back({i, j});
        }
    return Poset(m, std::move(covers));
}

/// G0 plus a seeded random subset of the missing pairs.
inline Graph random_supergraph(const Graph& g0, int m, std::uint64_t seed) {
    if (g0.m() != m) throw std::invalid_argument("random_supergraph: vertex count mismatch");
    Rng rng(seed);
    auto edges = g0.edges();
    for (auto [i, j] : g0.non_edges())
        if (rng.coin()) edges.push_back({i, j});
    return Graph(m, std::move(edges));
}

namespace detail {

/// Forward construction of the main theorem: seeded positive values on the
/// clique closures, the pairwise binomial recursion everywhere else.
/// Returns the distribution and the number of freely chosen coordinates.
inline std::pair<Distribution, int> roundtrip_distribution(const Poset& p, const Graph& g,
                                                           Rng& rng) {
    const DistributiveLattice l = order_ideals(p);
    const CliqueClosureSet ccs = clique_closures(l, g);
    std::vector<bool> is_closure(std::size_t{1} << p.m(), false);
    for (SubsetMask s : ccs.closures) is_closure[s.bits] = true;
    std::map<SubsetMask, Rat> values;
    for (SubsetMask s : l.elements()) {
        if (is_closure[s.bits]) {
            values[s] = rng.positive_rational();
        } else {
            const auto [i, j] = smallest_non_edge(g, p.maximal_elements(s));
            values[s] = values.at(s.without(i)) * values.at(s.without(j)) /
                        values.at(s.without(i).without(j));
        }
    }
    return {Distribution(p.m(), std::move(values)), static_cast<int>(ccs.closures.size())};
}

} // namespace detail

/// End-to-end check of the constructive factorization on one instance:
/// build p with support J(P) from free coordinates and the recursion, then
/// confirm the Markov statements hold, factorize round-trips, and the
/// generator binomials lie in the toric kernel and vanish at p.
inline Report verify_hc_roundtrip(const Poset& p, const Graph& g, std::uint64_t seed) {
    Report report;
    try {
        const DistributiveLattice l = order_ideals(p);
        Rng rng(seed);
        const auto [dist, n_free] = detail::roundtrip_distribution(p, g, rng);

        const auto pw = pairwise_binomials(g);
        const Report pw_report = satisfies_all(pw, dist);
        if (!pw_report.ok())
            report.fail("pairwise", std::to_string(pw_report.failures.size()) +
                                        " pairwise binomials do not vanish");

        std::vector<Binomial> global;
        for (const CIStatement& stmt : saturated_global_statements(g))
            for (Binomial& b : ci_binomials(stmt, g.m())) global.push_back(std::move(b));
        const Report gl_report = satisfies_all(global, dist);
        if (!gl_report.ok())
            report.fail("global", std::to_string(gl_report.failures.size()) +
                                      " saturated global binomials do not vanish");

        const FactorizationCertificate cert = factorize(dist, g);
        if (!verify_certificate(cert, dist, g))
            report.fail("verify_certificate", "reconstruction does not reproduce p");

        const ParamMatrix a = matrix_AG(g);
        std::size_t kernel_checked = 0;
        const std::vector<Binomial>* families[] = {&pw, &global};
        for (const std::vector<Binomial>* family : families)
            for (const Binomial& b : *family)
                if (in_toric_kernel(a, b)) {
                    ++kernel_checked;
                    if (b.eval(dist) != 0)
                        report.fail("toric-kernel generator", b.to_string() + " does not vanish");
                }
        if (kernel_checked < pw.size())
            report.fail("in_toric_kernel", "some pairwise generator is outside the toric kernel");

        const auto [n_independent, n_dependent] = dimension_counts(l, g);
        if (n_independent != n_free)
            report.fail("dimension_counts",
                        "independent count " + std::to_string(n_independent) +
                            " != free coordinates " + std::to_string(n_free));
        if (n_independent + n_dependent != static_cast<int>(l.size()))
            report.fail("dimension_counts", "counts do not add up to #L");
    } catch (const Error& e) {
        report.fail("exception", e.what());
    }
    return report;
}

/// For every cover i > j of P: the four sets of the covering argument lie in
/// or out of J(P) as claimed, and the corresponding pairwise binomial is
/// nonzero at a seeded positive lattice-supported distribution.
inline Report verify_cover_forcing(const Poset& p, std::uint64_t seed) {
    Report report;
    const DistributiveLattice l = order_ideals(p);
    Rng rng(seed);
    std::map<SubsetMask, Rat> values;
    for (SubsetMask s : l.elements()) values[s] = rng.positive_rational();
    const Distribution dist(p.m(), std::move(values));

    for (auto [i, j] : p.covers()) {
        const std::string tag = "cover (" + std::to_string(i) + "," + std::to_string(j) + ")";
        const SubsetMask cprime = p.down(i);
        const SubsetMask c = cprime.without(i).without(j);
        if (!l.contains(c)) report.fail(tag, "C " + c.to_string() + " is not an order ideal");
        if (!l.contains(c.with(j)))
            report.fail(tag, "C+j " + c.with(j).to_string() + " is not an order ideal");
        if (!l.contains(cprime))
            report.fail(tag, "C+i+j " + cprime.to_string() + " is not an order ideal");
        if (l.contains(c.with(i)))
            report.fail(tag, "C+i " + c.with(i).to_string() + " is unexpectedly an order ideal");
        const Binomial b({c, c.with(i).with(j)}, {c.with(i), c.with(j)});
        if (b.eval(dist) == 0)
            report.fail(tag, "forcing binomial " + b.to_string() + " vanishes");
    }
    return report;
}

/// The fixed unnatural-lattice witness: support {<>,12,3,4,34,123,124,1234}
/// on the four-cycle satisfies every pairwise quadric yet fails a quartic of
/// the toric ideal, so it cannot be a limit of factoring distributions. The
/// distribution puts p_empty at the given value and 1/14 on the rest.
inline Report verify_unnatural_counterexample(const Rat& p_empty = Rat(1, 2)) {
    Report report;
    const int m = 4;
    const Graph g(m, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    const std::vector<SubsetMask> family = {
        SubsetMask::of({}),        SubsetMask::of({1, 2}),    SubsetMask::of({3}),
        SubsetMask::of({4}),       SubsetMask::of({3, 4}),    SubsetMask::of({1, 2, 3}),
        SubsetMask::of({1, 2, 4}), SubsetMask::of({1, 2, 3, 4})};

    const DistributiveLattice closed = lattice_close(m, family);
    std::vector<SubsetMask> sorted_family = family;
    std::sort(sorted_family.begin(), sorted_family.end());
    if (closed.elements() != sorted_family)
        report.fail("lattice", "family is not union/intersection closed");
    if (is_natural(closed)) report.fail("lattice", "lattice is unexpectedly natural");

    std::map<SubsetMask, Rat> values;
    for (SubsetMask s : family) values[s] = s.empty() ? p_empty : Rat(1, 14);
    const Distribution dist(m, std::move(values));

    const Report quadrics = satisfies_all(pairwise_binomials(g), dist);
    if (!quadrics.ok())
        report.fail("quadrics", std::to_string(quadrics.failures.size()) +
                                    " pairwise quadrics do not vanish");

    const Binomial quartic(
        {SubsetMask::of({}), SubsetMask::of({3, 4}), SubsetMask::of({1, 2, 4}), SubsetMask::of({1, 2, 3})},
        {SubsetMask::of({4}), SubsetMask::of({3}), SubsetMask::of({1, 2}), SubsetMask::of({1, 2, 3, 4})});
    const Rat value = quartic.eval(dist);
    if (value == 0)
        report.note("quartic", "witness does not separate: the quartic also vanishes");
    if (!in_toric_kernel(matrix_AG(g), quartic))
        report.fail("quartic", "quartic is not in the toric kernel");
    return report;
}

struct SweepConfig {
    int trials = 200;
    int m_min = 2;
    int m_max = 6;
    std::uint64_t seed = 0;
    bool with_facial = true;
};

namespace detail {

/// The H-set route to feasibility: F is feasible iff it equals the zero set
/// of the rows missed by its own columns. Kept independent of is_feasible.
inline bool feasible_via_h_set(const ParamMatrix& m, const std::vector<SubsetMask>& f) {
    std::set<SubsetMask> fset(f.begin(), f.end());
    std::vector<bool> covered(m.rows(), false);
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (fset.count(m.col_labels()[j]))
            for (auto i : m.col_support(j)) covered[i] = true;
    std::set<SubsetMask> from_h;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool hit = false;
        for (auto i : m.col_support(j))
            if (!covered[i]) { hit = true; break; }
        if (!hit) from_h.insert(m.col_labels()[j]);
    }
    return from_h == fset;
}

} // namespace detail

/// Seeded sweep over random (poset, supergraph) instances running every
/// verifier, the feasibility characterizations against each other, and the
/// feasible => facial implication with certificate validation.
inline Report oracle_sweep(const SweepConfig& config) {
    Report report;
    report.merge(verify_unnatural_counterexample(), "counterexample: ");
    const Rng root(config.seed);
    for (int t = 0; t < config.trials; ++t) {
        const Rng trial = root.child(static_cast<std::uint64_t>(t));
        const int m = config.m_min + t % (config.m_max - config.m_min + 1);
        const std::string tag = "trial " + std::to_string(t) + " (m=" + std::to_string(m) + "): ";
        try {
            const Poset p = random_poset(m, trial.child(1).seed());
            const DistributiveLattice l = order_ideals(p);
            const Graph g = random_supergraph(minimal_graph(l), m, trial.child(2).seed());

            report.merge(verify_hc_roundtrip(p, g, trial.child(3).seed()), tag + "hc: ");
            report.merge(verify_cover_forcing(p, trial.child(4).seed()), tag + "cover: ");

            const ParamMatrix a = matrix_AG(g);
            const auto& f = l.elements();
            const auto feas = is_feasible(a, f);
            if (!feas.feasible)
                report.fail(tag + "feasible", "lattice support unexpectedly infeasible");
            if (detail::feasible_via_h_set(a, f) != feas.feasible)
                report.fail(tag + "feasible", "definition and H-set routes disagree on L");

            // Random column set: the two characterizations must agree.
            Rng frng = trial.child(5);
            std::vector<SubsetMask> random_f;
            for (SubsetMask col : a.col_labels())
                if (frng.coin()) random_f.push_back(col);
            if (random_f.empty()) random_f.push_back(a.col_labels().front());
            if (is_feasible(a, random_f).feasible != detail::feasible_via_h_set(a, random_f))
                report.fail(tag + "feasible", "characterizations disagree on a random F");

            if (config.with_facial) {
                const auto facial = is_facial(a, f);
                if (!facial.facial)
                    report.fail(tag + "facial", "feasible lattice support is not facial");
                else if (!check_facial_certificate(a, f, facial.certificate))
                    report.fail(tag + "facial", "returned certificate is invalid");
            }
        } catch (const Error& e) {
            report.fail(tag + "exception", e.what());
        }
    }
    return report;
}

} // namespace latgm
