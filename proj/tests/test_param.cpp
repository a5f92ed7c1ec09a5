#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "latgm/oracle.hpp"
#include "latgm/param.hpp"

#include "fixtures.hpp"

using namespace latgm;
using fixtures::four_cycle;

namespace {

// The published matrices use column order {},4,3,34,2,24,23,234,1,14,13,134,12,124,123,1234.
const std::vector<SubsetMask> kPaperCols = {
    SubsetMask::of({}),     SubsetMask::of({4}),       SubsetMask::of({3}),
    SubsetMask::of({3, 4}), SubsetMask::of({2}),       SubsetMask::of({2, 4}),
    SubsetMask::of({2, 3}), SubsetMask::of({2, 3, 4}), SubsetMask::of({1}),
    SubsetMask::of({1, 4}), SubsetMask::of({1, 3}),    SubsetMask::of({1, 3, 4}),
    SubsetMask::of({1, 2}), SubsetMask::of({1, 2, 4}), SubsetMask::of({1, 2, 3}),
    SubsetMask::of({1, 2, 3, 4})};

void check_row(const ParamMatrix& m, const RowLabel& label, const std::string& bits) {
    const auto row = m.find_row(label);
    REQUIRE(row.has_value());
    REQUIRE(bits.size() == kPaperCols.size());
    for (std::size_t k = 0; k < kPaperCols.size(); ++k) {
        const auto col = m.find_col(kPaperCols[k]);
        REQUIRE(col.has_value());
        INFO("row " << label.to_string() << " column " << kPaperCols[k].to_string());
        CHECK(m.entry(*row, *col) == bits[k] - '0');
    }
}

RowLabel pair_label(std::vector<int> s, std::vector<int> t) {
    SubsetMask sm, tm;
    for (int i : s) sm = sm.with(i);
    for (int i : t) tm = tm.with(i);
    return RowLabel::clique_pair(sm, tm);
}

} // namespace

TEST_CASE("standard parametrization matrix of the four-cycle") {
    const ParamMatrix a = matrix_AG(four_cycle());
    CHECK(a.rows() == 16);
    CHECK(a.cols() == 16);

    check_row(a, pair_label({1, 2}, {}), "1111000000000000");
    check_row(a, pair_label({1, 2}, {2}), "0000111100000000");
    check_row(a, pair_label({1, 2}, {1}), "0000000011110000");
    check_row(a, pair_label({1, 2}, {1, 2}), "0000000000001111");
    check_row(a, pair_label({2, 3}, {}), "1100000011000000");
    check_row(a, pair_label({2, 3}, {3}), "0011000000110000");
    check_row(a, pair_label({2, 3}, {2}), "0000110000001100");
    check_row(a, pair_label({2, 3}, {2, 3}), "0000001100000011");
    check_row(a, pair_label({3, 4}, {}), "1000100010001000");
    check_row(a, pair_label({3, 4}, {4}), "0100010001000100");
    check_row(a, pair_label({3, 4}, {3}), "0010001000100010");
    check_row(a, pair_label({3, 4}, {3, 4}), "0001000100010001");
    check_row(a, pair_label({1, 4}, {}), "1010101000000000");
    check_row(a, pair_label({1, 4}, {4}), "0101010100000000");
    check_row(a, pair_label({1, 4}, {1}), "0000000010101010");
    check_row(a, pair_label({1, 4}, {1, 4}), "0000000001010101");
}

TEST_CASE("per-clique parametrization matrix of the four-cycle") {
    const ParamMatrix b = matrix_BG(four_cycle());
    CHECK(b.rows() == 9);
    CHECK(b.cols() == 16);
    check_row(b, RowLabel::clique(SubsetMask::of({})), "1111111111111111");
    check_row(b, RowLabel::clique(SubsetMask::of({1})), "0000000011111111");
    check_row(b, RowLabel::clique(SubsetMask::of({2})), "0000111100001111");
    check_row(b, RowLabel::clique(SubsetMask::of({3})), "0011001100110011");
    check_row(b, RowLabel::clique(SubsetMask::of({4})), "0101010101010101");
    check_row(b, RowLabel::clique(SubsetMask::of({1, 2})), "0000000000001111");
    check_row(b, RowLabel::clique(SubsetMask::of({2, 3})), "0000001100000011");
    check_row(b, RowLabel::clique(SubsetMask::of({3, 4})), "0001000100010001");
    check_row(b, RowLabel::clique(SubsetMask::of({1, 4})), "0000000001010101");
}

TEST_CASE("small matrices from the definitions") {
    const ParamMatrix edge = matrix_AG(Graph(2, {{1, 2}}));
    CHECK(edge.rows() == 4);
    CHECK(edge.cols() == 4);
    // each column U has exactly one 1, in row (12, U)
    for (std::size_t j = 0; j < edge.cols(); ++j) {
        CHECK(edge.col_support(j).size() == 1);
        const auto i = edge.col_support(j)[0];
        CHECK(edge.row_labels()[i].t == edge.col_labels()[j]);
    }

    const ParamMatrix single = matrix_AG(Graph::empty(1));
    CHECK(single.rows() == 2);
    CHECK(single.cols() == 2);

    const ParamMatrix b2 = matrix_BG(Graph::empty(2));
    CHECK(b2.rows() == 3);
    CHECK(b2.cols() == 4);
    const ParamMatrix b1 = matrix_BG(Graph::complete(1));
    CHECK(b1.rows() == 2);
}

TEST_CASE("apply_param") {
    const ParamMatrix b = matrix_BG(four_cycle());
    const std::vector<Rat> ones(b.rows(), Rat(1));
    const Distribution unit = apply_param(b, ones);
    for (SubsetMask col : b.col_labels()) CHECK(unit.value(col) == 1);

    // distinct primes expose exactly which parameters enter p_{2,3,4}
    std::vector<Rat> primes(b.rows());
    const int prime_list[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
    for (std::size_t i = 0; i < b.rows(); ++i) primes[i] = prime_list[i];
    const Distribution img = apply_param(b, primes);
    Rat expected = 1;
    for (SubsetMask c :
         {SubsetMask::of({}), SubsetMask::of({2}), SubsetMask::of({3}), SubsetMask::of({4}),
          SubsetMask::of({2, 3}), SubsetMask::of({3, 4})})
        expected *= primes[*b.find_row(RowLabel::clique(c))];
    CHECK(img.value(SubsetMask::of({2, 3, 4})) == expected);

    // zero parameter annihilates exactly its columns
    std::vector<Rat> with_zero = primes;
    const auto row23 = *b.find_row(RowLabel::clique(SubsetMask::of({2, 3})));
    with_zero[row23] = 0;
    const Distribution killed = apply_param(b, with_zero);
    for (std::size_t j = 0; j < b.cols(); ++j) {
        const bool hit = b.entry(row23, j) == 1;
        CHECK((killed.value(b.col_labels()[j]) == 0) == hit);
    }

    CHECK_THROWS_AS(apply_param(b, std::vector<Rat>(3, Rat(1))), std::invalid_argument);
}

TEST_CASE("feasibility of the published supports") {
    const ParamMatrix a = matrix_AG(four_cycle());

    const auto s = is_feasible(a, fixtures::support_S());
    REQUIRE(s.feasible);
    const std::vector<RowLabel> expected_h = {
        pair_label({1, 2}, {2}), pair_label({2, 3}, {2}), pair_label({3, 4}, {4})};
    std::set<std::string> hs;
    for (const auto& l : s.h_rows) hs.insert(l.to_string());
    std::set<std::string> expect;
    for (const auto& l : expected_h) expect.insert(l.to_string());
    CHECK(hs == expect);

    const auto t = is_feasible(a, fixtures::support_T());
    CHECK(!t.feasible);
    CHECK(t.violating_column.has_value());

    const ParamMatrix b = matrix_BG(four_cycle());
    CHECK(!is_feasible(b, fixtures::support_S()).feasible);
}

TEST_CASE("empty column rejection") {
    // A one-row matrix with an all-zero column.
    ParamMatrix bad(1, {RowLabel::clique(SubsetMask::of({1}))},
                    {SubsetMask::of({}), SubsetMask::of({1})}, {{0, 1}});
    CHECK_THROWS_AS(is_feasible(bad, {SubsetMask::of({1})}), EmptyColumnError);
}

TEST_CASE("facial tests on the published supports") {
    const ParamMatrix a = matrix_AG(four_cycle());

    // T is facial but not feasible; the LP must produce an exact certificate.
    const auto t = is_facial(a, fixtures::support_T());
    REQUIRE(t.facial);
    CHECK(check_facial_certificate(a, fixtures::support_T(), t.certificate));

    // S is feasible, so the canonical certificate is the H indicator.
    const auto s = is_facial(a, fixtures::support_S());
    REQUIRE(s.facial);
    CHECK(check_facial_certificate(a, fixtures::support_S(), s.certificate));
    std::vector<Rat> indicator(a.rows(), Rat(0));
    for (const auto& label :
         {pair_label({1, 2}, {2}), pair_label({2, 3}, {2}), pair_label({3, 4}, {4})})
        indicator[*a.find_row(label)] = 1;
    CHECK(s.certificate == indicator);

    // The full column set is a face of the whole cone, with c = 0.
    const auto full = is_facial(a, a.col_labels());
    REQUIRE(full.facial);
    CHECK(full.certificate == std::vector<Rat>(a.rows(), Rat(0)));
}

TEST_CASE("facialness only depends on the row space") {
    // S is not B_G-feasible, but facial is a cone property shared by A_G and
    // B_G since their row spaces agree.
    const ParamMatrix b = matrix_BG(four_cycle());
    CHECK(!is_feasible(b, fixtures::support_S()).feasible);
    const auto res = is_facial(b, fixtures::support_S());
    CHECK(res.facial);
    CHECK(check_facial_certificate(b, fixtures::support_S(), res.certificate));
}

TEST_CASE("non-facial sets come with a checkable refutation") {
    // Columns u=(1,0), v=(0,1), w=(1,1): {u,v} forces c=0, so c.w >= 1 fails.
    const ParamMatrix m(2,
                        {RowLabel::clique(SubsetMask::of({1})), RowLabel::clique(SubsetMask::of({2}))},
                        {SubsetMask::of({1}), SubsetMask::of({2}), SubsetMask::of({1, 2})},
                        {{1, 0, 1}, {0, 1, 1}});
    const std::vector<SubsetMask> f = {SubsetMask::of({1}), SubsetMask::of({2})};
    CHECK(!is_feasible(m, f).feasible);
    const auto res = is_facial(m, f);
    REQUIRE(!res.facial);
    REQUIRE(res.proof.has_value());
    // the multipliers combine the columns to zero with positive mass on the
    // inequality side
    std::vector<Rat> combo(m.rows(), Rat(0));
    Rat mass = 0;
    for (const auto& [col, lam] : res.proof->ineq_multipliers) {
        REQUIRE(lam > 0);
        mass += lam;
        const auto j = *m.find_col(col);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m.entry(i, j)) combo[i] += lam;
    }
    for (const auto& [col, mu] : res.proof->eq_multipliers) {
        const auto j = *m.find_col(col);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m.entry(i, j)) combo[i] += mu;
    }
    CHECK(mass > 0);
    CHECK(combo == std::vector<Rat>(m.rows(), Rat(0)));
}

TEST_CASE("realize_support") {
    const ParamMatrix a = matrix_AG(four_cycle());
    const Distribution d = realize_support(a, fixtures::support_S(), 7);
    CHECK(d.support() == fixtures::support_S());
    // determinism
    const Distribution d2 = realize_support(a, fixtures::support_S(), 7);
    CHECK(d.values() == d2.values());
    // realized points satisfy the pairwise generators
    CHECK(satisfies_all(pairwise_binomials(four_cycle()), d).ok());

    const Distribution full = realize_support(a, a.col_labels(), 3);
    CHECK(full.support().size() == 16);

    CHECK_THROWS_AS(realize_support(a, fixtures::support_T(), 1), NotFeasibleError);
}

TEST_CASE("facial limit witness") {
    const ParamMatrix a = matrix_AG(four_cycle());

    // trivial face: the whole column set with c = 0
    std::vector<Rat> theta(a.rows());
    Rng rng(5);
    for (auto& t : theta) t = rng.positive_rational();
    const Distribution undeformed = apply_param(a, theta);
    const Distribution same = facial_limit_witness(a, a.col_labels(),
                                                   std::vector<Rat>(a.rows(), Rat(0)), theta,
                                                   Rat(1, 2));
    CHECK(same.values() == undeformed.values());

    const auto support_t = fixtures::support_T();
    const auto t_facial = is_facial(a, support_t);
    REQUIRE(t_facial.facial);
    const std::vector<Rat> ones(a.rows(), Rat(1));
    const Distribution deformed =
        facial_limit_witness(a, support_t, t_facial.certificate, ones, Rat(1, 2));
    std::set<SubsetMask> in_t(support_t.begin(), support_t.end());
    for (SubsetMask col : a.col_labels()) {
        if (in_t.count(col)) {
            CHECK(deformed.value(col) == 1);
        } else {
            CHECK(deformed.value(col) > 0);
            CHECK(deformed.value(col) < 1);
        }
    }

    // eps = 1 is the undeformed point
    const Distribution eps_one =
        facial_limit_witness(a, fixtures::support_T(), t_facial.certificate, theta, Rat(1));
    CHECK(eps_one.values() == apply_param(a, theta).values());

    // the deformation decays monotonically to zero off the face: at eps =
    // 1/2^k every off-face coordinate is scaled by at least 2^-k
    const Distribution deeper =
        facial_limit_witness(a, fixtures::support_T(), t_facial.certificate, ones, Rat(1, 4));
    for (SubsetMask col : a.col_labels()) {
        if (in_t.count(col)) {
            CHECK(deeper.value(col) == 1);
        } else {
            CHECK(deeper.value(col) <= deformed.value(col) / 2);
        }
    }

    // certificate validation
    CHECK_THROWS_AS(facial_limit_witness(a, fixtures::support_T(), ones, ones, Rat(1, 2)),
                    BadCertificateError);
    std::vector<Rat> half = t_facial.certificate;
    for (auto& c : half) c /= 3;
    const bool integral = [&] {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Rat e = 0;
            for (std::size_t i = 0; i < a.rows(); ++i)
                if (a.entry(i, j)) e += half[i];
            if (!is_integer(e)) return false;
        }
        return true;
    }();
    if (!integral)
        CHECK_THROWS_AS(
            facial_limit_witness(a, fixtures::support_T(), half, ones, Rat(1, 2)),
            NonIntegerExponentError);
    CHECK_THROWS_AS(facial_limit_witness(a, fixtures::support_T(), t_facial.certificate,
                                         std::vector<Rat>(a.rows(), Rat(0)), Rat(1, 2)),
                    std::invalid_argument);
}

TEST_CASE("toric kernel membership") {
    const ParamMatrix a = matrix_AG(four_cycle());
    const ParamMatrix b = matrix_BG(four_cycle());
    for (const auto& q : fixtures::four_cycle_quadrics()) {
        CHECK(in_toric_kernel(a, q));
        CHECK(in_toric_kernel(b, q));
    }
    for (const auto& q : fixtures::four_cycle_quartics()) {
        CHECK(in_toric_kernel(a, q));
        CHECK(in_toric_kernel(b, q));
    }
    const Binomial edge_indep({SubsetMask::of({}), SubsetMask::of({1, 2})},
                              {SubsetMask::of({1}), SubsetMask::of({2})});
    CHECK(!in_toric_kernel(a, edge_indep));
}

TEST_CASE("row space comparisons") {
    const ParamMatrix a = matrix_AG(four_cycle());
    const ParamMatrix b = matrix_BG(four_cycle());
    CHECK(same_row_space(a, b));
    CHECK(same_row_space(a, a));

    const ParamMatrix bpath = matrix_BG(fixtures::path4());
    CHECK(!same_row_space(b, bpath));
    // a separating binomial: 1 _||_ 4 holds for the path, not the cycle
    const Binomial sep({SubsetMask::of({}), SubsetMask::of({1, 4})},
                       {SubsetMask::of({1}), SubsetMask::of({4})});
    CHECK(in_toric_kernel(bpath, sep));
    CHECK(!in_toric_kernel(b, sep));

    const ParamMatrix restricted(4, {RowLabel::clique(SubsetMask::of({}))},
                                 {SubsetMask::of({})}, {{1}});
    CHECK_THROWS_AS(same_row_space(a, restricted), ColumnMismatchError);
}

TEST_CASE("feasibility characterizations agree on random inputs") {
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 2 + trial % 4;
        const Graph g = random_supergraph(Graph::empty(m), m, 1700 + trial);
        const ParamMatrix a = matrix_AG(g);
        Rng rng(31 + trial);

        // random F: both routes agree
        std::vector<SubsetMask> f;
        for (SubsetMask col : a.col_labels())
            if (rng.coin()) f.push_back(col);
        if (f.empty()) f.push_back(a.col_labels().front());

        const bool direct = is_feasible(a, f).feasible;
        // H route, straight from the characterization
        std::set<SubsetMask> fset(f.begin(), f.end());
        std::vector<bool> covered(a.rows(), false);
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (fset.count(a.col_labels()[j]))
                for (auto i : a.col_support(j)) covered[i] = true;
        std::set<SubsetMask> from_h;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            bool escapes = false;
            for (auto i : a.col_support(j))
                if (!covered[i]) { escapes = true; break; }
            if (!escapes) from_h.insert(a.col_labels()[j]);
        }
        CHECK(direct == (from_h == fset));
    }
}

TEST_CASE("feasible implies facial with the indicator certificate") {
    for (int trial = 0; trial < 25; ++trial) {
        const int m = 2 + trial % 4; // up to 5
        const Graph g = random_supergraph(Graph::empty(m), m, 2500 + trial);
        const ParamMatrix a = matrix_AG(g);
        Rng rng(97 + trial);

        // feasible sets are exactly the zero sets of row subsets
        std::vector<bool> in_h(a.rows(), false);
        for (std::size_t i = 0; i < a.rows(); ++i) in_h[i] = rng.coin();
        std::vector<SubsetMask> f;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            bool hit = false;
            for (auto i : a.col_support(j))
                if (in_h[i]) { hit = true; break; }
            if (!hit) f.push_back(a.col_labels()[j]);
        }
        if (f.empty()) continue;

        const auto feas = is_feasible(a, f);
        INFO("m=" << m << " trial=" << trial);
        REQUIRE(feas.feasible);
        const auto facial = is_facial(a, f);
        REQUIRE(facial.facial);
        CHECK(check_facial_certificate(a, f, facial.certificate));
        // the returned certificate is the indicator of the canonical H
        std::vector<Rat> indicator(a.rows(), Rat(0));
        for (const auto& label : feas.h_rows) indicator[*a.find_row(label)] = 1;
        CHECK(facial.certificate == indicator);
    }
}

TEST_CASE("natural lattice supports are feasible for any supergraph") {
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 2 + trial % 5;
        const Poset p = random_poset(m, 3100 + trial);
        const DistributiveLattice l = order_ideals(p);
        const Graph g = random_supergraph(minimal_graph(l), m, 3200 + trial);
        const auto feas = is_feasible(matrix_AG(g), l.elements());
        INFO("m=" << m << " trial=" << trial);
        CHECK(feas.feasible);
    }
}
