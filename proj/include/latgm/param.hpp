#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latgm/ci.hpp"
#include "latgm/errors.hpp"
#include "latgm/graph.hpp"
#include "latgm/lattice.hpp"
#include "latgm/linalg.hpp"
#include "latgm/rational.hpp"
#include "latgm/rng.hpp"
#include "latgm/subset.hpp"

namespace latgm {

/// Identifies one parameter (one matrix row): a (maximal clique, subset)
/// pair for the standard parametrization, a clique for the per-clique one,
/// or t / b_i for the Hibi map.
struct RowLabel {
    enum class Kind { clique_pair, clique, hibi_t, hibi_b };

    Kind kind;
    SubsetMask s, t; // clique_pair: (s, t); clique: s
    int index = 0;   // hibi_b: the variable index

    static RowLabel clique_pair(SubsetMask s, SubsetMask t) { return {Kind::clique_pair, s, t, 0}; }
    static RowLabel clique(SubsetMask s) { return {Kind::clique, s, SubsetMask{}, 0}; }
    static RowLabel hibi_t() { return {Kind::hibi_t, SubsetMask{}, SubsetMask{}, 0}; }
    static RowLabel hibi_b(int i) { return {Kind::hibi_b, SubsetMask{}, SubsetMask{}, i}; }

    friend bool operator==(const RowLabel& a, const RowLabel& b) {
        return a.kind == b.kind && a.s == b.s && a.t == b.t && a.index == b.index;
    }
    friend bool operator<(const RowLabel& a, const RowLabel& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (!(a.s == b.s)) return a.s < b.s;
        if (!(a.t == b.t)) return a.t < b.t;
        return a.index < b.index;
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::clique_pair: return "(" + s.to_string() + "," + t.to_string() + ")";
            case Kind::clique: return s.to_string();
            case Kind::hibi_t: return "t";
            case Kind::hibi_b: return "b" + std::to_string(index);
        }
        return "?";
    }
};

/// 0/1 matrix with labeled rows (parameters) and subset-labeled columns.
/// Columns are sorted by (cardinality, value); positions are an
/// implementation detail, tests and callers match by label.
class ParamMatrix {
public:
    ParamMatrix(int m, std::vector<RowLabel> row_labels, std::vector<SubsetMask> col_labels,
                std::vector<std::vector<std::uint8_t>> entries)
        : m_(m),
          row_labels_(std::move(row_labels)),
          col_labels_(std::move(col_labels)),
          entries_(std::move(entries)) {
        for (std::size_t j = 0; j < col_labels_.size(); ++j) col_index_[col_labels_[j]] = j;
    }

    int m() const { return m_; }
    std::size_t rows() const { return row_labels_.size(); }
    std::size_t cols() const { return col_labels_.size(); }
    const std::vector<RowLabel>& row_labels() const { return row_labels_; }
    const std::vector<SubsetMask>& col_labels() const { return col_labels_; }
    int entry(std::size_t i, std::size_t j) const { return entries_[i][j]; }

    std::optional<std::size_t> find_col(SubsetMask s) const {
        const auto it = col_index_.find(s);
        if (it == col_index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<std::size_t> find_row(const RowLabel& label) const {
        for (std::size_t i = 0; i < row_labels_.size(); ++i)
            if (row_labels_[i] == label) return i;
        return std::nullopt;
    }

    /// Row indices with a 1 in column j.
    std::vector<std::size_t> col_support(std::size_t j) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < rows(); ++i)
            if (entries_[i][j]) out.push_back(i);
        return out;
    }

    /// Column as a rational vector (for the LP-side code).
    std::vector<Rat> col_vector(std::size_t j) const {
        std::vector<Rat> out(rows());
        for (std::size_t i = 0; i < rows(); ++i) out[i] = entries_[i][j];
        return out;
    }

    /// Plain-text grid: header row of column labels, then one labeled row of
    /// 0/1 entries per parameter.
    std::string to_text() const {
        std::string out;
        out += "columns:";
        for (SubsetMask c : col_labels_) out += " " + c.to_string();
        out += "\n";
        for (std::size_t i = 0; i < rows(); ++i) {
            out += row_labels_[i].to_string() + " :";
            for (std::size_t j = 0; j < cols(); ++j) out += " " + std::to_string(int(entries_[i][j]));
            out += "\n";
        }
        return out;
    }

private:
    int m_;
    std::vector<RowLabel> row_labels_;
    std::vector<SubsetMask> col_labels_;
    std::vector<std::vector<std::uint8_t>> entries_;
    std::map<SubsetMask, std::size_t> col_index_;
};

namespace detail {

inline std::vector<SubsetMask> all_subsets(int m) {
    std::vector<SubsetMask> out;
    out.reserve(std::size_t{1} << m);
    for (std::uint32_t b = 0; b < (1u << m); ++b) out.push_back(SubsetMask(b));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<SubsetMask> sorted_submasks(SubsetMask s) {
    std::vector<SubsetMask> out;
    std::uint32_t sub = 0;
    while (true) {
        out.push_back(SubsetMask(sub));
        if (sub == s.bits) break;
        sub = (sub - s.bits) & s.bits;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// Standard parametrization matrix: one row per (maximal clique S, T <= S),
/// entry((S,T), U) = 1 iff U cap S = T. Columns: all of 2^[m].
inline ParamMatrix matrix_AG(const Graph& g) {
    const auto cs = cliques(g);
    std::vector<RowLabel> row_labels;
    std::vector<std::pair<SubsetMask, SubsetMask>> pairs;
    for (SubsetMask s : cs.maximal)
        for (SubsetMask t : detail::sorted_submasks(s)) {
            row_labels.push_back(RowLabel::clique_pair(s, t));
            pairs.push_back({s, t});
        }
    const auto cols = detail::all_subsets(g.m());
    std::vector<std::vector<std::uint8_t>> entries(pairs.size(),
                                                   std::vector<std::uint8_t>(cols.size(), 0));
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            entries[i][j] = ((cols[j] & pairs[i].first) == pairs[i].second) ? 1 : 0;
    return ParamMatrix(g.m(), std::move(row_labels), cols, std::move(entries));
}

/// Per-clique parametrization matrix: one row per clique S (including the
/// empty one), entry(S, U) = 1 iff S <= U. Columns: all of 2^[m].
inline ParamMatrix matrix_BG(const Graph& g) {
    const auto cs = cliques(g);
    std::vector<RowLabel> row_labels;
    for (SubsetMask s : cs.all) row_labels.push_back(RowLabel::clique(s));
    const auto cols = detail::all_subsets(g.m());
    std::vector<std::vector<std::uint8_t>> entries(cs.all.size(),
                                                   std::vector<std::uint8_t>(cols.size(), 0));
    for (std::size_t i = 0; i < cs.all.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            entries[i][j] = cs.all[i].subset_of(cols[j]) ? 1 : 0;
    return ParamMatrix(g.m(), std::move(row_labels), cols, std::move(entries));
}

/// The monomial map: p_U = prod_i theta_i^{a_iU}, with 0^0 = 1. Result is
/// not normalized.
inline Distribution apply_param(const ParamMatrix& m, const std::vector<Rat>& theta) {
    if (theta.size() != m.rows())
        throw std::invalid_argument("apply_param: parameter count does not match rows");
    std::map<SubsetMask, Rat> values;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Rat v = 1;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m.entry(i, j)) v *= theta[i];
        values[m.col_labels()[j]] = v;
    }
    return Distribution(m.m(), std::move(values));
}

struct FeasibilityResult {
    bool feasible;
    std::vector<RowLabel> h_rows;              // rows outside the union of F's supports
    std::optional<SubsetMask> violating_column; // set when infeasible
};

namespace detail {

inline std::vector<std::size_t> resolve_columns(const ParamMatrix& m,
                                                const std::vector<SubsetMask>& f) {
    std::vector<std::size_t> out;
    std::set<std::size_t> seen;
    for (SubsetMask s : f) {
        const auto j = m.find_col(s);
        if (!j) throw std::invalid_argument("column label " + s.to_string() + " not in matrix");
        if (seen.insert(*j).second) out.push_back(*j);
    }
    return out;
}

} // namespace detail

/// Combinatorial support test: F is feasible iff no outside column's support
/// is covered by the union of the supports of F's columns. When feasible the
/// H rows (complement of that union) satisfy a_ij = 0 for all i in H exactly
/// on the columns of F; when not, a first violating column is returned.
inline FeasibilityResult is_feasible(const ParamMatrix& m, const std::vector<SubsetMask>& f) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.col_support(j).empty())
            throw EmptyColumnError("is_feasible: column " + m.col_labels()[j].to_string() +
                                   " is all zeros");
    const auto fcols = detail::resolve_columns(m, f);
    std::vector<bool> in_f(m.cols(), false);
    for (auto j : fcols) in_f[j] = true;
    std::vector<bool> covered(m.rows(), false);
    for (auto j : fcols)
        for (auto i : m.col_support(j)) covered[i] = true;

    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (in_f[j]) continue;
        bool escapes = false;
        for (auto i : m.col_support(j))
            if (!covered[i]) { escapes = true; break; }
        if (!escapes) return {false, {}, m.col_labels()[j]};
    }
    std::vector<RowLabel> h;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!covered[i]) h.push_back(m.row_labels()[i]);
    return {true, std::move(h), std::nullopt};
}

/// Nonnegative combination of columns witnessing that no supporting
/// functional exists: sum of ineq_multipliers[j] * a^j over columns off F
/// plus sum of eq_multipliers[k] * a^k over columns in F equals zero, while
/// the ineq multipliers are nonnegative with positive sum.
struct InfeasibilityProof {
    std::vector<std::pair<SubsetMask, Rat>> ineq_multipliers;
    std::vector<std::pair<SubsetMask, Rat>> eq_multipliers;
};

struct FacialResult {
    bool facial;
    std::vector<Rat> certificate; // per row; zero on F's columns, >= 1 off them
    std::optional<InfeasibilityProof> proof;
};

/// Decides whether F is cut out by a face of the cone over the columns:
/// exists c with c.a^j = 0 on F and c.a^j >= 1 off F (any positive slack can
/// be scaled to 1). The equalities are eliminated exactly, the remaining
/// strict system goes through Fourier-Motzkin. When F is also feasible the
/// returned certificate is the indicator of the H rows, the canonical
/// supporting functional; the LP still decides the verdict.
inline FacialResult is_facial(const ParamMatrix& m, const std::vector<SubsetMask>& f) {
    const auto fcols = detail::resolve_columns(m, f);
    std::vector<bool> in_f(m.cols(), false);
    for (auto j : fcols) in_f[j] = true;
    const std::size_t d = m.rows();

    // Eliminate c.a^j = 0 (j in F): express c = subst * x with x free.
    std::vector<std::vector<Rat>> eq;
    for (auto j : fcols) {
        std::vector<Rat> row(d);
        for (std::size_t i = 0; i < d; ++i) row[i] = m.entry(i, j);
        eq.push_back(std::move(row));
    }
    std::vector<std::vector<Rat>> reduced = eq;
    const auto pivots = linalg::rref(reduced);
    std::vector<bool> is_pivot(d, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_vars;
    for (std::size_t i = 0; i < d; ++i)
        if (!is_pivot[i]) free_vars.push_back(i);
    // subst[i][k]: coefficient of free var k in c_i.
    std::vector<std::vector<Rat>> subst(d, std::vector<Rat>(free_vars.size(), Rat(0)));
    for (std::size_t k = 0; k < free_vars.size(); ++k) subst[free_vars[k]][k] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t k = 0; k < free_vars.size(); ++k)
            subst[pivots[r]][k] = -reduced[r][free_vars[k]];

    // Inequalities c.a^j >= 1 for j off F, in the free variables.
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    std::vector<SubsetMask> row_col;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (in_f[j]) continue;
        std::vector<Rat> row(free_vars.size(), Rat(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (!m.entry(i, j)) continue;
            for (std::size_t k = 0; k < free_vars.size(); ++k) row[k] += subst[i][k];
        }
        rows.push_back(std::move(row));
        rhs.push_back(Rat(1));
        row_col.push_back(m.col_labels()[j]);
    }

    auto fm = linalg::fourier_motzkin(free_vars.size(), std::move(rows), std::move(rhs));
    if (!fm.feasible) {
        InfeasibilityProof proof;
        std::vector<Rat> v(d, Rat(0)); // sum of lambda_j a^j
        for (std::size_t r = 0; r < fm.farkas_multipliers.size(); ++r) {
            const Rat& lam = fm.farkas_multipliers[r];
            if (lam == 0) continue;
            proof.ineq_multipliers.push_back({row_col[r], lam});
            const auto j = *m.find_col(row_col[r]);
            for (std::size_t i = 0; i < d; ++i)
                if (m.entry(i, j)) v[i] += lam;
        }
        // v lies in the span of F's columns; solve for the equality part.
        std::vector<std::vector<Rat>> fcolumns;
        for (auto j : fcols) fcolumns.push_back(m.col_vector(j));
        std::vector<Rat> neg_v(d);
        for (std::size_t i = 0; i < d; ++i) neg_v[i] = -v[i];
        const auto mu = linalg::solve(fcolumns, neg_v);
        if (mu) {
            for (std::size_t k = 0; k < fcols.size(); ++k)
                if ((*mu)[k] != 0)
                    proof.eq_multipliers.push_back({m.col_labels()[fcols[k]], (*mu)[k]});
        }
        return {false, {}, std::move(proof)};
    }

    // Assemble c from the free-variable witness and clear denominators.
    std::vector<Rat> c(d, Rat(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < free_vars.size(); ++k)
            c[i] += subst[i][k] * fm.witness[k];
    Int scale = 1;
    for (const Rat& x : c) scale = lcm(scale, denominator(x));
    for (Rat& x : c) x *= Rat(scale);

    // Prefer the combinatorial certificate when the set is also feasible.
    bool has_empty_col = false;
    for (std::size_t j = 0; j < m.cols() && !has_empty_col; ++j)
        if (m.col_support(j).empty()) has_empty_col = true;
    if (!has_empty_col) {
        const auto feas = is_feasible(m, f);
        if (feas.feasible) {
            std::vector<Rat> indicator(d, Rat(0));
            for (const auto& label : feas.h_rows) indicator[*m.find_row(label)] = 1;
            c = std::move(indicator);
        }
    }
    return {true, std::move(c), std::nullopt};
}

/// True iff c vanishes on F's columns and is >= 1 on the others.
inline bool check_facial_certificate(const ParamMatrix& m, const std::vector<SubsetMask>& f,
                                     const std::vector<Rat>& c) {
    if (c.size() != m.rows()) return false;
    const auto fcols = detail::resolve_columns(m, f);
    std::vector<bool> in_f(m.cols(), false);
    for (auto j : fcols) in_f[j] = true;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Rat dot = 0;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m.entry(i, j)) dot += c[i];
        if (in_f[j] ? (dot != 0) : (dot < 1)) return false;
    }
    return true;
}

/// Builds a point of the model with support exactly F: zero parameters on
/// the H rows of the feasibility witness, seeded positive rationals
/// elsewhere.
inline Distribution realize_support(const ParamMatrix& m, const std::vector<SubsetMask>& f,
                                    std::uint64_t seed) {
    const auto feas = is_feasible(m, f);
    if (!feas.feasible)
        throw NotFeasibleError("realize_support: support is not feasible, violating column " +
                               feas.violating_column->to_string());
    std::vector<bool> zero(m.rows(), false);
    for (const auto& label : feas.h_rows) zero[*m.find_row(label)] = true;
    Rng rng(seed);
    std::vector<Rat> theta(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) theta[i] = zero[i] ? Rat(0) : rng.positive_rational();
    return apply_param(m, theta);
}

/// The deformation p_j(eps) = eps^{c.a_j} * prod_i theta_i^{a_ij}. On F the
/// value is independent of eps; off F it carries a positive integer power of
/// eps and tends to zero with it.
inline Distribution facial_limit_witness(const ParamMatrix& m, const std::vector<SubsetMask>& f,
                                         const std::vector<Rat>& c, const std::vector<Rat>& theta,
                                         const Rat& eps) {
    if (c.size() != m.rows() || theta.size() != m.rows())
        throw std::invalid_argument("facial_limit_witness: vector length does not match rows");
    for (const Rat& t : theta)
        if (t <= 0) throw std::invalid_argument("facial_limit_witness: theta must be strictly positive");
    if (eps <= 0) throw std::invalid_argument("facial_limit_witness: eps must be positive");
    const auto fcols = detail::resolve_columns(m, f);
    std::vector<bool> in_f(m.cols(), false);
    for (auto j : fcols) in_f[j] = true;

    std::vector<Rat> exponent(m.cols(), Rat(0));
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Rat e = 0;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m.entry(i, j)) e += c[i];
        if (in_f[j] && e != 0)
            throw BadCertificateError("certificate is nonzero on column " +
                                      m.col_labels()[j].to_string());
        if (!in_f[j] && e <= 0)
            throw BadCertificateError("certificate is not positive on column " +
                                      m.col_labels()[j].to_string());
        if (!is_integer(e))
            throw NonIntegerExponentError("exponent " + format_rational(e) + " on column " +
                                          m.col_labels()[j].to_string() + " is not an integer");
        exponent[j] = e;
    }
    std::map<SubsetMask, Rat> values;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Rat v = rat_pow(eps, numerator(exponent[j]));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m.entry(i, j)) v *= theta[i];
        values[m.col_labels()[j]] = v;
    }
    return Distribution(m.m(), std::move(values));
}

/// A pure binomial p^u - p^v lies in the toric ideal of M iff M u = M v.
inline bool in_toric_kernel(const ParamMatrix& m, const Binomial& b) {
    std::vector<long long> diff(m.cols(), 0);
    for (SubsetMask s : b.plus()) {
        const auto j = m.find_col(s);
        if (!j) throw std::invalid_argument("in_toric_kernel: column " + s.to_string() + " not in matrix");
        ++diff[*j];
    }
    for (SubsetMask s : b.minus()) {
        const auto j = m.find_col(s);
        if (!j) throw std::invalid_argument("in_toric_kernel: column " + s.to_string() + " not in matrix");
        --diff[*j];
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        long long acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.entry(i, j)) acc += diff[j];
        if (acc != 0) return false;
    }
    return true;
}

/// Exact rational row-space equality, via Bareiss ranks of each matrix and
/// of their vertical stack. Columns are matched by label.
inline bool same_row_space(const ParamMatrix& m1, const ParamMatrix& m2) {
    if (m1.col_labels() != m2.col_labels()) {
        // Same set in a different order never happens with sorted labels, so
        // unequal vectors mean unequal sets.
        throw ColumnMismatchError("same_row_space: column label sets differ");
    }
    auto to_int_rows = [](const ParamMatrix& m) {
        std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.entry(i, j);
        return rows;
    };
    const auto r1 = to_int_rows(m1);
    const auto r2 = to_int_rows(m2);
    std::vector<std::vector<Int>> stacked = r1;
    stacked.insert(stacked.end(), r2.begin(), r2.end());
    const int rank1 = linalg::bareiss_rank(r1);
    const int rank2 = linalg::bareiss_rank(r2);
    const int ranks = linalg::bareiss_rank(stacked);
    return rank1 == rank2 && rank2 == ranks;
}

} // namespace latgm
