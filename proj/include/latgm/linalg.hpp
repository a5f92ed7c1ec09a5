#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "latgm/rational.hpp"

namespace latgm::linalg {

/// Rank of an integer matrix by fraction-free Bareiss elimination. Exact;
/// intermediate entries stay bounded by minors of the input.
inline int bareiss_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    Int prev = 1;
    std::size_t rank = 0, col = 0;
    while (rank < rows && col < cols) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) {
            ++col;
            continue;
        }
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
        ++col;
    }
    return static_cast<int>(rank);
}

/// Reduced row echelon form over the rationals, in place. Returns the pivot
/// column of each nonzero row, in order.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rat>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        const Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(pivots.size());
    return pivots;
}

/// Solves A x = b exactly; columns of A given column-wise. Empty optional if
/// inconsistent. Free variables are set to zero.
inline std::optional<std::vector<Rat>> solve(const std::vector<std::vector<Rat>>& columns,
                                             const std::vector<Rat>& b) {
    const std::size_t n = columns.size();
    const std::size_t rows = b.size();
    std::vector<std::vector<Rat>> aug(rows, std::vector<Rat>(n + 1, Rat(0)));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < rows; ++i) aug[i][j] = columns[j][i];
    for (std::size_t i = 0; i < rows; ++i) aug[i][n] = b[i];
    const auto pivots = rref(aug);
    // With free variables at zero, each pivot row reads x_pivot = rhs.
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == n) return std::nullopt; // pivot in the constant column
        x[pivots[r]] = aug[r][n];
    }
    return x;
}

/// One linear inequality  coeffs . x >= rhs  together with the multipliers
/// expressing it as a nonnegative combination of the original system's rows.
struct Inequality {
    std::vector<Rat> coeffs;
    Rat rhs;
    std::vector<Rat> multipliers;
};

struct FourierMotzkinResult {
    bool feasible;
    std::vector<Rat> witness;             // valid iff feasible
    std::vector<Rat> farkas_multipliers;  // valid iff infeasible; >= 0, combine to 0 >= positive
};

namespace detail {

// Scale to a primitive integer row (positive factor, so the inequality and
// its multipliers keep their meaning).
inline void normalize(Inequality& q) {
    Int scale = 1;
    for (const Rat& c : q.coeffs) scale = lcm(scale, denominator(c));
    scale = lcm(scale, denominator(q.rhs));
    Int g = 0;
    auto acc = [&](const Rat& c) {
        if (c != 0) g = gcd(g, abs(numerator(c) * (scale / denominator(c))));
    };
    for (const Rat& c : q.coeffs) acc(c);
    acc(q.rhs);
    if (g == 0) return;
    const Rat f(scale, g);
    for (Rat& c : q.coeffs) c *= f;
    q.rhs *= f;
    for (Rat& c : q.multipliers) c *= f;
}

} // namespace detail

/// Decides { x : row . x >= rhs for all rows } over the rationals by
/// Fourier-Motzkin elimination. Returns an interior witness when feasible
/// and Farkas multipliers for the contradiction when not. Variables are
/// eliminated smallest product |positive| * |negative| first; rows with
/// identical coefficient vectors are merged keeping the larger right side.
inline FourierMotzkinResult fourier_motzkin(std::size_t dim, std::vector<std::vector<Rat>> rows,
                                            std::vector<Rat> rhs) {
    const std::size_t n_orig = rows.size();

    std::vector<Inequality> sys;
    for (std::size_t i = 0; i < n_orig; ++i) {
        Inequality q{rows[i], rhs[i], std::vector<Rat>(n_orig, Rat(0))};
        q.multipliers[i] = 1;
        detail::normalize(q);
        sys.push_back(std::move(q));
    }

    // Per eliminated variable, the constraints that mentioned it (needed to
    // back-substitute a witness value).
    std::vector<std::pair<std::size_t, std::vector<Inequality>>> trail;
    std::vector<bool> eliminated(dim, false);

    auto check_constants = [&](const std::vector<Inequality>& s) -> const Inequality* {
        for (const auto& q : s) {
            const bool zero = std::all_of(q.coeffs.begin(), q.coeffs.end(),
                                          [](const Rat& c) { return c == 0; });
            if (zero && q.rhs > 0) return &q;
        }
        return nullptr;
    };

    for (std::size_t step = 0; step < dim; ++step) {
        if (const Inequality* bad = check_constants(sys))
            return {false, {}, bad->multipliers};

        // Choose the variable with the cheapest elimination.
        std::size_t var = dim;
        std::size_t best_cost = static_cast<std::size_t>(-1);
        for (std::size_t v = 0; v < dim; ++v) {
            if (eliminated[v]) continue;
            std::size_t pos = 0, neg = 0;
            for (const auto& q : sys) {
                if (q.coeffs[v] > 0) ++pos;
                else if (q.coeffs[v] < 0) ++neg;
            }
            const std::size_t cost = pos * neg + pos + neg;
            if (cost < best_cost) {
                best_cost = cost;
                var = v;
            }
        }
        eliminated[var] = true;

        std::vector<Inequality> keep, pos, neg;
        for (auto& q : sys) {
            if (q.coeffs[var] > 0) pos.push_back(std::move(q));
            else if (q.coeffs[var] < 0) neg.push_back(std::move(q));
            else keep.push_back(std::move(q));
        }
        std::vector<Inequality> involved;
        for (const auto& q : pos) involved.push_back(q);
        for (const auto& q : neg) involved.push_back(q);
        trail.push_back({var, std::move(involved)});

        std::map<std::vector<Rat>, Inequality> merged;
        auto add = [&](Inequality q) {
            detail::normalize(q);
            auto it = merged.find(q.coeffs);
            if (it == merged.end()) merged.emplace(q.coeffs, std::move(q));
            else if (q.rhs > it->second.rhs) it->second = std::move(q);
        };
        for (auto& q : keep) add(std::move(q));
        for (const auto& qp : pos)
            for (const auto& qn : neg) {
                const Rat alpha = qp.coeffs[var];   // > 0
                const Rat beta = -qn.coeffs[var];   // > 0
                Inequality q;
                q.coeffs.resize(dim);
                for (std::size_t j = 0; j < dim; ++j)
                    q.coeffs[j] = beta * qp.coeffs[j] + alpha * qn.coeffs[j];
                q.rhs = beta * qp.rhs + alpha * qn.rhs;
                q.multipliers.resize(n_orig);
                for (std::size_t j = 0; j < n_orig; ++j)
                    q.multipliers[j] = beta * qp.multipliers[j] + alpha * qn.multipliers[j];
                add(std::move(q));
            }
        sys.clear();
        for (auto& [_, q] : merged) sys.push_back(std::move(q));
    }

    if (const Inequality* bad = check_constants(sys))
        return {false, {}, bad->multipliers};

    // Feasible: back-substitute through the trail in reverse.
    std::vector<Rat> x(dim, Rat(0));
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        const auto& [var, involved] = *it;
        bool has_lo = false, has_hi = false;
        Rat lo = 0, hi = 0;
        for (const auto& q : involved) {
            Rat residual = q.rhs;
            for (std::size_t j = 0; j < dim; ++j)
                if (j != var && q.coeffs[j] != 0) residual -= q.coeffs[j] * x[j];
            const Rat bound = residual / q.coeffs[var];
            if (q.coeffs[var] > 0) {
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            } else {
                if (!has_hi || bound < hi) hi = bound;
                has_hi = true;
            }
        }
        if (has_lo) x[var] = lo;
        else if (has_hi) x[var] = hi;
        else x[var] = 0;
    }
    return {true, std::move(x), {}};
}

} // namespace latgm::linalg
