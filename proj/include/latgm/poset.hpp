#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "latgm/graph.hpp"
#include "latgm/subset.hpp"

namespace latgm {

/// Partial order on [m], stored by its cover relations (Hasse diagram).
/// A cover pair (i, j) means i covers j, i.e. j < i with nothing in between.
/// Duplicate pairs and transitively implied pairs are rejected: such input
/// is a malformed Hasse diagram, not a poset to repair.
class Poset {
public:
    Poset(int m, std::vector<std::pair<int, int>> covers) : m_(m) {
        if (m < 1 || m > kMaxGroundSet)
            throw std::invalid_argument("poset: m must be in [1," + std::to_string(kMaxGroundSet) + "]");
        for (auto [i, j] : covers) {
            if (i < 1 || i > m || j < 1 || j > m)
                throw std::invalid_argument("poset: cover element out of range");
            if (i == j) throw std::invalid_argument("poset: cover (i,i) not allowed");
        }
        std::sort(covers.begin(), covers.end());
        if (std::adjacent_find(covers.begin(), covers.end()) != covers.end())
            throw std::invalid_argument("poset: duplicate cover pair");
        covers_ = std::move(covers);

        // down_[i] = {j : j <= i}, computed by DFS over covers with cycle detection.
        down_.assign(m + 1, SubsetMask{});
        std::vector<int> state(m + 1, 0); // 0 fresh, 1 visiting, 2 done
        std::vector<std::vector<int>> below(m + 1);
        for (auto [i, j] : covers_) below[i].push_back(j);
        for (int i = 1; i <= m; ++i) close_down(i, below, state);

        // Reject covers with a strictly intermediate element.
        for (auto [i, j] : covers_) {
            const SubsetMask between = (down_[i] - down_[j]).without(i).without(j);
            for (int k : between.elements())
                if (down_[k].contains(j))
                    throw std::invalid_argument("poset: cover (" + std::to_string(i) + "," +
                                                std::to_string(j) + ") is transitively implied via " +
                                                std::to_string(k));
        }
    }

    int m() const { return m_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    /// j <= i in the order.
    bool leq(int j, int i) const { return down_[i].contains(j); }
    bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

    /// The principal order ideal {j : j <= i}.
    SubsetMask down(int i) const { return down_[i]; }

    /// Smallest order ideal containing s.
    SubsetMask ideal_closure(SubsetMask s) const {
        SubsetMask out;
        for (int i : s.elements()) out = out | down_[i];
        return out;
    }

    bool is_ideal(SubsetMask s) const { return ideal_closure(s) == s; }

    /// Elements of s with nothing above them inside s.
    SubsetMask maximal_elements(SubsetMask s) const {
        SubsetMask out = s;
        for (int i : s.elements())
            for (int j : s.elements())
                if (j != i && down_[j].contains(i)) { out = out.without(i); break; }
        return out;
    }

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.m_ == b.m_ && a.covers_ == b.covers_;
    }

private:
    void close_down(int i, const std::vector<std::vector<int>>& below, std::vector<int>& state) {
        if (state[i] == 2) return;
        if (state[i] == 1) throw std::invalid_argument("poset: cover relation has a cycle");
        state[i] = 1;
        SubsetMask acc = SubsetMask{}.with(i);
        for (int j : below[i]) {
            close_down(j, below, state);
            acc = acc | down_[j];
        }
        down_[i] = acc;
        state[i] = 2;
    }

    int m_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<SubsetMask> down_;
};

/// Smallest order ideal of P containing S.
inline SubsetMask ideal_closure(const Poset& p, SubsetMask s) { return p.ideal_closure(s); }

/// Edge {i,j} for every comparable pair of P.
inline Graph comparability_graph(const Poset& p) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= p.m(); ++i)
        for (int j = i + 1; j <= p.m(); ++j)
            if (p.comparable(i, j)) edges.push_back({i, j});
    return Graph(p.m(), std::move(edges));
}

} // namespace latgm
