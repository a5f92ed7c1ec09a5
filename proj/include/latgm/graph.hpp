#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "latgm/errors.hpp"
#include "latgm/subset.hpp"

namespace latgm {

/// Simple undirected graph on vertex set [m]. Immutable after construction.
class Graph {
public:
    Graph(int m, std::vector<std::pair<int, int>> edges) : m_(m) {
        if (m < 1 || m > kMaxGroundSet)
            throw std::invalid_argument("graph: m must be in [1," + std::to_string(kMaxGroundSet) + "]");
        adj_.assign(m + 1, SubsetMask{});
        for (auto [i, j] : edges) {
            if (i < 1 || i > m || j < 1 || j > m)
                throw std::invalid_argument("graph: edge endpoint out of range");
            if (i == j) throw std::invalid_argument("graph: loops not allowed");
            if (adj_[i].contains(j)) throw std::invalid_argument(
                "graph: duplicate edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
            adj_[i] = adj_[i].with(j);
            adj_[j] = adj_[j].with(i);
        }
    }

    static Graph empty(int m) { return Graph(m, {}); }
    static Graph complete(int m) {
        std::vector<std::pair<int, int>> es;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) es.push_back({i, j});
        return Graph(m, std::move(es));
    }

    int m() const { return m_; }
    bool has_edge(int i, int j) const { return i != j && adj_[i].contains(j); }
    SubsetMask neighbors(int i) const { return adj_[i]; }

    /// Edges as (i, j) with i < j, sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i <= m_; ++i)
            for (int j = i + 1; j <= m_; ++j)
                if (adj_[i].contains(j)) out.push_back({i, j});
        return out;
    }

    std::vector<std::pair<int, int>> non_edges() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i <= m_; ++i)
            for (int j = i + 1; j <= m_; ++j)
                if (!adj_[i].contains(j)) out.push_back({i, j});
        return out;
    }

    bool is_clique(SubsetMask s) const {
        for (int i : s.elements())
            if (!(s.without(i)).subset_of(adj_[i])) return false;
        return true;
    }

    /// Edgewise containment on the same vertex set.
    bool subgraph_of(const Graph& other) const {
        if (m_ != other.m_) return false;
        for (int i = 1; i <= m_; ++i)
            if (!adj_[i].subset_of(other.adj_[i])) return false;
        return true;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.m_ == b.m_ && a.adj_ == b.adj_;
    }

private:
    int m_;
    std::vector<SubsetMask> adj_;
};

/// All cliques (including the empty set and singletons) and the
/// inclusion-maximal ones, both sorted by (cardinality, value).
struct CliqueSet {
    std::vector<SubsetMask> all;
    std::vector<SubsetMask> maximal;
};

namespace detail {

// Bron-Kerbosch with pivoting on bitmask vertex sets.
inline void bron_kerbosch(const Graph& g, SubsetMask r, SubsetMask p, SubsetMask x,
                          std::vector<SubsetMask>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Pivot: vertex of p|x maximizing |p & N(u)|; ties to the smallest index.
    int pivot = -1, best = -1;
    for (int u : (p | x).elements()) {
        const int score = (p & g.neighbors(u)).count();
        if (score > best) {
            best = score;
            pivot = u;
        }
    }
    const SubsetMask candidates = p - g.neighbors(pivot);
    for (int v : candidates.elements()) {
        const SubsetMask vm = SubsetMask{}.with(v);
        bron_kerbosch(g, r | vm, p & g.neighbors(v), x & g.neighbors(v), out);
        p = p - vm;
        x = x | vm;
    }
}

} // namespace detail

inline CliqueSet cliques(const Graph& g) {
    CliqueSet cs;
    detail::bron_kerbosch(g, SubsetMask{}, SubsetMask::full(g.m()), SubsetMask{}, cs.maximal);
    std::sort(cs.maximal.begin(), cs.maximal.end());

    // All cliques = downward closure of the maximal ones.
    std::vector<bool> seen(std::size_t{1} << g.m(), false);
    for (SubsetMask mx : cs.maximal) {
        std::uint32_t sub = mx.bits;
        while (true) {
            seen[sub] = true;
            if (sub == 0) break;
            sub = (sub - 1) & mx.bits;
        }
    }
    for (std::uint32_t b = 0; b < seen.size(); ++b)
        if (seen[b]) cs.all.push_back(SubsetMask(b));
    std::sort(cs.all.begin(), cs.all.end());
    return cs;
}

/// True iff every path from A to B meets C (BFS in the graph with C removed).
/// A, B, C must be pairwise disjoint and A, B nonempty.
inline bool separates(const Graph& g, SubsetMask a, SubsetMask b, SubsetMask c) {
    if (a.empty() || b.empty())
        throw InvalidTripleError("separates: A and B must be nonempty");
    if (!(a & b).empty() || !(a & c).empty() || !(b & c).empty())
        throw InvalidTripleError("separates: A, B, C must be pairwise disjoint");
    const SubsetMask allowed = SubsetMask::full(g.m()) - c;
    SubsetMask reached = a & allowed;
    SubsetMask frontier = reached;
    while (!frontier.empty()) {
        SubsetMask next;
        for (int v : frontier.elements()) next = next | (g.neighbors(v) & allowed);
        next = next - reached;
        reached = reached | next;
        frontier = next;
    }
    return (reached & b).empty();
}

} // namespace latgm
