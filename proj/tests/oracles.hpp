#pragma once

// Independent reference implementations used only to cross-check the
// library: union-find components, matrix-based reachability, the
// permutation oracle for betweenness and a brute-force breakpoint search.

#include <functional>
#include <map>
#include <numeric>
#include <random>

#include <linetop/generators.hpp>

namespace oracles {

using linetop::BetweennessRelation;
using linetop::PointId;
using linetop::Space;
using linetop::VertexSet;

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

/// Components of ground minus removed via union-find over the edges.
inline std::vector<VertexSet> uf_components(const Space& s, const VertexSet& ground,
                                            const VertexSet& removed) {
    VertexSet live = linetop::set_minus(ground, removed);
    UnionFind uf(s.point_count());
    for (auto [u, v] : s.edges())
        if (live.contains(u) && live.contains(v)) uf.unite(u, v);
    std::map<int, std::vector<PointId>> buckets;
    for (PointId v : live) buckets[uf.find(v)].push_back(v);
    std::vector<VertexSet> blocks;
    for (auto& [root, ids] : buckets) blocks.emplace_back(std::move(ids));
    std::sort(blocks.begin(), blocks.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.min() < b.min(); });
    return blocks;
}

/// Recursive matrix-walk reachability in ground minus {removed}.
inline bool reachable(const Space& s, const VertexSet& ground, PointId removed, PointId from,
                      PointId to) {
    const int n = s.point_count();
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                       std::vector<char>(static_cast<std::size_t>(n), 0));
    for (auto [u, v] : s.edges())
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
            adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::function<bool(PointId)> walk = [&](PointId at) -> bool {
        if (at == to) return true;
        seen[static_cast<std::size_t>(at)] = 1;
        for (PointId next = 0; next < n; ++next) {
            if (!adj[static_cast<std::size_t>(at)][static_cast<std::size_t>(next)]) continue;
            if (next == removed || seen[static_cast<std::size_t>(next)] || !ground.contains(next))
                continue;
            if (walk(next)) return true;
        }
        return false;
    };
    if (from == removed || to == removed || !ground.contains(from) || !ground.contains(to))
        return false;
    return walk(from);
}

/// All permutations of 0..n-1 whose betweenness equals rel.
inline std::vector<std::vector<PointId>> realizing_orders(const BetweennessRelation& rel) {
    std::vector<PointId> perm(static_cast<std::size_t>(rel.points()));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<PointId>> found;
    do {
        if (linetop::betweenness_of_order(perm) == rel) found.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

/// Smallest number of interior cuts such that every closed piece of the
/// rank sequence is monotone (non-strict).
inline int min_breakpoints(const std::vector<int>& y) {
    const int n = static_cast<int>(y.size());
    if (n <= 2) return 0;
    auto monotone = [&](int lo, int hi) {
        bool up = false, down = false;
        for (int r = lo; r < hi; ++r) {
            if (y[static_cast<std::size_t>(r + 1)] > y[static_cast<std::size_t>(r)]) up = true;
            if (y[static_cast<std::size_t>(r + 1)] < y[static_cast<std::size_t>(r)]) down = true;
        }
        return !(up && down);
    };
    const int interior = n - 2;
    for (int k = 0; k <= interior; ++k) {
        // every k-subset of cut positions 1..n-2
        std::vector<int> cut(static_cast<std::size_t>(k));
        std::function<bool(int, int)> pick = [&](int from, int at) -> bool {
            if (at == k) {
                int lo = 0;
                for (int c : cut) {
                    if (!monotone(lo, c)) return false;
                    lo = c;
                }
                return monotone(lo, n - 1);
            }
            for (int p = from; p <= interior; ++p) {
                cut[static_cast<std::size_t>(at)] = p;
                if (pick(p + 1, at + 1)) return true;
            }
            return false;
        };
        if (pick(1, 0)) return k;
    }
    return interior;
}

/// Deterministic connected subset for property sampling in tests.
inline VertexSet grow_connected(const Space& s, const VertexSet& ground, std::mt19937_64& rng) {
    const auto& ids = ground.ids();
    VertexSet out{ids[static_cast<std::size_t>(rng() % ids.size())]};
    std::size_t want = 1 + static_cast<std::size_t>(rng() % ids.size());
    while (out.size() < want) {
        std::vector<PointId> fringe;
        for (PointId v : out)
            for (PointId w : s.neighbors(v))
                if (ground.contains(w) && !out.contains(w)) fringe.push_back(w);
        if (fringe.empty()) break;
        std::sort(fringe.begin(), fringe.end());
        fringe.erase(std::unique(fringe.begin(), fringe.end()), fringe.end());
        out.insert(fringe[static_cast<std::size_t>(rng() % fringe.size())]);
    }
    return out;
}

inline VertexSet random_subset(const VertexSet& ground, std::mt19937_64& rng) {
    std::vector<PointId> pick;
    for (PointId v : ground)
        if (rng() % 2) pick.push_back(v);
    return VertexSet(std::move(pick));
}

}  // namespace oracles
