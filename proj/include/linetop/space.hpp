#pragma once

#include <deque>
#include <span>
#include <utility>

#include "core.hpp"

namespace linetop {

/// How the basis family of a Space was produced.
struct BasisSpec {
    enum class Kind { Balls, Explicit, ShortIntervals };

    Kind kind = Kind::Explicit;
    std::vector<int> radii;        // Balls: one set B(v,r) per vertex v and radius r
    int window = 0;                // ShortIntervals: open id-intervals of span <= window
    std::vector<VertexSet> sets;   // Explicit

    static BasisSpec balls(std::vector<int> r) {
        BasisSpec s;
        s.kind = Kind::Balls;
        s.radii = std::move(r);
        return s;
    }
    static BasisSpec explicit_sets(std::vector<VertexSet> sets) {
        BasisSpec s;
        s.kind = Kind::Explicit;
        s.sets = std::move(sets);
        return s;
    }
    static BasisSpec short_intervals(int window) {
        BasisSpec s;
        s.kind = Kind::ShortIntervals;
        s.window = window;
        return s;
    }
};

/// Finite combinatorial model of a one-dimensional topological structure:
/// a simple graph without isolated vertices plus a covering family of
/// designated neighborhood sets. Immutable after construction.
class Space {
public:
    Space(int points, const std::vector<std::pair<PointId, PointId>>& edge_list,
          std::vector<VertexSet> basis, BasisSpec spec)
        : n_(points), basis_(std::move(basis)), spec_(std::move(spec)) {
        if (points <= 0) fail(Errc::BadParams, "space needs at least one vertex");
        adj_.assign(static_cast<std::size_t>(n_), {});
        std::vector<std::pair<PointId, PointId>> canon;
        canon.reserve(edge_list.size());
        for (auto [u, v] : edge_list) {
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                fail(Errc::OutOfRange, "edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
            if (u == v) fail(Errc::SelfLoop, "self loop at " + std::to_string(u));
            canon.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(canon.begin(), canon.end());
        if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
            fail(Errc::DuplicateEdge, "duplicate edge");
        for (auto [u, v] : canon) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
        for (int v = 0; v < n_; ++v)
            if (adj_[static_cast<std::size_t>(v)].empty())
                fail(Errc::IsolatedVertex, "vertex " + std::to_string(v) + " is isolated");
        edge_count_ = canon.size();

        std::vector<char> covered(static_cast<std::size_t>(n_), 0);
        for (const auto& b : basis_) {
            if (b.empty()) fail(Errc::EmptyBasisSet, "basis set is empty");
            for (PointId v : b) {
                if (v < 0 || v >= n_) fail(Errc::OutOfRange, "basis vertex out of range: " + std::to_string(v));
                covered[static_cast<std::size_t>(v)] = 1;
            }
        }
        for (int v = 0; v < n_; ++v)
            if (!covered[static_cast<std::size_t>(v)])
                fail(Errc::BasisDoesNotCover, "vertex " + std::to_string(v) + " lies in no basis set");
    }

    int point_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    std::span<const PointId> neighbors(PointId v) const {
        return adj_[static_cast<std::size_t>(v)];
    }
    bool adjacent(PointId u, PointId v) const {
        const auto& a = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }
    const std::vector<VertexSet>& basis() const { return basis_; }
    const BasisSpec& basis_spec() const { return spec_; }
    VertexSet vertices() const { return VertexSet::full(n_); }

    /// Edges as ascending (u, v) pairs with u < v.
    std::vector<std::pair<PointId, PointId>> edges() const {
        std::vector<std::pair<PointId, PointId>> out;
        out.reserve(edge_count_);
        for (int u = 0; u < n_; ++u)
            for (PointId v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    void require_in_range(PointId v, const char* what) const {
        if (v < 0 || v >= n_) fail(Errc::OutOfRange, std::string(what) + " out of range: " + std::to_string(v));
    }

private:
    int n_;
    std::vector<std::vector<PointId>> adj_;
    std::size_t edge_count_ = 0;
    std::vector<VertexSet> basis_;
    BasisSpec spec_;
};

namespace detail {

inline VertexSet ball(const std::vector<std::vector<PointId>>& adj, PointId center, int radius) {
    std::vector<PointId> found{center};
    std::vector<int> dist(adj.size(), -1);
    dist[static_cast<std::size_t>(center)] = 0;
    std::deque<PointId> queue{center};
    while (!queue.empty()) {
        PointId v = queue.front();
        queue.pop_front();
        if (dist[static_cast<std::size_t>(v)] == radius) continue;
        for (PointId w : adj[static_cast<std::size_t>(v)]) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                found.push_back(w);
                queue.push_back(w);
            }
        }
    }
    return VertexSet(std::move(found));
}

/// Open id-intervals {z : a < z < b} with 0 < b - a <= window, clipped to [0, n).
inline std::vector<VertexSet> short_interval_sets(int n, int window) {
    if (window < 2) fail(Errc::BadParams, "short-interval window must be at least 2");
    std::vector<VertexSet> out;
    for (int a = -1; a <= n - 2; ++a) {
        for (int b = a + 2; b <= std::min(a + window, n); ++b) {
            std::vector<PointId> ids;
            for (int z = a + 1; z < b; ++z) ids.push_back(z);
            out.emplace_back(std::move(ids));
        }
    }
    return out;
}

}  // namespace detail

/// Validates edges and basis, materializing ball or short-interval bases.
inline Space build_space(int points, const std::vector<std::pair<PointId, PointId>>& edge_list,
                         const BasisSpec& spec) {
    std::vector<VertexSet> basis;
    if (spec.kind == BasisSpec::Kind::Explicit) {
        basis = spec.sets;
    } else if (spec.kind == BasisSpec::Kind::ShortIntervals) {
        basis = detail::short_interval_sets(points, spec.window);
    } else {
        if (spec.radii.empty()) fail(Errc::BadParams, "ball basis needs at least one radius");
        for (int r : spec.radii)
            if (r < 1) fail(Errc::BadParams, "ball radius must be positive");
        // balls need adjacency before the Space exists; its constructor
        // re-validates the same edges
        if (points <= 0) fail(Errc::BadParams, "space needs at least one vertex");
        std::vector<std::vector<PointId>> adj(static_cast<std::size_t>(points));
        for (auto [u, v] : edge_list) {
            if (u < 0 || u >= points || v < 0 || v >= points)
                fail(Errc::OutOfRange, "edge endpoint out of range");
            if (u == v) fail(Errc::SelfLoop, "self loop at " + std::to_string(u));
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nbrs : adj) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        }
        for (int v = 0; v < points; ++v)
            for (int r : spec.radii) basis.push_back(detail::ball(adj, v, r));
    }
    return Space(points, edge_list, std::move(basis), spec);
}

/// Partition of some vertex set into nonempty blocks, ordered by minimum element.
struct Partition {
    std::vector<VertexSet> blocks;

    static Partition of(std::vector<VertexSet> blocks) {
        Partition p;
        p.blocks = std::move(blocks);
        std::vector<std::pair<PointId, int>> index;
        for (std::size_t i = 0; i < p.blocks.size(); ++i)
            for (PointId v : p.blocks[i]) index.emplace_back(v, static_cast<int>(i));
        std::sort(index.begin(), index.end());
        p.ids_.reserve(index.size());
        p.idx_.reserve(index.size());
        for (auto [v, i] : index) {
            p.ids_.push_back(v);
            p.idx_.push_back(i);
        }
        return p;
    }

    std::size_t count() const { return blocks.size(); }

    /// Block index of v, -1 when v is not in the partitioned set.
    int block_of(PointId v) const {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) return -1;
        return idx_[static_cast<std::size_t>(it - ids_.begin())];
    }

    bool same_block(PointId a, PointId b) const {
        int x = block_of(a);
        return x >= 0 && x == block_of(b);
    }

    VertexSet ground() const {
        std::vector<PointId> all(ids_);
        return VertexSet(std::move(all));
    }

private:
    std::vector<PointId> ids_;
    std::vector<int> idx_;
};

/// External neighbors of U: { v not in U : v adjacent to some u in U }.
inline VertexSet boundary(const Space& s, const VertexSet& u) {
    std::vector<char> in(static_cast<std::size_t>(s.point_count()), 0);
    for (PointId v : u) {
        s.require_in_range(v, "boundary vertex");
        in[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<PointId> out;
    for (PointId v : u)
        for (PointId w : s.neighbors(v))
            if (!in[static_cast<std::size_t>(w)]) out.push_back(w);
    return VertexSet(std::move(out));
}

/// Connected components of the subgraph induced on ground minus removed.
inline Partition components(const Space& s, const VertexSet& ground, const VertexSet& removed) {
    std::vector<char> in(static_cast<std::size_t>(s.point_count()), 0);
    for (PointId v : ground) {
        s.require_in_range(v, "ground vertex");
        in[static_cast<std::size_t>(v)] = 1;
    }
    for (PointId v : removed) {
        s.require_in_range(v, "removed vertex");
        if (!in[static_cast<std::size_t>(v)])
            fail(Errc::OutOfRange, "removed vertex " + std::to_string(v) + " not in ground");
        in[static_cast<std::size_t>(v)] = 0;
    }
    std::vector<char> seen(static_cast<std::size_t>(s.point_count()), 0);
    std::vector<VertexSet> blocks;
    for (PointId start : ground) {
        if (!in[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)]) continue;
        std::vector<PointId> block;
        std::deque<PointId> queue{start};
        seen[static_cast<std::size_t>(start)] = 1;
        while (!queue.empty()) {
            PointId v = queue.front();
            queue.pop_front();
            block.push_back(v);
            for (PointId w : s.neighbors(v)) {
                if (in[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
            }
        }
        blocks.emplace_back(std::move(block));
    }
    return Partition::of(std::move(blocks));
}

inline bool is_connected(const Space& s, const VertexSet& ground) {
    return components(s, ground, {}).count() == 1;
}

/// Connected open parts plus a finite residue covering X; parts are the
/// components of the combinatorial interior of X, residue the fringe.
struct CanonicalDecomposition {
    std::vector<VertexSet> open_parts;
    VertexSet residue;
};

inline CanonicalDecomposition canonical_decomposition(const Space& s, const VertexSet& x) {
    std::vector<char> in(static_cast<std::size_t>(s.point_count()), 0);
    for (PointId v : x) {
        s.require_in_range(v, "decomposition vertex");
        in[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<PointId> interior;
    for (PointId v : x) {
        bool inner = true;
        for (PointId w : s.neighbors(v))
            if (!in[static_cast<std::size_t>(w)]) {
                inner = false;
                break;
            }
        if (inner) interior.push_back(v);
    }
    VertexSet interior_set(std::move(interior));
    Partition parts = components(s, interior_set, {});
    CanonicalDecomposition out;
    out.open_parts = parts.blocks;
    out.residue = set_minus(x, interior_set);
    return out;
}

/// Largest boundary size over the basis family (K).
inline int max_basis_boundary(const Space& s) {
    int best = 0;
    for (const auto& b : s.basis()) best = std::max(best, static_cast<int>(boundary(s, b).size()));
    return best;
}

}  // namespace linetop
