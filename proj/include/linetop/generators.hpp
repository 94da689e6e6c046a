#pragma once

#include <array>
#include <random>
#include <set>

#include "order.hpp"

namespace linetop {

/// Strict betweenness triples (x, y, z): z lies strictly between x and y.
/// Stored canonically with x < y; symmetric in (x, y) by construction.
class BetweennessRelation {
public:
    BetweennessRelation() = default;
    BetweennessRelation(int points, const std::vector<std::array<PointId, 3>>& triples) : n_(points) {
        if (points < 0) fail(Errc::BadParams, "negative point count");
        for (auto [x, y, z] : triples) {
            if (x < 0 || x >= n_ || y < 0 || y >= n_ || z < 0 || z >= n_)
                fail(Errc::OutOfRange, "betweenness triple out of range");
            if (x == y || z == x || z == y)
                fail(Errc::BadParams, "betweenness is irreflexive: bad triple (" + std::to_string(x) +
                                          "," + std::to_string(y) + "," + std::to_string(z) + ")");
            triples_.insert({std::min(x, y), std::max(x, y), z});
        }
    }

    int points() const { return n_; }
    bool empty() const { return triples_.empty(); }
    std::size_t size() const { return triples_.size(); }
    bool contains(PointId x, PointId y, PointId z) const {
        return triples_.count({std::min(x, y), std::max(x, y), z}) > 0;
    }
    const std::set<std::array<PointId, 3>>& triples() const { return triples_; }

    friend bool operator==(const BetweennessRelation&, const BetweennessRelation&) = default;

private:
    int n_ = 0;
    std::set<std::array<PointId, 3>> triples_;
};

/// Betweenness relation of a total order given as the point sequence.
inline BetweennessRelation betweenness_of_order(const std::vector<PointId>& order) {
    int n = static_cast<int>(order.size());
    std::vector<std::array<PointId, 3>> triples;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = i + 1; k < j; ++k) triples.push_back({order[i], order[j], order[k]});
    return BetweennessRelation(n, triples);
}

enum class StandardKind { Path, Cycle, Star, Theta, RandomTree };

inline StandardKind standard_kind_from_name(const std::string& name) {
    if (name == "path") return StandardKind::Path;
    if (name == "cycle") return StandardKind::Cycle;
    if (name == "star") return StandardKind::Star;
    if (name == "theta") return StandardKind::Theta;
    if (name == "random_tree") return StandardKind::RandomTree;
    fail(Errc::BadParams, "unknown fixture kind: " + name);
}

struct StandardParams {
    int n = 0;
    int arms = 0;
    int len = 0;
    std::uint64_t seed = 0;
};

/// Theta graph: branch vertices 0 and 1 joined by three internally
/// disjoint paths with the given edge counts.
inline Space gen_theta(int l1, int l2, int l3, const std::vector<int>& radii) {
    if (l1 < 2 || l2 < 2 || l3 < 2) fail(Errc::BadParams, "theta paths need length >= 2");
    std::vector<std::pair<PointId, PointId>> edges;
    PointId next = 2;
    for (int len : {l1, l2, l3}) {
        PointId prev = 0;
        for (int i = 0; i + 1 < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    return build_space(next, edges, BasisSpec::balls(radii));
}

namespace detail {

inline std::vector<std::pair<PointId, PointId>> prufer_tree(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<PointId> code(static_cast<std::size_t>(std::max(0, n - 2)));
    for (auto& c : code) c = static_cast<PointId>(rng() % static_cast<std::uint64_t>(n));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (PointId c : code) ++degree[static_cast<std::size_t>(c)];
    std::set<PointId> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    std::vector<std::pair<PointId, PointId>> edges;
    for (PointId c : code) {
        PointId leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, c);
        if (--degree[static_cast<std::size_t>(c)] == 1) leaves.insert(c);
    }
    PointId u = *leaves.begin();
    PointId v = *std::next(leaves.begin());
    edges.emplace_back(u, v);
    return edges;
}

}  // namespace detail

/// Deterministic fixture builder with a ball basis of the given radii.
inline Space gen_standard(StandardKind kind, const StandardParams& params, const std::vector<int>& radii) {
    std::vector<std::pair<PointId, PointId>> edges;
    int n = 0;
    switch (kind) {
        case StandardKind::Path:
            if (params.n < 3) fail(Errc::BadParams, "path needs n >= 3");
            n = params.n;
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case StandardKind::Cycle:
            if (params.n < 3) fail(Errc::BadParams, "cycle needs n >= 3");
            n = params.n;
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n - 1, 0);
            break;
        case StandardKind::Star: {
            if (params.arms < 3 || params.len < 1) fail(Errc::BadParams, "star needs arms >= 3, len >= 1");
            n = 1 + params.arms * params.len;
            for (int arm = 0; arm < params.arms; ++arm) {
                PointId prev = 0;
                for (int i = 0; i < params.len; ++i) {
                    PointId v = 1 + arm * params.len + i;
                    edges.emplace_back(prev, v);
                    prev = v;
                }
            }
            break;
        }
        case StandardKind::Theta: {
            int len = params.len > 0 ? params.len : 2;
            return gen_theta(len, len, len, radii);
        }
        case StandardKind::RandomTree:
            if (params.n < 2) fail(Errc::BadParams, "random tree needs n >= 2");
            n = params.n;
            edges = detail::prufer_tree(n, params.seed);
            break;
    }
    return build_space(n, edges, BasisSpec::balls(radii));
}

/// Path space whose basis consists of the short open id-intervals of
/// span at most `window`.
inline Space restricted_interval_structure(int n, int window) {
    if (window < 1) fail(Errc::BadParams, "window must be positive");
    if (window < 2) fail(Errc::BadParams, "window 1 produces only empty basis sets");
    if (n < 2 * window + 2) fail(Errc::BadParams, "need n >= 2*window + 2");
    std::vector<std::pair<PointId, PointId>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_space(n, edges, BasisSpec::short_intervals(window));
}

/// Decodes a betweenness relation into a total order: the separation
/// relation at x is the complement of "between", the smallest point that
/// splits the rest into two classes anchors the five-case order, and the
/// result must reproduce the relation exactly. Returns the path space on
/// the recovered order together with its chart.
inline std::pair<Space, OrderChart> from_betweenness(const BetweennessRelation& rel) {
    const int n = rel.points();
    if (n < 3) fail(Errc::BadParams, "betweenness decoding needs at least 3 points");
    if (rel.empty()) fail(Errc::BadParams, "betweenness relation is empty");

    // anchor: smallest x whose complement-of-between relation is an
    // equivalence with exactly two classes
    PointId anchor = -1;
    std::vector<VertexSet> sides;
    for (PointId x = 0; x < n && anchor < 0; ++x) {
        std::vector<int> cls(static_cast<std::size_t>(n), -1);
        int classes = 0;
        for (PointId v = 0; v < n; ++v) {
            if (v == x || cls[static_cast<std::size_t>(v)] >= 0) continue;
            // flood the ~x class of v along pairs not separated by x
            std::vector<PointId> stack{v};
            cls[static_cast<std::size_t>(v)] = classes;
            while (!stack.empty()) {
                PointId a = stack.back();
                stack.pop_back();
                for (PointId b = 0; b < n; ++b) {
                    if (b == x || cls[static_cast<std::size_t>(b)] >= 0 || rel.contains(a, b, x)) continue;
                    cls[static_cast<std::size_t>(b)] = classes;
                    stack.push_back(b);
                }
            }
            ++classes;
        }
        if (classes != 2) continue;
        bool consistent = true;
        for (PointId a = 0; a < n && consistent; ++a) {
            if (a == x) continue;
            for (PointId b = a + 1; b < n && consistent; ++b) {
                if (b == x) continue;
                bool same = cls[static_cast<std::size_t>(a)] == cls[static_cast<std::size_t>(b)];
                if (same == rel.contains(a, b, x)) consistent = false;
            }
        }
        if (!consistent) continue;
        anchor = x;
        std::vector<PointId> s0, s1;
        for (PointId v = 0; v < n; ++v) {
            if (v == x) continue;
            (cls[static_cast<std::size_t>(v)] == 0 ? s0 : s1).push_back(v);
        }
        sides = {VertexSet(std::move(s0)), VertexSet(std::move(s1))};
    }
    if (anchor < 0)
        fail(Errc::NotBetweennessRealizable, "no point splits the relation into two classes");

    const VertexSet& neg = sides[0].min() < sides[1].min() ? sides[0] : sides[1];
    auto side = [&](PointId v) -> int {
        if (v == anchor) return 0;
        return neg.contains(v) ? -1 : +1;
    };
    auto less = [&](PointId x, PointId y) -> bool {
        if (x == y) return false;
        int sx = side(x), sy = side(y);
        if (sx < 0 && sy < 0) return rel.contains(anchor, x, y);  // y between anchor and x
        if (sx > 0 && sy > 0) return rel.contains(anchor, y, x);  // x between anchor and y
        if (sx < 0) return true;
        if (sy > 0) return true;
        return false;
    };

    std::vector<int> below(static_cast<std::size_t>(n), 0);
    for (PointId x = 0; x < n; ++x)
        for (PointId y = x + 1; y < n; ++y) {
            bool lxy = less(x, y), lyx = less(y, x);
            if (lxy == lyx) fail(Errc::NotBetweennessRealizable, "decoded comparison is not total");
            ++below[static_cast<std::size_t>(lxy ? y : x)];
        }
    std::vector<PointId> by_rank(static_cast<std::size_t>(n), -1);
    for (PointId v = 0; v < n; ++v) {
        int r = below[static_cast<std::size_t>(v)];
        if (by_rank[static_cast<std::size_t>(r)] != -1)
            fail(Errc::NotBetweennessRealizable, "decoded comparison admits ties");
        by_rank[static_cast<std::size_t>(r)] = v;
    }
    for (PointId x = 0; x < n; ++x)
        for (PointId y = 0; y < n; ++y)
            if (x != y && less(x, y) != (below[static_cast<std::size_t>(x)] < below[static_cast<std::size_t>(y)]))
                fail(Errc::NotBetweennessRealizable, "decoded comparison is not transitive");

    if (betweenness_of_order(by_rank) != rel)
        fail(Errc::NotBetweennessRealizable, "recovered order does not reproduce the relation");

    std::vector<std::pair<PointId, PointId>> edges;
    for (int r = 0; r + 1 < n; ++r)
        edges.emplace_back(by_rank[static_cast<std::size_t>(r)], by_rank[static_cast<std::size_t>(r + 1)]);
    Space space = build_space(n, edges, BasisSpec::balls({1}));
    OrderChart chart = OrderChart::make(space.vertices(), anchor, std::move(by_rank));
    return {std::move(space), std::move(chart)};
}

}  // namespace linetop
