#pragma once

#include <functional>

#include "order.hpp"

namespace linetop {

namespace detail {

/// Every point of V is pierced: some basis set's boundary meets V in
/// exactly that point.
inline bool pierceable(const VertexSet& v, const std::vector<VertexSet>& basis_boundaries) {
    for (PointId x : v) {
        bool found = false;
        for (const VertexSet& bd : basis_boundaries) {
            if (!bd.contains(x)) continue;
            VertexSet cut = set_intersect(bd, v);
            if (cut.size() == 1) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

inline std::vector<VertexSet> basis_boundaries(const Space& s) {
    std::vector<VertexSet> out;
    out.reserve(s.basis().size());
    for (const auto& b : s.basis()) out.push_back(boundary(s, b));
    return out;
}

}  // namespace detail

/// Checks the piercing property of one basis set against the whole family.
inline bool basis_set_pierceable(const Space& s, int v_index) {
    if (v_index < 0 || v_index >= static_cast<int>(s.basis().size()))
        fail(Errc::OutOfRange, "basis index " + std::to_string(v_index));
    return detail::pierceable(s.basis()[static_cast<std::size_t>(v_index)], detail::basis_boundaries(s));
}

/// Smallest-index basis subset V of basis[u_index] such that every point
/// of V is pierced by some basis boundary. Requires every basis set to
/// have boundary size at most 2.
inline int pierceable_basis(const Space& s, int u_index) {
    if (u_index < 0 || u_index >= static_cast<int>(s.basis().size()))
        fail(Errc::OutOfRange, "basis index " + std::to_string(u_index));
    if (max_basis_boundary(s) > 2)
        fail(Errc::BoundaryNotTwo, "a basis set has more than two boundary points");
    const auto& basis = s.basis();
    const VertexSet& u = basis[static_cast<std::size_t>(u_index)];
    auto bds = detail::basis_boundaries(s);
    for (std::size_t vi = 0; vi < basis.size(); ++vi) {
        if (!basis[vi].subset_of(u)) continue;
        if (detail::pierceable(basis[vi], bds)) return static_cast<int>(vi);
    }
    fail(Errc::NoPierceableSubset, "no pierceable basis subset of basis set " + std::to_string(u_index));
}

/// Order chart on a small neighborhood of x: a pierceable basis subset
/// whose component around x contains all of x's neighbors and admits a
/// two-way splitting anchor. nullopt when every enclosing basis set fails.
inline std::optional<OrderChart> local_chart(const Space& s, PointId x) {
    s.require_in_range(x, "point");
    const auto& basis = s.basis();
    auto bds = detail::basis_boundaries(s);
    for (std::size_t ui = 0; ui < basis.size(); ++ui) {
        if (!basis[ui].contains(x)) continue;
        for (std::size_t vi = 0; vi < basis.size(); ++vi) {
            if (!basis[vi].contains(x) || !basis[vi].subset_of(basis[ui])) continue;
            if (!detail::pierceable(basis[vi], bds)) continue;
            Partition parts = components(s, basis[vi], {});
            const VertexSet& dom = parts.blocks[static_cast<std::size_t>(parts.block_of(x))];
            bool open_at_x = true;
            for (PointId w : s.neighbors(x))
                if (!dom.contains(w)) {
                    open_at_x = false;
                    break;
                }
            if (!open_at_x) continue;
            PointId anchor = -1;
            for (PointId a : dom)
                if (components(s, dom, VertexSet{a}).count() == 2) {
                    anchor = a;
                    break;
                }
            if (anchor < 0) continue;
            try {
                return order_chart(s, dom, anchor);
            } catch (const Error&) {
                continue;
            }
        }
    }
    return std::nullopt;
}

/// Covering family of local charts plus the points that admit none.
struct Atlas {
    std::vector<OrderChart> charts;
    VertexSet uncovered;
};

/// Greedy cover of ground by local charts, processing uncovered vertices
/// in ascending id; chart overlaps must agree up to a global reversal.
inline Atlas build_atlas(const Space& s, const VertexSet& ground) {
    detail::require_connected_ground(s, ground);
    Atlas atlas;
    VertexSet covered;
    for (PointId v : ground) {
        if (covered.contains(v)) continue;
        std::optional<OrderChart> chart = local_chart(s, v);
        if (chart && !chart->domain.subset_of(ground)) {
            // clip to ground and rebuild around v
            Partition parts = components(s, set_intersect(chart->domain, ground), {});
            int b = parts.block_of(v);
            chart.reset();
            if (b >= 0) {
                try {
                    chart = chart_component(s, parts.blocks[static_cast<std::size_t>(b)]);
                } catch (const Error&) {
                    chart.reset();
                }
            }
        }
        if (!chart) {
            atlas.uncovered.insert(v);
            continue;
        }
        covered = set_union(covered, chart->domain);
        atlas.charts.push_back(std::move(*chart));
    }

    for (std::size_t i = 0; i < atlas.charts.size(); ++i) {
        for (std::size_t j = i + 1; j < atlas.charts.size(); ++j) {
            VertexSet overlap = set_intersect(atlas.charts[i].domain, atlas.charts[j].domain);
            if (overlap.size() < 2) continue;
            std::vector<PointId> order(overlap.ids());
            std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
                return atlas.charts[i].rank(a) < atlas.charts[i].rank(b);
            });
            bool inc = true, dec = true;
            for (std::size_t k = 1; k < order.size(); ++k) {
                if (atlas.charts[j].rank(order[k - 1]) >= atlas.charts[j].rank(order[k])) inc = false;
                if (atlas.charts[j].rank(order[k - 1]) <= atlas.charts[j].rank(order[k])) dec = false;
            }
            if (!inc && !dec)
                fail(Errc::OverlapInconsistent,
                     "charts " + std::to_string(i) + " and " + std::to_string(j) +
                         " disagree on overlap " + overlap.to_string());
        }
    }
    return atlas;
}

/// A cyclic sequence, canonicalized to start at the smallest id with the
/// smaller of its two neighbors second.
struct CyclicOrder {
    std::vector<PointId> cycle;
};

/// Stitches a fully covering atlas into one cyclic order: the covered set
/// must induce a single cycle, and every chart must read off a contiguous
/// arc of it monotonically. nullopt when the structure is not a cycle.
inline std::optional<CyclicOrder> circular_order(const Space& s, const Atlas& atlas) {
    if (!atlas.uncovered.empty())
        fail(Errc::PreconditionViolated, "atlas leaves " + atlas.uncovered.to_string() + " uncovered");
    VertexSet covered;
    for (const auto& chart : atlas.charts) covered = set_union(covered, chart.domain);
    const std::size_t n = covered.size();
    if (n < 3) return std::nullopt;
    for (PointId v : covered) {
        int deg = 0;
        for (PointId w : s.neighbors(v))
            if (covered.contains(w)) ++deg;
        if (deg != 2) return std::nullopt;
    }
    std::vector<PointId> walk;
    walk.reserve(n);
    PointId start = covered.min();
    std::vector<PointId> nbrs;
    for (PointId w : s.neighbors(start))
        if (covered.contains(w)) nbrs.push_back(w);
    walk.push_back(start);
    walk.push_back(std::min(nbrs[0], nbrs[1]));
    while (true) {
        PointId cur = walk.back(), prev = walk[walk.size() - 2];
        PointId next = -1;
        for (PointId w : s.neighbors(cur))
            if (covered.contains(w) && w != prev) next = w;
        if (next == start) break;
        walk.push_back(next);
        if (walk.size() > n) return std::nullopt;  // several cycles
    }
    if (walk.size() != n) return std::nullopt;

    std::vector<int> pos(static_cast<std::size_t>(s.point_count()), -1);
    for (std::size_t i = 0; i < walk.size(); ++i) pos[static_cast<std::size_t>(walk[i])] = static_cast<int>(i);
    const int m = static_cast<int>(n);
    for (const auto& chart : atlas.charts) {
        int dir = 0;
        for (std::size_t r = 1; r < chart.by_rank.size(); ++r) {
            int a = pos[static_cast<std::size_t>(chart.by_rank[r - 1])];
            int b = pos[static_cast<std::size_t>(chart.by_rank[r])];
            int step;
            if ((a + 1) % m == b) step = 1;
            else if ((b + 1) % m == a) step = -1;
            else return std::nullopt;  // chart is not an arc of the cycle
            if (dir == 0) dir = step;
            else if (dir != step) return std::nullopt;
        }
    }
    return CyclicOrder{std::move(walk)};
}

enum class Direction { Increasing, Decreasing, Constant };

inline const char* direction_name(Direction d) {
    switch (d) {
        case Direction::Increasing: return "increasing";
        case Direction::Decreasing: return "decreasing";
        case Direction::Constant: return "constant";
    }
    return "unknown";
}

/// Piecewise-monotone structure of a map between two charts: the minimal
/// breakpoints where the rank direction turns, and the closed monotone
/// rank segments between them (consecutive segments share a breakpoint).
struct MonotoneReport {
    struct Segment {
        int lo;
        int hi;
        Direction dir;
    };
    VertexSet breakpoints;
    std::vector<Segment> segments;
};

inline MonotoneReport monotone_decomposition(const Space&, const std::function<PointId(PointId)>& f,
                                             const OrderChart& dom, const OrderChart& cod) {
    const int n = static_cast<int>(dom.by_rank.size());
    std::vector<int> y(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        PointId image = f(dom.by_rank[static_cast<std::size_t>(r)]);
        if (!cod.contains(image))
            fail(Errc::ValueOutsideCodomain,
                 "f(" + std::to_string(dom.by_rank[static_cast<std::size_t>(r)]) + ") = " +
                     std::to_string(image) + " is outside the codomain chart");
        y[static_cast<std::size_t>(r)] = cod.rank(image);
    }

    MonotoneReport report;
    int lo = 0;
    bool up = false, down = false;
    auto flush = [&](int hi) {
        Direction dir = up ? Direction::Increasing : (down ? Direction::Decreasing : Direction::Constant);
        report.segments.push_back({lo, hi, dir});
    };
    for (int r = 0; r + 1 < n; ++r) {
        int delta = y[static_cast<std::size_t>(r + 1)] - y[static_cast<std::size_t>(r)];
        if ((delta > 0 && down) || (delta < 0 && up)) {
            flush(r);
            report.breakpoints.insert(dom.by_rank[static_cast<std::size_t>(r)]);
            lo = r;
            up = down = false;
        }
        if (delta > 0) up = true;
        if (delta < 0) down = true;
    }
    flush(n - 1);
    return report;
}

}  // namespace linetop
