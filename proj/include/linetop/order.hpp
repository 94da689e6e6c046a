#pragma once

#include <random>

#include "splitting.hpp"

namespace linetop {

/// The region strictly between x and y inside an ambient set: the
/// intersection of the component of ambient\{x} holding y with the
/// component of ambient\{y} holding x.
struct Interval {
    VertexSet ambient;
    PointId x;
    PointId y;
    VertexSet members;
};

inline Interval interval(const Space& s, const VertexSet& ambient, PointId x, PointId y) {
    s.require_in_range(x, "point x");
    s.require_in_range(y, "point y");
    if (!ambient.contains(x) || !ambient.contains(y))
        fail(Errc::PreconditionViolated, "interval endpoints must lie in the ambient set");
    if (components(s, ambient, {}).count() != 1)
        fail(Errc::PreconditionViolated, "ambient set is not connected");
    if (x == y) return Interval{ambient, x, y, {}};

    Partition px = components(s, ambient, VertexSet{x});
    Partition py = components(s, ambient, VertexSet{y});
    const VertexSet& x1 = px.blocks[static_cast<std::size_t>(px.block_of(y))];
    const VertexSet& y1 = py.blocks[static_cast<std::size_t>(py.block_of(x))];
    VertexSet members = set_intersect(x1, y1);

    VertexSet bd = set_intersect(boundary(s, members), ambient);
    VertexSet endpoints{x, y};
    if (!bd.subset_of(endpoints))
        fail(Errc::LemmaViolated, "interval boundary leaks past its endpoints");
    if (px.count() >= 2 && py.count() >= 2 && !s.adjacent(x, y)) {
        if (members.empty())
            fail(Errc::LemmaViolated, "interval between non-adjacent splitting points is empty");
        if (components(s, members, {}).count() != 1)
            fail(Errc::LemmaViolated, "interval between splitting points is disconnected");
    }
    return Interval{ambient, x, y, std::move(members)};
}

/// A connected domain carrying the total order reconstructed from the
/// separation relation around an anchor point.
struct OrderChart {
    VertexSet domain;
    PointId anchor = -1;
    std::vector<PointId> by_rank;  // by_rank[r] = vertex with rank r

    int rank(PointId v) const {
        int i = domain.index_of(v);
        if (i < 0) fail(Errc::OutOfRange, "vertex " + std::to_string(v) + " not in chart domain");
        return rank_of_[static_cast<std::size_t>(i)];
    }
    bool contains(PointId v) const { return domain.contains(v); }

    static OrderChart make(VertexSet domain, PointId anchor, std::vector<PointId> by_rank) {
        OrderChart c;
        c.domain = std::move(domain);
        c.anchor = anchor;
        c.by_rank = std::move(by_rank);
        if (c.by_rank.size() != c.domain.size())
            fail(Errc::PreconditionViolated, "rank list is not a permutation of the domain");
        c.rank_of_.assign(c.domain.size(), -1);
        for (std::size_t r = 0; r < c.by_rank.size(); ++r) {
            int i = c.domain.index_of(c.by_rank[r]);
            if (i < 0 || c.rank_of_[static_cast<std::size_t>(i)] != -1)
                fail(Errc::PreconditionViolated, "rank list is not a permutation of the domain");
            c.rank_of_[static_cast<std::size_t>(i)] = static_cast<int>(r);
        }
        return c;
    }

private:
    std::vector<int> rank_of_;
};

/// Rank-by-id chart for domains too small to carry an anchor.
inline OrderChart trivial_chart(const VertexSet& d) {
    if (d.empty()) fail(Errc::PreconditionViolated, "empty chart domain");
    std::vector<PointId> by_rank(d.ids());
    return OrderChart::make(d, d.min(), std::move(by_rank));
}

/// Builds the order around anchor a: the side of D\{a} holding the
/// smallest id becomes the negative side; on the positive side x < y
/// iff x separates a from y, mirrored on the negative side. The
/// comparison is verified to be a strict total order before returning.
inline OrderChart order_chart(const Space& s, const VertexSet& d, PointId a) {
    s.require_in_range(a, "anchor");
    if (!d.contains(a)) fail(Errc::PreconditionViolated, "anchor not in domain");
    if (components(s, d, {}).count() != 1) fail(Errc::PreconditionViolated, "domain not connected");
    Partition sides = components(s, d, VertexSet{a});
    if (sides.count() != 2)
        throw AnchorError(static_cast<int>(sides.count()),
                          "anchor " + std::to_string(a) + " splits domain into " +
                              std::to_string(sides.count()) + " components");

    const int n = static_cast<int>(d.size());
    const auto& ids = d.ids();
    std::vector<Partition> cut;
    cut.reserve(static_cast<std::size_t>(n));
    for (PointId v : ids) cut.push_back(components(s, d, VertexSet{v}));

    // blocks are min-ordered, so blocks[0] is the negative side
    auto side = [&](PointId v) -> int {
        if (v == a) return 0;
        return sides.block_of(v) == 0 ? -1 : +1;
    };
    auto less = [&](int i, int j) -> bool {
        PointId x = ids[static_cast<std::size_t>(i)], y = ids[static_cast<std::size_t>(j)];
        if (x == y) return false;
        int sx = side(x), sy = side(y);
        if (sx < 0 && sy < 0) return !cut[static_cast<std::size_t>(j)].same_block(a, x);
        if (sx > 0 && sy > 0) return !cut[static_cast<std::size_t>(i)].same_block(a, y);
        if (sx < 0) return true;   // y on positive side or the anchor
        if (sy > 0) return true;   // x is the anchor
        return false;
    };

    std::vector<int> below(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool lij = less(i, j), lji = less(j, i);
            if (lij == lji)
                fail(Errc::NotTotalOrder, "comparison is not trichotomous at " +
                                              std::to_string(ids[static_cast<std::size_t>(i)]) + "," +
                                              std::to_string(ids[static_cast<std::size_t>(j)]));
            ++below[static_cast<std::size_t>(lij ? j : i)];
        }
    }
    std::vector<PointId> by_rank(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int r = below[static_cast<std::size_t>(i)];
        if (by_rank[static_cast<std::size_t>(r)] != -1)
            fail(Errc::NotTotalOrder, "comparison admits tied ranks");
        by_rank[static_cast<std::size_t>(r)] = ids[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && less(i, j) != (below[static_cast<std::size_t>(i)] < below[static_cast<std::size_t>(j)]))
                fail(Errc::NotTotalOrder, "comparison is not transitive");

    return OrderChart::make(d, a, std::move(by_rank));
}

struct CheckReport {
    std::string name;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// For every rank pair c < d the interval between them must be exactly
/// the set of intermediate ranks.
inline CheckReport check_subinterval_law(const Space& s, const OrderChart& chart) {
    CheckReport report{"subinterval_law", {}};
    const int n = static_cast<int>(chart.by_rank.size());
    for (int rc = 0; rc < n; ++rc) {
        for (int rd = rc + 1; rd < n; ++rd) {
            PointId c = chart.by_rank[static_cast<std::size_t>(rc)];
            PointId d = chart.by_rank[static_cast<std::size_t>(rd)];
            std::vector<PointId> between(chart.by_rank.begin() + rc + 1, chart.by_rank.begin() + rd);
            VertexSet expected(std::move(between));
            try {
                VertexSet got = interval(s, chart.domain, c, d).members;
                if (got != expected)
                    report.violations.push_back("I(" + std::to_string(c) + "," + std::to_string(d) +
                                                ") = " + got.to_string() + ", expected " +
                                                expected.to_string());
            } catch (const Error& e) {
                report.violations.push_back("I(" + std::to_string(c) + "," + std::to_string(d) +
                                            ") failed: " + e.what());
            }
        }
    }
    return report;
}

/// Basis sets inside the domain must be rank-contiguous, and every
/// interior rank range must arise as an interval of two domain points.
inline CheckReport check_order_topology(const Space& s, const OrderChart& chart) {
    CheckReport report{"order_topology", {}};
    const int n = static_cast<int>(chart.by_rank.size());
    const auto& basis = s.basis();
    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        if (!basis[bi].subset_of(chart.domain)) continue;
        int lo = n, hi = -1;
        for (PointId v : basis[bi]) {
            int r = chart.rank(v);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        if (hi - lo + 1 != static_cast<int>(basis[bi].size()))
            report.violations.push_back("basis set " + std::to_string(bi) + " = " +
                                        basis[bi].to_string() + " is not rank-contiguous");
    }
    for (int lo = 1; lo + 1 < n; ++lo) {
        for (int hi = lo; hi + 1 < n; ++hi) {
            PointId c = chart.by_rank[static_cast<std::size_t>(lo - 1)];
            PointId d = chart.by_rank[static_cast<std::size_t>(hi + 1)];
            std::vector<PointId> range(chart.by_rank.begin() + lo, chart.by_rank.begin() + hi + 1);
            VertexSet expected(std::move(range));
            try {
                VertexSet got = interval(s, chart.domain, c, d).members;
                if (got != expected)
                    report.violations.push_back("rank range [" + std::to_string(lo) + "," +
                                                std::to_string(hi) + "] is not I(" + std::to_string(c) +
                                                "," + std::to_string(d) + ")");
            } catch (const Error& e) {
                report.violations.push_back("rank range [" + std::to_string(lo) + "," +
                                            std::to_string(hi) + "] check failed: " + e.what());
            }
        }
    }
    return report;
}

/// Chart for a connected component: smallest-id anchor that splits it
/// into exactly two pieces; id order when the component is too small.
inline OrderChart chart_component(const Space& s, const VertexSet& comp) {
    if (comp.empty()) fail(Errc::PreconditionViolated, "empty component");
    if (comp.size() <= 2) return trivial_chart(comp);
    for (PointId a : comp) {
        if (components(s, comp, VertexSet{a}).count() == 2) return order_chart(s, comp, a);
    }
    fail(Errc::ComponentNotOrderable,
         "component " + comp.to_string() + " has no two-way splitting anchor");
}

/// The main decomposition: drop the non-flat points, chart every residual
/// component, and verify the interval and topology laws on each chart.
struct Decomposition {
    VertexSet removed;
    std::vector<OrderChart> components;
};

inline Decomposition decompose(const Space& s, const VertexSet& ground) {
    detail::require_connected_ground(s, ground);
    Decomposition out;
    out.removed = non_flat_set(s, ground);
    VertexSet rest = set_minus(ground, out.removed);
    if (rest.empty()) return out;
    Partition comps = components(s, rest, {});
    for (const VertexSet& comp : comps.blocks) {
        OrderChart chart;
        try {
            chart = chart_component(s, comp);
        } catch (const Error& e) {
            fail(Errc::ComponentNotOrderable,
                 "component " + comp.to_string() + " failed chart construction: " + e.what());
        }
        CheckReport law = check_subinterval_law(s, chart);
        CheckReport topo = check_order_topology(s, chart);
        if (!law.ok() || !topo.ok())
            fail(Errc::ComponentNotOrderable, "component " + comp.to_string() + " fails " +
                                                  (law.ok() ? topo.name : law.name));
        out.components.push_back(std::move(chart));
    }
    return out;
}

/// Connected subsets of an entirely locally flat connected set have at
/// most two boundary points inside it. Exhaustive for |D| <= 12, sampled
/// otherwise; F = D and all singletons are always included.
inline CheckReport boundary_pair_check(const Space& s, const VertexSet& d, int samples = 200,
                                       std::uint64_t seed = 0) {
    CheckReport report{"boundary_pair", {}};
    if (components(s, d, {}).count() != 1) fail(Errc::PreconditionViolated, "D is not connected");
    {
        detail::SplitCache cache(s, s.vertices());
        for (PointId x : d)
            if (!detail::locally_flat_search(s, cache, x))
                fail(Errc::PreconditionViolated, "D contains the non-flat point " + std::to_string(x));
    }

    auto check = [&](const VertexSet& f) {
        if (f.empty()) return;
        VertexSet inner = set_intersect(boundary(s, f), d);
        if (inner.size() > 2)
            report.violations.push_back("connected F = " + f.to_string() + " has inner boundary " +
                                        inner.to_string());
    };

    check(d);
    for (PointId v : d) check(VertexSet{v});

    const auto& ids = d.ids();
    if (d.size() <= 12) {
        const std::size_t total = static_cast<std::size_t>(1) << d.size();
        for (std::size_t mask = 1; mask < total; ++mask) {
            std::vector<PointId> pick;
            for (std::size_t i = 0; i < d.size(); ++i)
                if (mask & (static_cast<std::size_t>(1) << i)) pick.push_back(ids[i]);
            VertexSet f(std::move(pick));
            if (components(s, f, {}).count() == 1) check(f);
        }
    } else {
        std::mt19937_64 rng(seed);
        for (int it = 0; it < samples; ++it) {
            PointId start = ids[static_cast<std::size_t>(rng() % ids.size())];
            std::size_t want = 1 + static_cast<std::size_t>(rng() % ids.size());
            VertexSet f{start};
            // random connected growth inside d
            while (f.size() < want) {
                std::vector<PointId> fringe;
                for (PointId v : f)
                    for (PointId w : s.neighbors(v))
                        if (d.contains(w) && !f.contains(w)) fringe.push_back(w);
                if (fringe.empty()) break;
                std::sort(fringe.begin(), fringe.end());
                fringe.erase(std::unique(fringe.begin(), fringe.end()), fringe.end());
                f.insert(fringe[static_cast<std::size_t>(rng() % fringe.size())]);
            }
            check(f);
        }
    }
    return report;
}

}  // namespace linetop
