#pragma once

#include <map>
#include <optional>

#include "space.hpp"

namespace linetop {

/// Separation behavior of a single point: the component count of
/// ground minus the point and the classes of the separation relation.
struct SplitProfile {
    PointId point;
    int count;
    Partition classes;

    bool separates(PointId a, PointId b) const { return !classes.same_block(a, b); }
};

namespace detail {

inline void require_ground_point(const Space& s, const VertexSet& ground, PointId x) {
    s.require_in_range(x, "point");
    if (!ground.contains(x)) fail(Errc::NotInGround, "point " + std::to_string(x) + " not in ground");
}

inline void require_connected_ground(const Space& s, const VertexSet& ground) {
    if (components(s, ground, {}).count() != 1)
        fail(Errc::GroundDisconnected, "ground set is not connected");
}

/// Memoizes the per-point removal partitions of one ground set.
class SplitCache {
public:
    SplitCache(const Space& s, const VertexSet& ground) : s_(s), ground_(ground) {}

    const Partition& classes(PointId x) {
        auto it = memo_.find(x);
        if (it != memo_.end()) return it->second;
        Partition p = components(s_, ground_, VertexSet{x});
        return memo_.emplace(x, std::move(p)).first->second;
    }

    /// true when x splits ground into exactly two classes and a, b land in
    /// different ones. False whenever x coincides with a or b.
    bool two_way_separates(PointId x, PointId a, PointId b) {
        const Partition& p = classes(x);
        if (p.count() != 2) return false;
        int ba = p.block_of(a), bb = p.block_of(b);
        return ba >= 0 && bb >= 0 && ba != bb;
    }

    const VertexSet& ground() const { return ground_; }

private:
    const Space& s_;
    VertexSet ground_;
    std::map<PointId, Partition> memo_;
};

}  // namespace detail

/// Number of connected components of ground minus {x}.
inline int split_count(const Space& s, const VertexSet& ground, PointId x) {
    detail::require_ground_point(s, ground, x);
    if (ground.size() == 1) fail(Errc::SingletonGround, "ground consists of x only");
    detail::require_connected_ground(s, ground);
    return static_cast<int>(components(s, ground, VertexSet{x}).count());
}

/// Separation classes at x: a and b are related iff they stay connected
/// after removing x from ground.
inline SplitProfile sim_classes(const Space& s, const VertexSet& ground, PointId x) {
    detail::require_ground_point(s, ground, x);
    if (ground.size() == 1) fail(Errc::SingletonGround, "ground consists of x only");
    detail::require_connected_ground(s, ground);
    Partition p = components(s, ground, VertexSet{x});
    int count = static_cast<int>(p.count());
    return SplitProfile{x, count, std::move(p)};
}

/// Witness that x is locally flat: a basis set through x all of whose
/// ground points two-way separate the pair (a, b).
struct FlatWitness {
    PointId point;
    PointId a;
    PointId b;
    int basis_index;
};

namespace detail {

inline std::optional<FlatWitness> locally_flat_search(const Space& s, SplitCache& cache, PointId x) {
    const VertexSet& ground = cache.ground();
    const Partition& at_x = cache.classes(x);
    if (at_x.count() != 2) return std::nullopt;  // x itself sits in every candidate set

    const auto& basis = s.basis();
    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        if (!basis[bi].contains(x)) continue;
        VertexSet inside = set_intersect(basis[bi], ground);
        bool usable = true;
        for (PointId u : inside)
            if (cache.classes(u).count() != 2) {
                usable = false;
                break;
            }
        if (!usable) continue;
        // Any valid pair is separated by x, so draw candidates from its two sides.
        const VertexSet& side_a = at_x.blocks[0];
        const VertexSet& side_b = at_x.blocks[1];
        for (PointId a : side_a) {
            for (PointId b : side_b) {
                bool all = true;
                for (PointId u : inside)
                    if (!cache.two_way_separates(u, a, b)) {
                        all = false;
                        break;
                    }
                if (all) return FlatWitness{x, a, b, static_cast<int>(bi)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Searches exhaustively for a flatness witness at x; nullopt means not flat.
inline std::optional<FlatWitness> is_locally_flat(const Space& s, const VertexSet& ground, PointId x) {
    detail::require_ground_point(s, ground, x);
    detail::SplitCache cache(s, ground);
    return detail::locally_flat_search(s, cache, x);
}

/// All points of ground without a flatness witness.
inline VertexSet non_flat_set(const Space& s, const VertexSet& ground) {
    detail::require_connected_ground(s, ground);
    detail::SplitCache cache(s, ground);
    std::vector<PointId> out;
    for (PointId x : ground)
        if (!detail::locally_flat_search(s, cache, x)) out.push_back(x);
    return VertexSet(std::move(out));
}

/// The three-way decomposition of a connected set by two splitting points:
/// the far sides of a and b plus the region between them.
struct ThreePartSplit {
    VertexSet a_side;
    PointId a;
    VertexSet middle;
    PointId b;
    VertexSet b_side;
};

/// Computes the split and checks its structural assertions, raising
/// LemmaViolated on any failure (which would indicate a bug: the
/// assertions are theorems in this model).
inline ThreePartSplit verify_three_part_split(const Space& s, const VertexSet& c, PointId a, PointId b) {
    s.require_in_range(a, "point a");
    s.require_in_range(b, "point b");
    if (a == b) fail(Errc::PreconditionViolated, "a and b must differ");
    if (!c.contains(a) || !c.contains(b)) fail(Errc::PreconditionViolated, "a and b must lie in C");
    if (components(s, c, {}).count() != 1) fail(Errc::PreconditionViolated, "C is not connected");
    Partition pa = components(s, c, VertexSet{a});
    Partition pb = components(s, c, VertexSet{b});
    if (pa.count() < 2 || pb.count() < 2)
        fail(Errc::PreconditionViolated, "both points must split C");

    int a1 = pa.block_of(b);
    int b1 = pb.block_of(a);
    VertexSet a_side, b_side;
    for (std::size_t i = 0; i < pa.count(); ++i)
        if (static_cast<int>(i) != a1) a_side = set_union(a_side, pa.blocks[i]);
    for (std::size_t j = 0; j < pb.count(); ++j)
        if (static_cast<int>(j) != b1) b_side = set_union(b_side, pb.blocks[j]);
    VertexSet middle = set_intersect(pa.blocks[static_cast<std::size_t>(a1)],
                                     pb.blocks[static_cast<std::size_t>(b1)]);

    auto bd_in_c = [&](const VertexSet& u) { return set_intersect(boundary(s, u), c); };
    if (bd_in_c(a_side) != VertexSet{a})
        fail(Errc::LemmaViolated, "boundary of a-side is not {a}");
    if (bd_in_c(b_side) != VertexSet{b})
        fail(Errc::LemmaViolated, "boundary of b-side is not {b}");
    if (middle.empty()) {
        // The degenerate case of the finite model: no point fits strictly
        // between two adjacent splitting points.
        if (!s.adjacent(a, b))
            fail(Errc::LemmaViolated, "empty middle with non-adjacent endpoints");
    } else {
        VertexSet expect{a, b};
        if (bd_in_c(middle) != expect)
            fail(Errc::LemmaViolated, "boundary of middle is not {a,b}");
    }

    std::size_t total = a_side.size() + middle.size() + b_side.size() + 2;
    if (total != c.size() || a_side.intersects(middle) || b_side.intersects(middle) ||
        a_side.intersects(b_side) || a_side.contains(a) || a_side.contains(b) ||
        b_side.contains(a) || b_side.contains(b) || middle.contains(a) || middle.contains(b))
        fail(Errc::LemmaViolated, "five-piece union is not a disjoint cover of C");

    return ThreePartSplit{std::move(a_side), a, std::move(middle), b, std::move(b_side)};
}

/// Points of D whose removal separates a from b inside D.
inline VertexSet separation_region(const Space& s, const VertexSet& d, PointId a, PointId b) {
    s.require_in_range(a, "point a");
    s.require_in_range(b, "point b");
    if (!d.contains(a) || !d.contains(b)) fail(Errc::PreconditionViolated, "a and b must lie in D");
    if (components(s, d, {}).count() != 1) fail(Errc::PreconditionViolated, "D is not connected");
    std::vector<PointId> out;
    for (PointId x : d) {
        if (x == a || x == b) continue;
        Partition p = components(s, d, VertexSet{x});
        if (!p.same_block(a, b)) out.push_back(x);
    }
    return VertexSet(std::move(out));
}

}  // namespace linetop
