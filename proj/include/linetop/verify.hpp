#pragma once

#include "atlas.hpp"
#include "bounds.hpp"
#include "json_io.hpp"

namespace linetop {

namespace detail {

/// Grows a random connected subset of ground; deterministic given rng state.
inline VertexSet random_connected_subset(const Space& s, const VertexSet& ground, std::mt19937_64& rng) {
    const auto& ids = ground.ids();
    PointId start = ids[static_cast<std::size_t>(rng() % ids.size())];
    std::size_t want = 1 + static_cast<std::size_t>(rng() % ids.size());
    VertexSet out{start};
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

}  // namespace detail

struct SuiteResult {
    Json payload;
    std::vector<std::string> violations;
};

/// Structural lemma checks: separation classes, flat splitting behavior,
/// three-part splits, disjointness of same-boundary connected sets,
/// canonical decompositions, intervals and separation regions.
inline SuiteResult verify_lemmas(const Space& s, std::uint64_t seed, int samples) {
    SuiteResult res;
    const VertexSet ground = s.vertices();
    detail::require_connected_ground(s, ground);
    std::mt19937_64 rng(seed);
    auto note = [&](const std::string& v) { res.violations.push_back(v); };

    // separation classes partition the rest and never split an edge
    for (PointId x : ground) {
        SplitProfile profile = sim_classes(s, ground, x);
        std::size_t total = 0;
        for (const auto& block : profile.classes.blocks) total += block.size();
        if (total != ground.size() - 1 || profile.count != static_cast<int>(profile.classes.count()))
            note("classes at " + std::to_string(x) + " do not partition the rest");
        for (auto [u, v] : s.edges())
            if (u != x && v != x && !profile.classes.same_block(u, v))
                note("edge " + std::to_string(u) + "-" + std::to_string(v) +
                     " split by classes at " + std::to_string(x));
    }

    // flat points split every connected sub-ground they split at all into two
    VertexSet flats = set_minus(ground, non_flat_set(s, ground));
    for (PointId x : flats)
        if (split_count(s, ground, x) != 2)
            note("flat point " + std::to_string(x) + " does not split the ground into two");
    for (int it = 0; it < samples; ++it) {
        VertexSet d = detail::random_connected_subset(s, ground, rng);
        if (d.size() < 2) continue;
        for (PointId x : flats) {
            if (!d.contains(x)) continue;
            int c = static_cast<int>(components(s, d, VertexSet{x}).count());
            if (c > 2)
                note("flat point " + std::to_string(x) + " splits " + d.to_string() + " into " +
                     std::to_string(c));
        }
    }

    // three-part split assertions over splitting pairs
    std::vector<PointId> splitting;
    for (PointId x : ground)
        if (split_count(s, ground, x) >= 2) splitting.push_back(x);
    int budget = samples;
    for (std::size_t i = 0; i < splitting.size() && budget > 0; ++i) {
        for (std::size_t j = i + 1; j < splitting.size() && budget > 0; ++j, --budget) {
            try {
                verify_three_part_split(s, ground, splitting[i], splitting[j]);
            } catch (const Error& e) {
                if (e.code() == Errc::LemmaViolated)
                    note("three-part split at (" + std::to_string(splitting[i]) + "," +
                         std::to_string(splitting[j]) + "): " + e.what());
            }
        }
    }

    // distinct connected sets that avoid each other's boundaries are disjoint
    for (int it = 0; it < samples; ++it) {
        VertexSet u = detail::random_connected_subset(s, ground, rng);
        VertexSet v = detail::random_connected_subset(s, ground, rng);
        if (u == v) continue;
        if (boundary(s, u).intersects(v) || boundary(s, v).intersects(u)) continue;
        if (u.intersects(v))
            note("same-boundary sets " + u.to_string() + " and " + v.to_string() + " intersect");
    }

    // canonical decomposition invariants on random subsets
    for (int it = 0; it < samples; ++it) {
        VertexSet x = detail::random_subset(ground, rng);
        CanonicalDecomposition dec = canonical_decomposition(s, x);
        VertexSet rebuilt = dec.residue;
        for (const auto& part : dec.open_parts) {
            rebuilt = set_union(rebuilt, part);
            if (components(s, part, {}).count() != 1)
                note("canonical part " + part.to_string() + " is disconnected");
            if (!boundary(s, part).subset_of(dec.residue))
                note("canonical part " + part.to_string() + " touches past the residue");
        }
        if (rebuilt != x) note("canonical decomposition does not rebuild " + x.to_string());
        for (PointId v : dec.residue) {
            bool outside = false;
            for (PointId w : s.neighbors(v))
                if (!x.contains(w)) outside = true;
            if (!outside) note("residue point " + std::to_string(v) + " is interior");
        }
    }

    // interval checks and symmetry over splitting pairs
    budget = samples;
    for (std::size_t i = 0; i < splitting.size() && budget > 0; ++i) {
        for (std::size_t j = i + 1; j < splitting.size() && budget > 0; ++j, --budget) {
            try {
                Interval a = interval(s, ground, splitting[i], splitting[j]);
                Interval b = interval(s, ground, splitting[j], splitting[i]);
                if (a.members != b.members)
                    note("interval not symmetric at (" + std::to_string(splitting[i]) + "," +
                         std::to_string(splitting[j]) + ")");
            } catch (const Error& e) {
                if (e.code() == Errc::LemmaViolated)
                    note("interval at (" + std::to_string(splitting[i]) + "," +
                         std::to_string(splitting[j]) + "): " + e.what());
            }
        }
    }

    // separation regions inside flat components are contiguous,
    // and their connected subsets carry at most two inner boundary points
    if (!flats.empty()) {
        Partition flat_comps = components(s, flats, {});
        for (const VertexSet& d : flat_comps.blocks) {
            CheckReport bp = boundary_pair_check(s, d, samples, seed);
            for (const auto& v : bp.violations) note(v);
            if (d.size() < 2) continue;
            int pair_budget = samples;
            const auto& ids = d.ids();
            for (std::size_t i = 0; i < ids.size() && pair_budget > 0; ++i)
                for (std::size_t j = i + 1; j < ids.size() && pair_budget > 0; ++j, --pair_budget) {
                    VertexSet region = separation_region(s, d, ids[i], ids[j]);
                    if (region.size() >= 2 && components(s, region, {}).count() != 1)
                        note("separation region " + region.to_string() + " in " + d.to_string() +
                             " is not contiguous");
                }
        }
    }

    res.payload["checked"] = {"sim_classes", "flat_two_components", "three_part_split",
                              "connected_same_boundary", "canonical_decomposition", "interval",
                              "separation_region", "boundary_pair"};
    res.payload["flat_points"] = flats.ids();
    return res;
}

/// Component-count bounds on random subsets plus the enumerable families.
inline SuiteResult verify_bounds(const Space& s, std::uint64_t seed, int samples) {
    SuiteResult res;
    detail::require_connected_ground(s, s.vertices());
    std::mt19937_64 rng(seed);
    std::vector<VertexSet> subsets;
    subsets.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) subsets.push_back(detail::random_subset(s.vertices(), rng));
    BoundReport point = component_bound_check(s, subsets);
    for (const auto& v : point.violations) res.violations.push_back(v);
    res.payload["component_bound"] = {{"bound", point.bound}, {"observed_max", point.observed_max}};

    std::vector<FamilyKind> kinds{FamilyKind::BasisSets, FamilyKind::Complements};
    if (s.basis().size() <= 64) kinds.push_back(FamilyKind::BooleanDepth2);
    if (s.point_count() <= 64) kinds.push_back(FamilyKind::Intervals);
    long long basis_max = -1;
    for (FamilyKind kind : kinds) {
        BoundReport fam = family_component_bound(s, kind);
        for (const auto& v : fam.violations) res.violations.push_back(v);
        res.payload["family"][family_kind_name(kind)] = {{"bound", fam.bound},
                                                         {"observed_max", fam.observed_max}};
        if (kind == FamilyKind::BasisSets) basis_max = fam.observed_max;
        if (kind == FamilyKind::BooleanDepth2 && basis_max >= 0 && fam.observed_max < basis_max)
            res.violations.push_back("boolean family observed_max dropped below the basis family");
    }
    return res;
}

/// Decomposition, chart laws, anchor robustness and interval coherence.
inline SuiteResult verify_order(const Space& s, std::uint64_t seed, int samples) {
    SuiteResult res;
    const VertexSet ground = s.vertices();
    detail::require_connected_ground(s, ground);
    (void)seed;
    Decomposition dec;
    try {
        dec = decompose(s, ground);
    } catch (const Error& e) {
        res.violations.push_back(std::string("decompose failed: ") + e.what());
        return res;
    }
    res.payload["removed"] = dec.removed.ids();
    Json charts = Json::array();
    for (const OrderChart& chart : dec.components) {
        charts.push_back({{"domain", chart.domain.ids()}, {"by_rank", chart.by_rank}});
        CheckReport law = check_subinterval_law(s, chart);
        CheckReport topo = check_order_topology(s, chart);
        for (const auto& v : law.violations) res.violations.push_back(v);
        for (const auto& v : topo.violations) res.violations.push_back(v);

        // anchors must agree up to one global reversal
        if (chart.domain.size() >= 3) {
            for (PointId a : chart.domain) {
                if (components(s, chart.domain, VertexSet{a}).count() != 2) continue;
                OrderChart other = order_chart(s, chart.domain, a);
                std::vector<PointId> reversed(other.by_rank.rbegin(), other.by_rank.rend());
                if (other.by_rank != chart.by_rank && reversed != chart.by_rank)
                    res.violations.push_back("anchor " + std::to_string(a) +
                                             " reorders component " + chart.domain.to_string());
            }
        }

        // middle piece of the three-part split is the open interval
        int budget = samples;
        const auto& ranked = chart.by_rank;
        for (std::size_t i = 0; i < ranked.size() && budget > 0; ++i) {
            for (std::size_t j = i + 1; j < ranked.size() && budget > 0; ++j, --budget) {
                PointId x = ranked[i], y = ranked[j];
                if (components(s, chart.domain, VertexSet{x}).count() < 2) continue;
                if (components(s, chart.domain, VertexSet{y}).count() < 2) continue;
                ThreePartSplit split = verify_three_part_split(s, chart.domain, x, y);
                VertexSet middle = interval(s, chart.domain, x, y).members;
                if (split.middle != middle)
                    res.violations.push_back("three-part middle differs from interval at (" +
                                             std::to_string(x) + "," + std::to_string(y) + ")");
            }
        }
    }
    res.payload["components"] = std::move(charts);
    return res;
}

inline SuiteResult run_suite(const Space& s, const std::string& name, std::uint64_t seed, int samples) {
    if (name == "lemmas") return verify_lemmas(s, seed, samples);
    if (name == "bounds") return verify_bounds(s, seed, samples);
    if (name == "order") return verify_order(s, seed, samples);
    fail(Errc::BadParams, "unknown suite: " + name);
}

}  // namespace linetop
