#pragma once

#include "order.hpp"

namespace linetop {

/// Outcome of a quantitative bound check over a collection of sets.
struct BoundReport {
    long long bound = 0;
    long long observed_max = 0;
    std::vector<std::pair<std::string, long long>> witnesses;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// d(X) <= |bd(X)| * K for every sampled X, where K is the largest basis
/// boundary. Boundaryless sets in a connected space get the bound 1.
inline BoundReport component_bound_check(const Space& s, const std::vector<VertexSet>& samples) {
    if (components(s, s.vertices(), {}).count() != 1)
        fail(Errc::GroundDisconnected, "space is not connected");
    const long long k = max_basis_boundary(s);
    BoundReport report;
    for (const VertexSet& x : samples) {
        long long nb = static_cast<long long>(boundary(s, x).size());
        long long d = static_cast<long long>(components(s, x, {}).count());
        long long allowed = nb > 0 ? nb * k : 1;
        report.bound = std::max(report.bound, allowed);
        report.observed_max = std::max(report.observed_max, d);
        report.witnesses.emplace_back(x.to_string() + " n=" + std::to_string(nb), d);
        if (d > allowed)
            report.violations.push_back(x.to_string() + " has " + std::to_string(d) +
                                        " components, bound " + std::to_string(allowed));
    }
    return report;
}

enum class FamilyKind {
    BasisSets,             // the basis family itself
    Complements,           // complements of basis sets
    SymmetricDifferences,  // pairwise symmetric differences of basis sets
    Intervals,             // I(x, y) over all vertex pairs
    BooleanDepth2,         // all boolean combinations of every basis pair
};

inline FamilyKind family_kind_from_name(const std::string& name) {
    if (name == "basis") return FamilyKind::BasisSets;
    if (name == "complements") return FamilyKind::Complements;
    if (name == "symdiff") return FamilyKind::SymmetricDifferences;
    if (name == "intervals") return FamilyKind::Intervals;
    if (name == "bool2") return FamilyKind::BooleanDepth2;
    fail(Errc::UnknownFamily, "unknown family: " + name);
}

inline const char* family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::BasisSets: return "basis";
        case FamilyKind::Complements: return "complements";
        case FamilyKind::SymmetricDifferences: return "symdiff";
        case FamilyKind::Intervals: return "intervals";
        case FamilyKind::BooleanDepth2: return "bool2";
    }
    return "unknown";
}

namespace detail {

inline std::vector<std::pair<std::string, VertexSet>> enumerate_family(const Space& s, FamilyKind kind,
                                                                       std::size_t cap) {
    const auto& basis = s.basis();
    const VertexSet all = s.vertices();
    std::vector<std::pair<std::string, VertexSet>> out;
    auto guard = [&](std::size_t expected) {
        if (expected > cap)
            fail(Errc::FamilyTooLarge, "family has " + std::to_string(expected) +
                                           " members, cap " + std::to_string(cap));
    };
    switch (kind) {
        case FamilyKind::BasisSets:
            guard(basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i)
                out.emplace_back("B[" + std::to_string(i) + "]", basis[i]);
            break;
        case FamilyKind::Complements:
            guard(basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i)
                out.emplace_back("~B[" + std::to_string(i) + "]", set_minus(all, basis[i]));
            break;
        case FamilyKind::SymmetricDifferences:
            guard(basis.size() * (basis.size() - 1) / 2);
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = i + 1; j < basis.size(); ++j)
                    out.emplace_back("B[" + std::to_string(i) + "]^B[" + std::to_string(j) + "]",
                                     set_minus(set_union(basis[i], basis[j]),
                                               set_intersect(basis[i], basis[j])));
            break;
        case FamilyKind::Intervals: {
            const auto& ids = all.ids();
            guard(ids.size() * (ids.size() - 1) / 2);
            if (components(s, all, {}).count() != 1)
                fail(Errc::PreconditionViolated, "interval family needs a connected space");
            for (std::size_t i = 0; i < ids.size(); ++i)
                for (std::size_t j = i + 1; j < ids.size(); ++j)
                    out.emplace_back(
                        "I(" + std::to_string(ids[i]) + "," + std::to_string(ids[j]) + ")",
                        interval(s, all, ids[i], ids[j]).members);
            break;
        }
        case FamilyKind::BooleanDepth2: {
            guard(basis.size() * (basis.size() - 1) / 2 * 16);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                for (std::size_t j = i + 1; j < basis.size(); ++j) {
                    for (int mask = 0; mask < 16; ++mask) {
                        std::vector<PointId> pick;
                        for (PointId v : all) {
                            int cell = (basis[i].contains(v) ? 1 : 0) | (basis[j].contains(v) ? 2 : 0);
                            if (mask & (1 << cell)) pick.push_back(v);
                        }
                        out.emplace_back("bool(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                             std::to_string(mask) + ")",
                                         VertexSet(std::move(pick)));
                    }
                }
            }
            break;
        }
    }
    return out;
}

}  // namespace detail

/// Uniform family bound C = d * K * n with d the component count of the
/// space, K the largest basis boundary and n the largest boundary over
/// the family; every member must have at most max(C, 1) components.
inline BoundReport family_component_bound(const Space& s, FamilyKind kind, std::size_t cap = 100000) {
    auto family = detail::enumerate_family(s, kind, cap);
    const long long k = max_basis_boundary(s);
    const long long d = static_cast<long long>(components(s, s.vertices(), {}).count());
    long long n = 0;
    for (const auto& [label, member] : family)
        n = std::max(n, static_cast<long long>(boundary(s, member).size()));
    const long long c = d * k * n;
    const long long allowed = std::max(c, 1LL);

    BoundReport report;
    report.bound = allowed;
    for (const auto& [label, member] : family) {
        long long dm = static_cast<long long>(components(s, member, {}).count());
        report.observed_max = std::max(report.observed_max, dm);
        report.witnesses.emplace_back(label, dm);
        if (dm > allowed)
            report.violations.push_back(label + " has " + std::to_string(dm) +
                                        " components, bound " + std::to_string(allowed));
    }
    return report;
}

}  // namespace linetop
