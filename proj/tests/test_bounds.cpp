#include <catch2/catch_amalgamated.hpp>

#include <linetop/bounds.hpp>
#include <linetop/generators.hpp>

#include "oracles.hpp"

using namespace linetop;

namespace {

Space path(int n, std::vector<int> radii = {1}) {
    StandardParams p;
    p.n = n;
    return gen_standard(StandardKind::Path, p, radii);
}

Space cycle(int n, std::vector<int> radii = {1}) {
    StandardParams p;
    p.n = n;
    return gen_standard(StandardKind::Cycle, p, radii);
}

}  // namespace

TEST_CASE("component bound on hand-picked subsets") {
    Space p20 = path(20);
    REQUIRE(max_basis_boundary(p20) == 2);

    BoundReport two_blocks = component_bound_check(p20, {VertexSet{2, 3, 7, 8}});
    CHECK(two_blocks.ok());
    CHECK(two_blocks.observed_max == 2);
    CHECK(two_blocks.bound == 8);  // n = 4 boundary points, K = 2

    BoundReport whole = component_bound_check(p20, {p20.vertices()});
    CHECK(whole.ok());
    CHECK(whole.observed_max == 1);
    CHECK(whole.bound == 1);  // boundaryless convention

    // scattered singletons: boundary {2,4,6,8,10}, five points
    CHECK(boundary(p20, VertexSet{3, 5, 7, 9}) == VertexSet{2, 4, 6, 8, 10});
    BoundReport scattered = component_bound_check(p20, {VertexSet{3, 5, 7, 9}});
    CHECK(scattered.ok());
    CHECK(scattered.observed_max == 4);
    CHECK(scattered.bound == 10);
}

TEST_CASE("component bound holds on random subsets") {
    std::mt19937_64 rng(42);
    for (const Space& s : {path(30), cycle(24)}) {
        std::vector<VertexSet> samples;
        for (int i = 0; i < 300; ++i) samples.push_back(oracles::random_subset(s.vertices(), rng));
        BoundReport report = component_bound_check(s, samples);
        CHECK(report.ok());
    }
}

TEST_CASE("component bound requires a connected space") {
    Space split = build_space(4, {{0, 1}, {2, 3}},
                              BasisSpec::explicit_sets({VertexSet{0, 1}, VertexSet{2, 3}}));
    CHECK_THROWS_MATCHES(component_bound_check(split, {VertexSet{0}}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::GroundDisconnected; }));
}

TEST_CASE("family bounds on enumerable families") {
    SECTION("balls on a path are connected") {
        BoundReport report = family_component_bound(path(30), FamilyKind::BasisSets);
        CHECK(report.ok());
        CHECK(report.observed_max == 1);
    }
    SECTION("arc complements on a cycle are arcs") {
        BoundReport report = family_component_bound(cycle(24, {1, 2}), FamilyKind::Complements);
        CHECK(report.ok());
        CHECK(report.observed_max == 1);
    }
    SECTION("symmetric differences of two balls") {
        BoundReport report = family_component_bound(path(30), FamilyKind::SymmetricDifferences);
        CHECK(report.ok());
        CHECK(report.observed_max == 2);
        CHECK(report.bound == 8);  // d = 1, K = 2, n = 4
    }
    SECTION("intervals") {
        BoundReport report = family_component_bound(path(30), FamilyKind::Intervals);
        CHECK(report.ok());
        CHECK(report.observed_max == 1);
    }
    SECTION("boolean combinations of depth two") {
        BoundReport report = family_component_bound(path(30), FamilyKind::BooleanDepth2);
        CHECK(report.ok());
        CHECK(report.bound == 8);
    }
}

TEST_CASE("larger families never observe fewer components") {
    for (const Space& s : {path(18), cycle(14, {1, 2})}) {
        BoundReport basis = family_component_bound(s, FamilyKind::BasisSets);
        BoundReport boolean = family_component_bound(s, FamilyKind::BooleanDepth2);
        CHECK(basis.observed_max <= boolean.observed_max);
    }
}

TEST_CASE("family enumeration errors") {
    CHECK_THROWS_MATCHES(family_kind_from_name("frobnicate"), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::UnknownFamily; }));
    CHECK_THROWS_MATCHES(family_component_bound(path(30), FamilyKind::BooleanDepth2, 100), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::FamilyTooLarge; }));
}
