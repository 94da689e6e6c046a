// Acceptance suite: runs every criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code = number of failures.

#include <chrono>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include <linetop/cli.hpp>

#include "oracles.hpp"

using namespace linetop;

namespace {

std::deque<std::pair<Space, OrderChart>> g_charts;  // every chart produced anywhere in the run

void remember(const Space& s, const OrderChart& chart) { g_charts.emplace_back(s, chart); }

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

Space star(int arms, int len) {
    StandardParams p;
    p.arms = arms;
    p.len = len;
    return gen_standard(StandardKind::Star, p, {1});
}

Space random_tree(int n, std::uint64_t seed) {
    StandardParams p;
    p.n = n;
    p.seed = seed;
    return gen_standard(StandardKind::RandomTree, p, {1});
}

bool criterion_order_recovery(std::string& detail) {
    long long checked = 0;
    for (int n = 3; n <= 7; ++n) {
        std::vector<PointId> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            BetweennessRelation rel = betweenness_of_order(perm);
            auto [space, chart] = from_betweenness(rel);
            std::vector<PointId> reversed(chart.by_rank.rbegin(), chart.by_rank.rend());
            if (chart.by_rank != perm && reversed != perm) {
                detail = "failed to recover an order on " + std::to_string(n) + " points";
                return false;
            }
            if (n <= 5) remember(space, chart);
            ++checked;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    // independent ground truth: exactly the order and its reversal realize
    // the relation (exhaustive permutation scan at small sizes)
    for (int n = 3; n <= 5; ++n) {
        std::vector<PointId> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            auto orders = oracles::realizing_orders(betweenness_of_order(perm));
            if (orders.size() != 2) {
                detail = "permutation oracle disagrees at n = " + std::to_string(n);
                return false;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    detail = std::to_string(checked) + " orders recovered";
    return true;
}

bool criterion_star_decomposition(std::string& detail) {
    Space st = star(3, 6);
    Decomposition dec = decompose(st, st.vertices());
    VertexSet expected_core{0, 6, 12, 18};  // center and the three tips
    if (!expected_core.subset_of(dec.removed)) {
        detail = "removed = " + dec.removed.to_string();
        return false;
    }
    if (dec.components.size() != 3) {
        detail = "expected 3 residual components, got " + std::to_string(dec.components.size());
        return false;
    }
    for (const OrderChart& chart : dec.components) {
        if (!check_subinterval_law(st, chart).ok() || !check_order_topology(st, chart).ok()) {
            detail = "chart on " + chart.domain.to_string() + " fails its laws";
            return false;
        }
        remember(st, chart);
    }
    return true;
}

bool criterion_three_part_split(std::string& detail) {
    long long pairs = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        int n = 5 + static_cast<int>(seed % 36);  // 5..40
        Space tree = random_tree(n, seed);
        const VertexSet all = tree.vertices();
        std::vector<PointId> splitting;
        for (PointId x : all)
            if (components(tree, all, VertexSet{x}).count() >= 2) splitting.push_back(x);
        int budget = 500;
        for (std::size_t i = 0; i < splitting.size() && budget > 0; ++i) {
            for (std::size_t j = i + 1; j < splitting.size() && budget > 0; ++j, --budget, ++pairs) {
                try {
                    verify_three_part_split(tree, all, splitting[i], splitting[j]);
                } catch (const Error& e) {
                    detail = "tree seed " + std::to_string(seed) + ", pair (" +
                             std::to_string(splitting[i]) + "," + std::to_string(splitting[j]) +
                             "): " + e.what();
                    return false;
                }
            }
        }
    }
    detail = std::to_string(pairs) + " pairs verified";
    return true;
}

bool criterion_component_bound(std::string& detail) {
    std::mt19937_64 rng(20260810);
    for (const Space& s : {path(30), cycle(24)}) {
        std::vector<VertexSet> samples;
        samples.reserve(1000);
        for (int i = 0; i < 1000; ++i) samples.push_back(oracles::random_subset(s.vertices(), rng));
        BoundReport report = component_bound_check(s, samples);
        if (!report.ok()) {
            detail = report.violations.front();
            return false;
        }
    }
    detail = "2000 subsets within bound";
    return true;
}

bool criterion_family_bound(std::string& detail) {
    BoundReport report = family_component_bound(path(30), FamilyKind::BooleanDepth2);
    if (!report.ok()) {
        detail = report.violations.front();
        return false;
    }
    detail = "observed_max " + std::to_string(report.observed_max) + " <= C = " +
             std::to_string(report.bound);
    return true;
}

bool criterion_separation_oracle(std::string& detail) {
    std::vector<Space> corpus;
    for (int n = 3; n <= 8; ++n) {
        corpus.push_back(path(n));
        corpus.push_back(cycle(n));
    }
    for (auto [arms, len] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 1}, {5, 1}, {6, 1}, {7, 1}})
        corpus.push_back(star(arms, len));
    for (auto [a, b, c] : std::vector<std::array<int, 3>>{
             {2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {2, 3, 3}, {2, 2, 5}, {2, 3, 4}, {3, 3, 3}})
        corpus.push_back(gen_theta(a, b, c, {1}));
    for (int n = 2; n <= 8; ++n)
        for (std::uint64_t seed = 1; seed <= 3; ++seed) corpus.push_back(random_tree(n, seed));
    for (int n = 6; n <= 8; ++n) corpus.push_back(restricted_interval_structure(n, 2));

    long long checked = 0;
    for (const Space& s : corpus) {
        const VertexSet all = s.vertices();
        for (PointId x : all) {
            SplitProfile profile = sim_classes(s, all, x);
            for (PointId a : all) {
                if (a == x) continue;
                for (PointId b = a + 1; b < s.point_count(); ++b) {
                    if (b == x) continue;
                    bool got = profile.classes.same_block(a, b);
                    bool expect = oracles::reachable(s, all, x, a, b);
                    if (got != expect) {
                        detail = "mismatch at x=" + std::to_string(x) + " (" + std::to_string(a) +
                                 "," + std::to_string(b) + ")";
                        return false;
                    }
                    ++checked;
                }
            }
        }
    }
    detail = std::to_string(checked) + " separations cross-checked on " +
             std::to_string(corpus.size()) + " spaces";
    return true;
}

bool criterion_circle_atlas(std::string& detail) {
    Space c24 = cycle(24, {1, 2});
    if (max_basis_boundary(c24) != 2) {
        detail = "basis boundary is not 2";
        return false;
    }
    Atlas atlas = build_atlas(c24, c24.vertices());
    if (!atlas.uncovered.empty()) {
        detail = "uncovered: " + atlas.uncovered.to_string();
        return false;
    }
    VertexSet covered;
    for (const OrderChart& chart : atlas.charts) {
        covered = set_union(covered, chart.domain);
        remember(c24, chart);
    }
    if (covered != c24.vertices()) {
        detail = "atlas covers only " + covered.to_string();
        return false;
    }
    auto cyc = circular_order(c24, atlas);
    if (!cyc) {
        detail = "atlas did not stitch into a cycle";
        return false;
    }
    std::vector<PointId> expect;
    for (PointId v = 0; v < 24; ++v) expect.push_back(v);
    if (cyc->cycle != expect) {
        detail = "unexpected cycle";
        return false;
    }
    return true;
}

bool criterion_subinterval_law(std::string& detail) {
    // a few more charts from path decompositions
    for (int n : {11, 21}) {
        Space p = path(n);
        for (const OrderChart& chart : decompose(p, p.vertices()).components) remember(p, chart);
    }
    for (const auto& [space, chart] : g_charts) {
        CheckReport report = check_subinterval_law(space, chart);
        if (!report.ok()) {
            detail = "chart on " + chart.domain.to_string() + ": " + report.violations.front();
            return false;
        }
    }
    detail = std::to_string(g_charts.size()) + " charts pass exhaustively";
    return true;
}

bool criterion_monotone(std::string& detail) {
    Space p11 = path(11);
    OrderChart chart = order_chart(p11, p11.vertices(), 5);
    MonotoneReport tent = monotone_decomposition(
        p11, [](PointId v) { return std::abs(v - 5); }, chart, chart);
    if (tent.breakpoints != VertexSet{5}) {
        detail = "tent breakpoints " + tent.breakpoints.to_string();
        return false;
    }
    MonotoneReport id = monotone_decomposition(p11, [](PointId v) { return v; }, chart, chart);
    MonotoneReport constant = monotone_decomposition(p11, [](PointId) { return 3; }, chart, chart);
    if (!id.breakpoints.empty() || !constant.breakpoints.empty()) {
        detail = "identity or constant map produced breakpoints";
        return false;
    }
    std::mt19937_64 rng(77);
    for (int n = 3; n <= 12; ++n) {
        Space p = path(std::max(n, 3));
        OrderChart dom = order_chart(p, p.vertices(), 1);
        for (int it = 0; it < 50; ++it) {
            std::vector<PointId> image(static_cast<std::size_t>(p.point_count()));
            for (auto& v : image)
                v = static_cast<PointId>(rng() % static_cast<std::uint64_t>(p.point_count()));
            MonotoneReport report = monotone_decomposition(
                p, [&](PointId v) { return image[static_cast<std::size_t>(v)]; }, dom, dom);
            std::vector<int> y;
            for (PointId v : dom.by_rank) y.push_back(dom.rank(image[static_cast<std::size_t>(v)]));
            if (static_cast<int>(report.breakpoints.size()) != oracles::min_breakpoints(y)) {
                detail = "non-minimal breakpoints on a size-" + std::to_string(n) + " domain";
                return false;
            }
        }
    }
    return true;
}

bool criterion_cli_determinism(std::string& detail) {
    namespace fs = std::filesystem;
    auto tmp = [](const std::string& name) {
        return (fs::temp_directory_path() / ("linetop_acc_" + name)).string();
    };
    auto run = [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code = execute(std::move(args), out, err);
        return std::pair<int, std::string>(code, out.str());
    };
    std::string star_path = tmp("star.json");
    std::string cycle_path = tmp("cycle.json");
    std::string bet_path = tmp("bet.json");
    if (run({"gen", "star", "--arms", "3", "--len", "6", "--out", star_path}).first != 0 ||
        run({"gen", "cycle", "--n", "24", "--radii", "1", "2", "--out", cycle_path}).first != 0) {
        detail = "fixture generation failed";
        return false;
    }
    write_text_file(bet_path, betweenness_to_json(betweenness_of_order({3, 0, 2, 1, 4})).dump(2) + "\n");

    std::vector<std::vector<std::string>> commands = {
        {"gen", "random_tree", "--n", "23", "--seed", "11", "--out", tmp("tree.json")},
        {"analyze", star_path},
        {"decompose", star_path},
        {"order", star_path, "--domain", "1,2,3,4,5", "--anchor", "3"},
        {"atlas", cycle_path},
        {"cyclic", cycle_path},
        {"verify", star_path, "--suite", "lemmas", "--seed", "42", "--samples", "200"},
        {"verify", star_path, "--suite", "bounds", "--seed", "42", "--samples", "200"},
        {"verify", star_path, "--suite", "order", "--seed", "42", "--samples", "200"},
        {"betweenness", bet_path},
    };
    for (const auto& cmd : commands) {
        auto first = run(cmd);
        auto second = run(cmd);
        if (first != second) {
            detail = "command " + cmd[0] + " is not deterministic";
            return false;
        }
    }
    detail = std::to_string(commands.size()) + " commands byte-identical";
    return true;
}

struct Criterion {
    int number;
    const char* name;
    double time_limit_s;  // 0 = no limit
    std::function<bool(std::string&)> body;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "order recovery from betweenness, all orders on n <= 7", 5.0, criterion_order_recovery},
        {2, "decomposition of star(3 arms x 6)", 0.0, criterion_star_decomposition},
        {3, "three-part split on 200 random trees", 30.0, criterion_three_part_split},
        {4, "component bound on path(30) and cycle(24)", 0.0, criterion_component_bound},
        {5, "family bound, boolean depth 2 on path(30)", 60.0, criterion_family_bound},
        {6, "separation oracle equivalence on all fixtures with n <= 8", 0.0, criterion_separation_oracle},
        {7, "atlas and circular order on cycle(24)", 0.0, criterion_circle_atlas},
        {8, "subinterval law on every chart produced in the suite", 0.0, criterion_subinterval_law},
        {9, "monotone decomposition with minimal breakpoints", 0.0, criterion_monotone},
        {10, "CLI determinism, byte-identical reports", 0.0, criterion_cli_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool pass = false;
        auto start = std::chrono::steady_clock::now();
        try {
            pass = c.body(detail);
        } catch (const std::exception& e) {
            detail = e.what();
            pass = false;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (pass && c.time_limit_s > 0 && secs > c.time_limit_s) {
            pass = false;
            detail = "exceeded time limit of " + std::to_string(c.time_limit_s) + "s";
        }
        std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", c.number, c.name,
                    secs, detail.empty() ? "" : " -- ", detail.c_str());
        if (!pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures;
}
