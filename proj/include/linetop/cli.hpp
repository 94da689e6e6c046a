#pragma once

#include <iostream>

#include <CLI11.hpp>

#include "dot.hpp"
#include "verify.hpp"

namespace linetop {

namespace detail {

inline int exit_code_for(Errc c) {
    switch (c) {
        // structural negatives: the input parsed fine, the structure says no
        case Errc::NotBetweennessRealizable:
        case Errc::ComponentNotOrderable:
        case Errc::AnchorDoesNotSplit:
        case Errc::NotTotalOrder:
        case Errc::BoundaryNotTwo:
        case Errc::NoPierceableSubset:
        case Errc::OverlapInconsistent:
        case Errc::LemmaViolated:
            return 1;
        default:
            return 2;
    }
}

inline Json space_summary(const Space& s) {
    return Json{{"points", s.point_count()},
                {"edges", s.edge_count()},
                {"basis_sets", s.basis().size()},
                {"max_basis_boundary", max_basis_boundary(s)}};
}

inline Json chart_json(const OrderChart& chart) {
    return Json{{"domain", chart.domain.ids()}, {"anchor", chart.anchor}, {"by_rank", chart.by_rank}};
}

inline VertexSet parse_domain(const Space& s, const std::string& arg) {
    if (arg == "all") return s.vertices();
    std::vector<PointId> ids;
    std::string token;
    std::istringstream in(arg);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        try {
            ids.push_back(std::stoi(token));
        } catch (const std::exception&) {
            fail(Errc::BadParams, "bad domain token: " + token);
        }
    }
    if (ids.empty()) fail(Errc::BadParams, "empty domain");
    return VertexSet(std::move(ids));
}

}  // namespace detail

/// Runs one CLI invocation (argv without the program name). The report is
/// written to `out` or to the --out file; usage errors go to `err` with
/// exit code 2, structural negatives produce a report with exit code 1.
inline int execute(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    const std::vector<std::string> argv_echo = args;
    CLI::App app{"analysis of finite one-dimensional topological structures", "linetop"};
    app.require_subcommand(1);

    std::string file, out_path, dot_path;
    std::string domain_arg = "all";
    std::string suite = "lemmas";
    std::string kind;
    PointId anchor = 0;
    std::uint64_t seed = 0;
    int samples = 100;
    int n = 0, arms = 0, len = 0, window = 0;
    std::vector<int> radii{1};

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write the report to this file instead of stdout");
        cmd->add_option("--dot", dot_path, "write a DOT rendering of the space to this file");
    };

    CLI::App* cmd_analyze = app.add_subcommand("analyze", "split profiles, flat set and K");
    cmd_analyze->add_option("file", file, "space fixture (JSON)")->required();
    add_io(cmd_analyze);

    CLI::App* cmd_decompose = app.add_subcommand("decompose", "remove non-flat points and chart the rest");
    cmd_decompose->add_option("file", file, "space fixture (JSON)")->required();
    add_io(cmd_decompose);

    CLI::App* cmd_order = app.add_subcommand("order", "order chart on a domain around an anchor");
    cmd_order->add_option("file", file, "space fixture (JSON)")->required();
    cmd_order->add_option("--domain", domain_arg, "all or comma-separated vertex ids");
    cmd_order->add_option("--anchor", anchor, "anchor vertex")->required();
    add_io(cmd_order);

    CLI::App* cmd_atlas = app.add_subcommand("atlas", "cover the space by local order charts");
    cmd_atlas->add_option("file", file, "space fixture (JSON)")->required();
    add_io(cmd_atlas);

    CLI::App* cmd_cyclic = app.add_subcommand("cyclic", "stitch the atlas into a cyclic order");
    cmd_cyclic->add_option("file", file, "space fixture (JSON)")->required();
    add_io(cmd_cyclic);

    CLI::App* cmd_verify = app.add_subcommand("verify", "run a property suite");
    cmd_verify->add_option("file", file, "space fixture (JSON)")->required();
    cmd_verify->add_option("--suite", suite, "lemmas, bounds or order");
    cmd_verify->add_option("--seed", seed, "sampling seed");
    cmd_verify->add_option("--samples", samples, "sampling effort");
    add_io(cmd_verify);

    CLI::App* cmd_betweenness = app.add_subcommand("betweenness", "recover a total order from betweenness");
    cmd_betweenness->add_option("file", file, "betweenness fixture (JSON)")->required();
    add_io(cmd_betweenness);

    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a fixture");
    cmd_gen->add_option("kind", kind, "path, cycle, star, theta, random_tree or restricted_interval")
        ->required();
    cmd_gen->add_option("--n", n, "vertex count");
    cmd_gen->add_option("--arms", arms, "star arm count");
    cmd_gen->add_option("--len", len, "star arm length / theta path length");
    cmd_gen->add_option("--window", window, "short-interval window");
    cmd_gen->add_option("--radii", radii, "ball radii");
    cmd_gen->add_option("--seed", seed, "random tree seed");
    cmd_gen->add_option("--out", out_path, "fixture destination")->required();
    cmd_gen->add_option("--dot", dot_path, "write a DOT rendering of the space to this file");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Json report;
    std::vector<std::string> violations;
    Json payload;
    std::string command;
    std::optional<Space> space;
    std::optional<Decomposition> decomposition;
    std::optional<Atlas> atlas;

    auto emit = [&](int status) {
        report["command"] = command;
        report["argv"] = argv_echo;
        if (space) report["space"] = detail::space_summary(*space);
        report["payload"] = payload;
        report["violations"] = violations;
        report["status"] = status;
        std::string text = report.dump(2) + "\n";
        if (command != "gen" && !out_path.empty()) write_text_file(out_path, text);
        else out << text;
        if (!dot_path.empty() && space)
            write_text_file(dot_path, export_dot(*space, decomposition ? &*decomposition : nullptr,
                                                 atlas ? &*atlas : nullptr));
        return status;
    };

    try {
        if (app.got_subcommand(cmd_analyze)) {
            command = "analyze";
            space.emplace(space_from_json(load_json_file(file)));
            Partition comps = components(*space, space->vertices(), {});
            Json parts = Json::array();
            for (const VertexSet& block : comps.blocks) {
                Json c;
                c["vertices"] = block.ids();
                Json splits = Json::array();
                for (PointId v : block) splits.push_back(Json::array({v, split_count(*space, block, v)}));
                c["splits"] = std::move(splits);
                c["non_flat"] = non_flat_set(*space, block).ids();
                parts.push_back(std::move(c));
            }
            payload["components"] = std::move(parts);
        } else if (app.got_subcommand(cmd_decompose)) {
            command = "decompose";
            space.emplace(space_from_json(load_json_file(file)));
            decomposition = decompose(*space, space->vertices());
            payload["removed"] = decomposition->removed.ids();
            Json charts = Json::array();
            for (const OrderChart& chart : decomposition->components)
                charts.push_back(detail::chart_json(chart));
            payload["components"] = std::move(charts);
        } else if (app.got_subcommand(cmd_order)) {
            command = "order";
            space.emplace(space_from_json(load_json_file(file)));
            OrderChart chart = order_chart(*space, detail::parse_domain(*space, domain_arg), anchor);
            payload = detail::chart_json(chart);
        } else if (app.got_subcommand(cmd_atlas)) {
            command = "atlas";
            space.emplace(space_from_json(load_json_file(file)));
            atlas = build_atlas(*space, space->vertices());
            Json charts = Json::array();
            for (const OrderChart& chart : atlas->charts) charts.push_back(detail::chart_json(chart));
            payload["charts"] = std::move(charts);
            payload["uncovered"] = atlas->uncovered.ids();
        } else if (app.got_subcommand(cmd_cyclic)) {
            command = "cyclic";
            space.emplace(space_from_json(load_json_file(file)));
            atlas = build_atlas(*space, space->vertices());
            if (!atlas->uncovered.empty()) {
                payload["cyclic"] = false;
                violations.push_back("atlas leaves " + atlas->uncovered.to_string() + " uncovered");
                return emit(1);
            }
            std::optional<CyclicOrder> cyc = circular_order(*space, *atlas);
            if (!cyc) {
                payload["cyclic"] = false;
                violations.push_back("charts do not stitch into a single cycle");
                return emit(1);
            }
            payload["cyclic"] = true;
            payload["cycle"] = cyc->cycle;
        } else if (app.got_subcommand(cmd_verify)) {
            command = "verify";
            space.emplace(space_from_json(load_json_file(file)));
            SuiteResult result = run_suite(*space, suite, seed, samples);
            payload["suite"] = suite;
            payload["seed"] = seed;
            payload["samples"] = samples;
            payload["detail"] = result.payload;
            violations = result.violations;
            return emit(violations.empty() ? 0 : 1);
        } else if (app.got_subcommand(cmd_betweenness)) {
            command = "betweenness";
            BetweennessRelation rel = betweenness_from_json(load_json_file(file));
            payload["points"] = rel.points();
            try {
                auto [recovered, chart] = from_betweenness(rel);
                space.emplace(std::move(recovered));
                payload["realizable"] = true;
                payload["order"] = chart.by_rank;
                payload["anchor"] = chart.anchor;
            } catch (const Error& e) {
                if (e.code() != Errc::NotBetweennessRealizable) throw;
                payload["realizable"] = false;
                violations.push_back(e.what());
                return emit(1);
            }
        } else if (app.got_subcommand(cmd_gen)) {
            command = "gen";
            if (kind == "restricted_interval") {
                space.emplace(restricted_interval_structure(n, window));
            } else {
                StandardParams params;
                params.n = n;
                params.arms = arms;
                params.len = len;
                params.seed = seed;
                space.emplace(gen_standard(standard_kind_from_name(kind), params, radii));
            }
            write_text_file(out_path, space_to_json(*space).dump(2) + "\n");
            payload["kind"] = kind;
            payload["written"] = out_path;
        }
        return emit(0);
    } catch (const Error& e) {
        int code = detail::exit_code_for(e.code());
        if (code == 1) {
            violations.push_back(e.what());
            return emit(1);
        }
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace linetop
