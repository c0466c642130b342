#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "geoconfig/error.hpp"
#include "geoconfig/report.hpp"

using namespace geoconfig;
using namespace geoconfig::cli;

namespace {

struct QueryFlags {
    std::string space = "ordered";
    std::size_t n = 2;
    std::string p, q, w;
    std::size_t samples = 256;
    double scale_eps = 2.0;
    bool json_stdin = false;
};

void add_query_flags(CLI::App* cmd, QueryFlags& f) {
    cmd->add_option("--space", f.space, "ordered, unordered or alt");
    cmd->add_option("--n", f.n, "ambient dimension");
    cmd->add_option("--p", f.p, "start configuration, 2n reals");
    cmd->add_option("--q", f.q, "end configuration, 2n reals");
    cmd->add_option("--samples", f.samples, "number of sampled configurations");
    cmd->add_option("--w", f.w, "unit vector choosing a type (c) geodesic");
    cmd->add_option("--scale-eps", f.scale_eps, "clearance of the input coordinates");
    cmd->add_flag("--json", f.json_stdin, "read the query as JSON from stdin");
}

QuerySpec build_query(const QueryFlags& f) {
    QuerySpec spec;
    if (f.json_stdin) {
        spec = query_from_json(json::parse(std::string(std::istreambuf_iterator<char>(std::cin), {})));
    } else {
        spec.space = parse_space(f.space);
        spec.n = f.n;
        spec.p = parse_coords(f.p);
        spec.q = parse_coords(f.q);
        spec.samples = f.samples;
        spec.scale_eps = f.scale_eps;
        if (!f.w.empty()) spec.w = parse_coords(f.w);
    }
    validate(spec);
    return spec;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geodesics and motion planning for two points in R^n"};
    app.require_subcommand(1);

    QueryFlags geo_flags, plan_flags, fig_flags;
    auto* geodesic = app.add_subcommand("geodesic", "minimal geodesic between two configurations");
    add_query_flags(geodesic, geo_flags);
    auto* plan = app.add_subcommand("plan", "geodesic chosen by the motion-planning rule");
    add_query_flags(plan, plan_flags);

    VerifySpec vspec;
    vspec.seed = 0;
    bool seed_given = false;
    std::string vfixture;
    auto* verify = app.add_subcommand("verify", "compare closed forms with a numerical path optimizer");
    verify->add_option("--count", vspec.count, "number of random instances")->check(CLI::PositiveNumber);
    verify->add_option("--n", vspec.n, "ambient dimension");
    verify->add_option("--seed", vspec.seed, "campaign seed")->each([&](const std::string&) { seed_given = true; });
    verify->add_option("--K", vspec.waypoints, "waypoints per path");
    verify->add_option("--iters", vspec.iters, "descent iteration cap");
    verify->add_option("--fixture", vfixture, "ex1 or ex2 instead of random instances");

    std::string figname, out;
    auto* figure = app.add_subcommand("figure", "render a planar geodesic as SVG");
    add_query_flags(figure, fig_flags);
    figure->add_option("--fixture", figname, "fig1, fig2 or fig3");
    figure->add_option("--out", out, "output file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print(error_json(ErrorCode::invalid_argument, e.what()));
        return 2;
    }

    try {
        if (*geodesic) {
            print(cmd_geodesic(build_query(geo_flags)));
        } else if (*plan) {
            print(cmd_plan(build_query(plan_flags)));
        } else if (*verify) {
            if (!seed_given) vspec.seed = default_seed();
            if (vfixture == "ex1") vspec.fixture = VerifyFixture::ex1;
            else if (vfixture == "ex2") vspec.fixture = VerifyFixture::ex2;
            else if (!vfixture.empty())
                throw GeoError(ErrorCode::invalid_argument, "unknown fixture '" + vfixture + "'");
            const json report = cmd_verify(vspec);
            print(report);
            return report.at("all_pass").get<bool>() ? 0 : 1;
        } else if (*figure) {
            const std::string svg = figname.empty() ? render_query(build_query(fig_flags))
                                                    : render_figure(parse_figure(figname));
            if (out.empty()) {
                std::cout << svg;
            } else {
                std::ofstream file(out, std::ios::binary);
                if (!file) throw GeoError(ErrorCode::invalid_argument, "cannot write '" + out + "'");
                file << svg;
            }
        }
    } catch (const GeoError& e) {
        print(error_json(e.code(), e.what()));
        return 2;
    } catch (const json::exception& e) {
        print(error_json(ErrorCode::invalid_argument, e.what()));
        return 2;
    } catch (const std::invalid_argument& e) {
        print(error_json(ErrorCode::invalid_argument, e.what()));
        return 2;
    }
    return 0;
}
