#include <cmath>
#include <cstdlib>
#include <string>

#include <gtest/gtest.h>

#include "geoconfig/error.hpp"
#include "geoconfig/report.hpp"
#include "support.hpp"

using namespace geoconfig;
using namespace geoconfig::cli;

namespace {

QuerySpec query(SpaceKind space, std::vector<double> p, std::vector<double> q, std::size_t n = 2) {
    QuerySpec s;
    s.space = space;
    s.n = n;
    s.p = std::move(p);
    s.q = std::move(q);
    return s;
}

const std::vector<double> ex1_p{-6, 4, 6, 8};
const std::vector<double> ex2_p{-6, 4, 6, 12};
const std::vector<double> ex_q{8, -6, 2, -10};

std::vector<OrderedConfig> samples_of(const json& report) {
    std::vector<OrderedConfig> out;
    for (const auto& s : report.at("samples"))
        out.emplace_back(Vec(s.at(0).get<std::vector<double>>()), Vec(s.at(1).get<std::vector<double>>()));
    return out;
}

double sampled_length(const json& report) {
    const auto s = samples_of(report);
    double total = 0;
    for (std::size_t i = 1; i < s.size(); ++i) total += config_distance(s[i - 1], s[i]);
    return total;
}

TEST(ParseCoords, SeparatorsAndErrors) {
    EXPECT_EQ(parse_coords(" -6 4 6 8"), (std::vector<double>{-6, 4, 6, 8}));
    EXPECT_EQ(parse_coords("1,2.5, -3e1"), (std::vector<double>{1, 2.5, -30}));
    EXPECT_TRUE(parse_coords("  ").empty());
    EXPECT_THROW((void)parse_coords("1 two 3"), GeoError);
    EXPECT_THROW((void)parse_coords("1 nan"), GeoError);
}

TEST(Sig10, Rounds) {
    EXPECT_EQ(sig10(25.245475701234), 25.2454757);
    EXPECT_EQ(sig10(-0.0), 0.0);
    EXPECT_EQ(sig10(1234567890123.0), 1234567890000.0);
}

TEST(Validate, RejectsBadInput) {
    try {
        validate(query(SpaceKind::ordered, {1, 2, 3}, ex_q));
        FAIL();
    } catch (const GeoError& e) {
        EXPECT_EQ(e.code(), ErrorCode::dimension_mismatch);
    }
    QuerySpec s = query(SpaceKind::ordered, ex1_p, ex_q);
    s.scale_eps = 0;
    EXPECT_THROW(validate(s), GeoError);
    s = query(SpaceKind::ordered, ex1_p, ex_q);
    s.samples = 1;
    EXPECT_THROW(validate(s), GeoError);
    s = query(SpaceKind::ordered, ex1_p, ex_q);
    s.w = std::vector<double>{1, 0, 0};
    EXPECT_THROW(validate(s), GeoError);
    EXPECT_THROW((void)parse_space("torus"), GeoError);
}

TEST(QueryFromJson, ReadsAllFields) {
    const json j = json::parse(R"({"space":"alt","n":2,"p":[-6,4,6,8],"q":[8,-6,2,-10],"samples":7,"w":[0,1],"scale_eps":4})");
    const QuerySpec s = query_from_json(j);
    EXPECT_EQ(s.space, SpaceKind::alt);
    EXPECT_EQ(s.samples, 7u);
    EXPECT_EQ(*s.w, (std::vector<double>{0, 1}));
    EXPECT_EQ(s.scale_eps, 4.0);
    EXPECT_THROW((void)query_from_json(json::parse(R"({"n":2})")), GeoError);
}

TEST(CmdGeodesic, FirstExample) {
    const json r = cmd_geodesic(query(SpaceKind::ordered, ex1_p, ex_q));
    EXPECT_EQ(r.at("class"), "b");
    EXPECT_NEAR(r.at("length").get<double>(), 25.2455, 1e-4);
    EXPECT_NEAR(r.at("beta_or_alpha").get<double>(), 0.1736, 1e-4);
    EXPECT_NEAR(r.at("contact").at("u").at(0).get<double>(), 0.4622, 1e-4);
    EXPECT_NEAR(r.at("contact").at("x").at(1).get<double>(), -2.8468, 1e-4);
    EXPECT_NEAR(r.at("straight_length").get<double>(), 25.2190, 1e-4);
    EXPECT_EQ(r.at("samples").size(), 256u);
}

TEST(CmdGeodesic, SamplesMatchEndpointsAndLength) {
    for (SpaceKind space : {SpaceKind::ordered, SpaceKind::unordered, SpaceKind::alt}) {
        QuerySpec s = query(space, ex1_p, ex_q);
        s.samples = 4001;
        const json r = cmd_geodesic(s);
        const auto pts = samples_of(r);
        EXPECT_LT(config_max_abs_diff(pts.front(), OrderedConfig(Vec{-6, 4}, Vec{6, 8})), 1e-9 * 10);
        const OrderedConfig end = pts.back();
        const bool direct = config_max_abs_diff(end, OrderedConfig(Vec{8, -6}, Vec{2, -10})) < 1e-8;
        const bool swapped = config_max_abs_diff(end, OrderedConfig(Vec{2, -10}, Vec{8, -6})) < 1e-8;
        EXPECT_TRUE(space == SpaceKind::unordered ? (direct || swapped) : direct);
        if (space != SpaceKind::alt) {
            const double len = r.at("length").get<double>();
            EXPECT_NEAR(sampled_length(r), len, 1e-4 * len) << space_label(space);
        }
    }
}

TEST(CmdGeodesic, UnorderedUsesTheShorterPairing) {
    const json r = cmd_geodesic(query(SpaceKind::unordered, ex1_p, ex_q));
    EXPECT_EQ(r.at("class"), "linear");
    EXPECT_NEAR(r.at("length").get<double>(), std::sqrt(460.0), 1e-8);
    EXPECT_EQ(r.at("length"), r.at("d_U"));
}

TEST(CmdGeodesic, ConstantQuery) {
    const json r = cmd_geodesic(query(SpaceKind::ordered, ex1_p, ex1_p));
    EXPECT_EQ(r.at("length").get<double>(), 0.0);
    for (const auto& c : samples_of(r)) EXPECT_EQ(c, OrderedConfig(Vec{-6, 4}, Vec{6, 8}));
}

TEST(CmdGeodesic, TypeCNeedsW) {
    EXPECT_THROW((void)cmd_geodesic(query(SpaceKind::ordered, ex2_p, ex_q)), GeoError);
    QuerySpec s = query(SpaceKind::ordered, ex2_p, ex_q);
    s.w = std::vector<double>{2 / std::sqrt(13.0), -3 / std::sqrt(13.0)};
    const json r = cmd_geodesic(s);
    EXPECT_EQ(r.at("class"), "c");
    EXPECT_NEAR(r.at("length").get<double>(), 28.375, 1e-3);
}

TEST(CmdGeodesic, InfeasibleInput) {
    try {
        (void)cmd_geodesic(query(SpaceKind::ordered, {0, 0, 1, 0}, ex_q));
        FAIL();
    } catch (const GeoError& e) {
        const json j = error_json(e.code(), e.what());
        EXPECT_EQ(j.at("code"), "infeasible");
        EXPECT_FALSE(j.at("message").get<std::string>().empty());
    }
}

// Scaling the inputs and the clearance together scales every length.
TEST(CmdGeodesic, ScaleEpsConsistency) {
    for (double s : {0.5, 3.0, 10.0}) {
        for (SpaceKind space : {SpaceKind::ordered, SpaceKind::unordered, SpaceKind::alt}) {
            const json base = cmd_geodesic(query(space, ex1_p, ex_q));
            std::vector<double> p = ex1_p, q = ex_q;
            for (double& x : p) x *= s;
            for (double& x : q) x *= s;
            QuerySpec scaled = query(space, p, q);
            scaled.scale_eps = 2 * s;
            const json r = cmd_geodesic(scaled);
            EXPECT_NEAR(r.at("length").get<double>(), s * base.at("length").get<double>(),
                        1e-9 * s * base.at("length").get<double>());
            const auto a = samples_of(base), b = samples_of(r);
            for (std::size_t i = 0; i < a.size(); ++i)
                EXPECT_LT(config_max_abs_diff(b[i], OrderedConfig(a[i].first * s, a[i].second * s)), 1e-8 * s);
        }
    }
}

TEST(CmdPlan, Regions) {
    const json r2 = cmd_plan(query(SpaceKind::ordered, ex2_p, ex_q));
    EXPECT_EQ(r2.at("region").at("id"), 0);
    EXPECT_NEAR(r2.at("w").at(0).get<double>(), -0.5547001962, 1e-9);
    EXPECT_NEAR(r2.at("w").at(1).get<double>(), 0.8320502943, 1e-9);
    const json ra = cmd_plan(query(SpaceKind::ordered, {-1, 0, 1, 0}, {5, 0, 7, 0}));
    EXPECT_EQ(ra.at("region").at("id"), 1);
    EXPECT_EQ(ra.at("class"), "a");
    const json rz = cmd_plan(query(SpaceKind::ordered, {-2, 0, 0, 2, 0, 0}, {2, 1, 1, 0, 1, 1}, 3));
    EXPECT_EQ(rz.at("region").at("id"), 2);
    EXPECT_EQ(rz.at("w"), json::parse("[0.0, 1.0, 0.0]"));
    const json ru = cmd_plan(query(SpaceKind::unordered, ex1_p, ex_q));
    EXPECT_EQ(ru.at("region").at("space"), "unordered");
    const json rt = cmd_plan(query(SpaceKind::alt, {-1, 0, 1, 0}, {1, 0, -1, 0}));
    EXPECT_TRUE(rt.at("region").is_null());
    EXPECT_NEAR(rt.at("w").at(1).get<double>(), 1.0, 1e-12);
}

TEST(CmdVerify, FixtureAndSmallCampaign) {
    VerifySpec v;
    v.fixture = VerifyFixture::ex1;
    const json r = cmd_verify(v);
    EXPECT_TRUE(r.at("all_pass").get<bool>());
    EXPECT_EQ(r.at("count"), 1);
    EXPECT_EQ(r.at("instances").at(0).at("status"), "PASS");

    VerifySpec c;
    c.count = 4;
    c.n = 3;
    c.waypoints = 100;
    const json rc = cmd_verify(c);
    EXPECT_EQ(rc.at("instances").size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(rc.at("instances").at(i).at("id"), i);
    EXPECT_LE(rc.at("min_rel_gap").get<double>(), rc.at("max_rel_gap").get<double>());
    c.count = 0;
    EXPECT_THROW((void)cmd_verify(c), GeoError);
}

TEST(DefaultSeed, EnvironmentOverride) {
    ::unsetenv("GEOCONFIG_SEED");
    EXPECT_EQ(default_seed(), 7u);
    ::setenv("GEOCONFIG_SEED", "42", 1);
    EXPECT_EQ(default_seed(), 42u);
    ::setenv("GEOCONFIG_SEED", "x", 1);
    EXPECT_THROW((void)default_seed(), GeoError);
    ::unsetenv("GEOCONFIG_SEED");
}

TEST(Figures, DeterministicWithContactCircles) {
    for (Figure f : {Figure::fig1, Figure::fig2, Figure::fig3}) EXPECT_EQ(render_figure(f), render_figure(f));
    const auto c1 = support::contact_circles(render_figure(Figure::fig1));
    EXPECT_EQ(c1.size(), 2u);
    EXPECT_TRUE(support::has_circle_near(c1, 3.16, -2.847, 1.0, 1e-2));
    EXPECT_TRUE(support::has_circle_near(c1, 3.247, -3.093, 1.0, 1e-2));
    const std::string fig2 = render_figure(Figure::fig2);
    EXPECT_TRUE(support::has_circle_near(support::contact_circles(fig2), 3.2385, -2.3633, 1.0, 1e-2));
    std::size_t lines = 0;
    for (std::size_t pos = 0; (pos = fig2.find("<polyline", pos)) != std::string::npos; ++pos) ++lines;
    EXPECT_EQ(lines, 4u);
    EXPECT_TRUE(support::contact_circles(render_figure(Figure::fig3)).empty());
    EXPECT_EQ(parse_figure("fig2"), Figure::fig2);
    EXPECT_THROW((void)parse_figure("fig9"), GeoError);
}

TEST(Figures, QueryRenderingPlaneOnly) {
    const std::string svg = render_query(query(SpaceKind::ordered, ex1_p, ex_q));
    EXPECT_EQ(support::contact_circles(svg).size(), 2u);
    try {
        (void)render_query(query(SpaceKind::ordered, {0, 0, 0, 2, 0, 0}, {0, 0, 0, 2, 0, 0}, 3));
        FAIL();
    } catch (const GeoError& e) {
        EXPECT_NE(std::string(e.what()).find("figures only in the plane"), std::string::npos);
    }
    const std::string su = render_query(query(SpaceKind::unordered, ex1_p, ex_q));
    EXPECT_NE(su.find("<svg"), std::string::npos);
    EXPECT_EQ(su, render_query(query(SpaceKind::unordered, ex1_p, ex_q)));
}

}  // namespace
