#include "geoconfig/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>

#include "geoconfig/altmetric.hpp"
#include "geoconfig/oracle.hpp"
#include "geoconfig/planner.hpp"
#include "report_internal.hpp"

namespace geoconfig::cli {

namespace {

json vec_json(const Vec& v, double scale = 1.0) {
    json arr = json::array();
    for (double x : v.data()) arr.push_back(sig10(x * scale));
    return arr;
}

json config_json(const OrderedConfig& c, double scale = 1.0) {
    return json::array({vec_json(c.first, scale), vec_json(c.second, scale)});
}

json samples_json(const std::vector<OrderedConfig>& samples, double scale) {
    json arr = json::array();
    for (const OrderedConfig& c : samples) arr.push_back(config_json(c, scale));
    return arr;
}

json region_json(const planner::PlannerRegion& r) {
    return {{"space", planner::space_name(r.space)}, {"id", r.region_id}, {"descriptor", r.descriptor}};
}

json contact_json(const ordered::Contact& c, double scale) {
    return {{"u", vec_json(c.u)}, {"v", vec_json(c.v)}, {"x", vec_json(c.x, scale)}, {"y", vec_json(c.y, scale)}};
}

json ordered_report(const ordered::OrderedGeodesic& g, const detail::NormalizedQuery& nq, std::size_t samples) {
    const double s = nq.scale;
    json r;
    r["space"] = "ordered";
    r["n"] = nq.p.dim();
    r["class"] = ordered::type_name(g.cls.type);
    r["length"] = sig10(g.path.total_length() * s);
    r["straight_length"] = sig10(config_distance(nq.p, nq.q) * s);
    r["delta"] = sig10(g.cls.geometry.delta * s);
    r["beta_or_alpha"] = sig10(g.contact ? g.contact->beta : 0.0);
    r["contact"] = g.contact ? contact_json(*g.contact, s) : json(nullptr);
    r["w"] = g.w ? vec_json(*g.w) : json(nullptr);
    r["samples"] = samples_json(g.path.sample(samples), s);
    return r;
}

json unordered_report(const unordered::UnorderedConfig& up, const unordered::UnorderedConfig& uq,
                      unordered::Pairing pairing, const GeodesicPath& path, double scale, std::size_t samples) {
    json r;
    r["space"] = "unordered";
    r["n"] = up.dim();
    r["class"] = "linear";
    r["length"] = sig10(path.total_length() * scale);
    r["d_U"] = sig10(unordered::d_U(up, uq) * scale);
    r["pairing"] = unordered::pairing_name(pairing);
    r["beta_or_alpha"] = 0.0;
    r["contact"] = nullptr;
    r["samples"] = samples_json(path.sample(samples), scale);
    return r;
}

json alt_report(const altmetric::AltPath& path, const std::optional<Vec>& via, double scale, std::size_t samples) {
    json r;
    r["space"] = "alt";
    r["n"] = path.eval(0.0).dim();
    r["class"] = "alt";
    r["length"] = sig10(path.length() * scale);
    r["beta_or_alpha"] = sig10(path.alpha());
    r["contact"] = nullptr;
    r["w"] = via ? vec_json(*via) : json(nullptr);
    r["samples"] = samples_json(path.sample(samples), scale);
    return r;
}

std::optional<Vec> optional_w(const QuerySpec& spec) {
    if (!spec.w) return std::nullopt;
    return Vec(*spec.w);
}

}  // namespace

SpaceKind parse_space(std::string_view name) {
    if (name == "ordered") return SpaceKind::ordered;
    if (name == "unordered") return SpaceKind::unordered;
    if (name == "alt") return SpaceKind::alt;
    throw GeoError(ErrorCode::invalid_argument, "unknown space '" + std::string(name) + "'");
}

const char* space_label(SpaceKind s) {
    switch (s) {
        case SpaceKind::ordered: return "ordered";
        case SpaceKind::unordered: return "unordered";
        case SpaceKind::alt: return "alt";
    }
    return "?";
}

std::vector<double> parse_coords(std::string_view text) {
    std::vector<double> out;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ' ' || c == ',' || c == '\t' || c == '\n' || c == ';'; };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j])) ++j;
        const std::string token(text.substr(i, j - i));
        char* end = nullptr;
        const double x = std::strtod(token.c_str(), &end);
        if (end != token.c_str() + token.size() || !std::isfinite(x))
            throw GeoError(ErrorCode::invalid_argument, "cannot parse coordinate '" + token + "'");
        out.push_back(x);
        i = j;
    }
    return out;
}

QuerySpec query_from_json(const json& j) {
    try {
        QuerySpec spec;
        spec.space = parse_space(j.value("space", std::string("ordered")));
        spec.n = j.at("n").get<std::size_t>();
        spec.p = j.at("p").get<std::vector<double>>();
        spec.q = j.at("q").get<std::vector<double>>();
        spec.samples = j.value("samples", std::size_t{256});
        if (j.contains("w") && !j.at("w").is_null()) spec.w = j.at("w").get<std::vector<double>>();
        spec.scale_eps = j.value("scale_eps", 2.0);
        return spec;
    } catch (const json::exception& e) {
        throw GeoError(ErrorCode::invalid_argument, std::string("bad query JSON: ") + e.what());
    }
}

void validate(const QuerySpec& spec) {
    if (spec.n < 2) throw GeoError(ErrorCode::invalid_argument, "n must be at least 2");
    auto check = [&](const std::vector<double>& c, const char* name) {
        if (c.size() != 2 * spec.n) {
            std::ostringstream msg;
            msg << name << " needs " << 2 * spec.n << " coordinates, got " << c.size();
            throw GeoError(ErrorCode::dimension_mismatch, msg.str());
        }
        for (double x : c)
            if (!std::isfinite(x)) throw GeoError(ErrorCode::invalid_argument, std::string(name) + " is not finite");
    };
    check(spec.p, "P");
    check(spec.q, "Q");
    if (spec.w && spec.w->size() != spec.n)
        throw GeoError(ErrorCode::dimension_mismatch, "w must have n coordinates");
    if (!(spec.scale_eps > 0.0) || !std::isfinite(spec.scale_eps))
        throw GeoError(ErrorCode::invalid_argument, "scale_eps must be positive");
    if (spec.samples < 2) throw GeoError(ErrorCode::invalid_argument, "samples must be at least 2");
}

double sig10(double x) {
    if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return std::strtod(buf, nullptr);
}

namespace detail {

NormalizedQuery normalize(const QuerySpec& spec) {
    validate(spec);
    const double s = spec.scale_eps / 2.0;
    std::vector<double> p(spec.p), q(spec.q);
    for (double& x : p) x /= s;
    for (double& x : q) x /= s;
    return {unflatten(p), unflatten(q), s};
}

}  // namespace detail

json cmd_geodesic(const QuerySpec& spec) {
    const detail::NormalizedQuery nq = detail::normalize(spec);
    switch (spec.space) {
        case SpaceKind::ordered:
            return ordered_report(ordered::solve_geodesic(nq.p, nq.q, optional_w(spec)), nq, spec.samples);
        case SpaceKind::unordered: {
            const unordered::UnorderedConfig up(nq.p), uq(nq.q);
            const unordered::Pairing best = unordered::best_pairing(up, uq);
            const unordered::Pairing used = best == unordered::Pairing::Tie ? unordered::Pairing::Identity : best;
            return unordered_report(up, uq, used, unordered::geodesic_unordered(up, uq, used), nq.scale,
                                    spec.samples);
        }
        case SpaceKind::alt:
            return alt_report(altmetric::geodesic_alt(nq.p, nq.q), std::nullopt, nq.scale, spec.samples);
    }
    throw GeoError(ErrorCode::invalid_argument, "unknown space");
}

json cmd_plan(const QuerySpec& spec) {
    const detail::NormalizedQuery nq = detail::normalize(spec);
    switch (spec.space) {
        case SpaceKind::ordered: {
            const planner::OrderedPlan plan = planner::plan_ordered_detail(nq.p, nq.q);
            json r = ordered_report(plan.geodesic, nq, spec.samples);
            r["region"] = region_json(plan.region);
            return r;
        }
        case SpaceKind::unordered: {
            const unordered::UnorderedConfig up(nq.p), uq(nq.q);
            const planner::UnorderedPlan plan = planner::plan_unordered_detail(up, uq);
            json r = unordered_report(up, uq, plan.pairing, plan.path, nq.scale, spec.samples);
            r["region"] = region_json(plan.region);
            return r;
        }
        case SpaceKind::alt: {
            const altmetric::AltPath path = altmetric::plan_alt(nq.p, nq.q);
            std::optional<Vec> via;
            if (path.alpha() == std::numbers::pi) via = path.coords(0.5).dir;
            json r = alt_report(path, via, nq.scale, spec.samples);
            r["region"] = nullptr;
            return r;
        }
    }
    throw GeoError(ErrorCode::invalid_argument, "unknown space");
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("GEOCONFIG_SEED")) {
        std::uint64_t v = 0;
        const std::string_view text(env);
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec == std::errc() && ptr == text.data() + text.size()) return v;
        throw GeoError(ErrorCode::invalid_argument, "GEOCONFIG_SEED must be a non-negative integer");
    }
    return 7;
}

QuerySpec example_query(int which) {
    QuerySpec spec;
    spec.space = SpaceKind::ordered;
    spec.n = 2;
    spec.p = which == 2 ? std::vector<double>{-6, 4, 6, 12} : std::vector<double>{-6, 4, 6, 8};
    spec.q = {8, -6, 2, -10};
    return spec;
}

json cmd_verify(const VerifySpec& spec) {
    if (spec.count < 1) throw GeoError(ErrorCode::invalid_argument, "count must be at least 1");
    if (spec.n < 2) throw GeoError(ErrorCode::invalid_argument, "n must be at least 2");
    oracle::OracleOptions opts{spec.waypoints, spec.iters, spec.seed};

    std::vector<oracle::CampaignEntry> entries;
    if (spec.fixture) {
        const QuerySpec q = example_query(*spec.fixture == VerifyFixture::ex2 ? 2 : 1);
        oracle::CampaignEntry e;
        e.query = {unflatten(q.p), unflatten(q.q)};
        e.report = oracle::verify_instance(e.query.p, e.query.q, opts);
        entries.push_back(std::move(e));
    } else {
        entries = oracle::run_campaign(spec.count, spec.n, spec.seed, opts);
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

    json instances = json::array();
    bool all_pass = true;
    double max_gap = -std::numeric_limits<double>::infinity();
    double min_gap = std::numeric_limits<double>::infinity();
    for (const auto& e : entries) {
        const auto& r = e.report;
        all_pass = all_pass && r.pass;
        max_gap = std::max(max_gap, r.rel_gap);
        min_gap = std::min(min_gap, r.rel_gap);
        json item{{"id", e.id},
                  {"P", config_json(e.query.p)},
                  {"Q", config_json(e.query.q)},
                  {"type", ordered::type_name(r.type)},
                  {"analytic", sig10(r.analytic)},
                  {"oracle", sig10(r.oracle)},
                  {"oracle_linear", sig10(r.oracle_linear)},
                  {"rel_gap", sig10(r.rel_gap)},
                  {"min_gap", sig10(r.min_gap)},
                  {"feasible", r.feasible},
                  {"converged", r.converged},
                  {"status", r.pass ? "PASS" : "FAIL"}};
        if (!e.error.empty()) item["error"] = e.error;
        instances.push_back(std::move(item));
    }
    return {{"count", entries.size()},
            {"n", spec.fixture ? std::size_t{2} : spec.n},
            {"seed", spec.seed},
            {"waypoints", spec.waypoints},
            {"iters", spec.iters},
            {"all_pass", all_pass},
            {"max_rel_gap", sig10(max_gap)},
            {"min_rel_gap", sig10(min_gap)},
            {"instances", std::move(instances)}};
}

json error_json(ErrorCode code, std::string_view message) {
    return {{"code", std::string(to_string(code))}, {"message", std::string(message)}};
}

}  // namespace geoconfig::cli
