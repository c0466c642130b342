#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "geoconfig/altmetric.hpp"
#include "geoconfig/planner.hpp"
#include "geoconfig/report.hpp"
#include "report_internal.hpp"

namespace geoconfig::cli {

namespace {

struct Point {
    double x, y;
};

struct Polyline {
    std::vector<Point> pts;
    std::string stroke;
    double width;
    bool dashed;
    std::string role;
};

struct Circle {
    Point c;
    double r;
    std::string role;
};

struct Label {
    Point at;
    std::string text;
};

struct Scene {
    std::string title;
    std::vector<Polyline> lines;
    std::vector<Circle> circles;
    std::vector<Label> labels;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s(buf);
    if (s == "-0.0000") s = "0.0000";
    return s;
}

Point pt(const Vec& v, double scale) { return {v[0] * scale, v[1] * scale}; }

void add_trajectories(Scene& scene, const std::vector<OrderedConfig>& samples, double scale, bool dashed) {
    Polyline first{{}, "#c0392b", 0.12, dashed, "first"};
    Polyline second{{}, "#1f2d3d", 0.12, dashed, "second"};
    for (const OrderedConfig& c : samples) {
        first.pts.push_back(pt(c.first, scale));
        second.pts.push_back(pt(c.second, scale));
    }
    scene.lines.push_back(std::move(first));
    scene.lines.push_back(std::move(second));
}

void add_endpoints(Scene& scene, const OrderedConfig& p, const OrderedConfig& q, double scale) {
    const std::pair<const Vec*, const char*> marks[] = {
        {&p.first, "P1"}, {&p.second, "P2"}, {&q.first, "Q1"}, {&q.second, "Q2"}};
    for (const auto& [v, name] : marks) {
        scene.circles.push_back({pt(*v, scale), 0.18, "endpoint"});
        scene.labels.push_back({{(*v)[0] * scale + 0.5, (*v)[1] * scale + 0.3}, name});
    }
}

void add_contact(Scene& scene, const ordered::Contact& c, double scale) {
    scene.circles.push_back({pt(c.x, scale), scale, "contact"});
    scene.circles.push_back({pt(c.y, scale), scale, "contact"});
}

std::string render(const Scene& scene) {
    double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
    double lo_y = lo_x, hi_y = -lo_x;
    auto grow = [&](double x, double y, double r) {
        lo_x = std::min(lo_x, x - r);
        hi_x = std::max(hi_x, x + r);
        lo_y = std::min(lo_y, y - r);
        hi_y = std::max(hi_y, y + r);
    };
    for (const auto& l : scene.lines)
        for (const auto& p : l.pts) grow(p.x, p.y, 0.0);
    for (const auto& c : scene.circles) grow(c.c.x, c.c.y, c.r);
    const double mx = 0.1 * std::max(hi_x - lo_x, 1.0);
    const double my = 0.1 * std::max(hi_y - lo_y, 1.0);
    lo_x -= mx;
    hi_x += mx;
    lo_y -= my;
    hi_y += my;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"" +
           num(600.0 * (hi_y - lo_y) / (hi_x - lo_x)) + "\" viewBox=\"" + num(lo_x) + " " + num(-hi_y) + " " +
           num(hi_x - lo_x) + " " + num(hi_y - lo_y) + "\">\n";
    out += "<title>" + scene.title + "</title>\n";
    out += "<rect x=\"" + num(lo_x) + "\" y=\"" + num(-hi_y) + "\" width=\"" + num(hi_x - lo_x) +
           "\" height=\"" + num(hi_y - lo_y) + "\" fill=\"white\"/>\n";
    // Data coordinates inside the group; the y axis points up.
    out += "<g transform=\"scale(1,-1)\">\n";
    out += "<g class=\"axes\" stroke=\"#888888\" stroke-width=\"0.05\">\n";
    if (lo_y <= 0.0 && hi_y >= 0.0)
        out += "<line x1=\"" + num(lo_x) + "\" y1=\"0.0000\" x2=\"" + num(hi_x) + "\" y2=\"0.0000\"/>\n";
    if (lo_x <= 0.0 && hi_x >= 0.0)
        out += "<line x1=\"0.0000\" y1=\"" + num(lo_y) + "\" x2=\"0.0000\" y2=\"" + num(hi_y) + "\"/>\n";
    out += "</g>\n";
    for (const auto& l : scene.lines) {
        out += "<polyline class=\"" + l.role + "\" fill=\"none\" stroke=\"" + l.stroke + "\" stroke-width=\"" +
               num(l.width) + "\"";
        if (l.dashed) out += " stroke-dasharray=\"0.4 0.25\"";
        out += " points=\"";
        for (std::size_t i = 0; i < l.pts.size(); ++i) {
            if (i) out += ' ';
            out += num(l.pts[i].x) + "," + num(l.pts[i].y);
        }
        out += "\"/>\n";
    }
    for (const auto& c : scene.circles) {
        const bool contact = c.role == "contact";
        out += "<circle class=\"" + c.role + "\" cx=\"" + num(c.c.x) + "\" cy=\"" + num(c.c.y) + "\" r=\"" +
               num(c.r) + "\" " +
               (contact ? "fill=\"none\" stroke=\"#2c7fb8\" stroke-width=\"0.06\"" : "fill=\"#000000\"") + "/>\n";
    }
    out += "</g>\n";
    for (const auto& l : scene.labels) {
        out += "<text x=\"" + num(l.at.x) + "\" y=\"" + num(-l.at.y) +
               "\" font-size=\"0.8\" font-family=\"sans-serif\">" + l.text + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

constexpr std::size_t figure_samples = 801;

Scene ordered_scene(const detail::NormalizedQuery& nq, const std::optional<Vec>& w, const std::string& title) {
    Scene scene{title, {}, {}, {}};
    const ordered::OrderedGeodesic g =
        w ? ordered::solve_geodesic(nq.p, nq.q, w) : planner::plan_ordered_detail(nq.p, nq.q).geodesic;
    add_trajectories(scene, g.path.sample(figure_samples), nq.scale, false);
    if (g.contact) add_contact(scene, *g.contact, nq.scale);
    add_endpoints(scene, nq.p, nq.q, nq.scale);
    return scene;
}

void require_plane(std::size_t n) {
    if (n != 2) throw GeoError(ErrorCode::invalid_argument, "figures only in the plane (n = 2)");
}

}  // namespace

Figure parse_figure(std::string_view name) {
    if (name == "fig1") return Figure::fig1;
    if (name == "fig2") return Figure::fig2;
    if (name == "fig3") return Figure::fig3;
    throw GeoError(ErrorCode::invalid_argument, "unknown figure '" + std::string(name) + "'");
}

std::string render_figure(Figure fig) {
    switch (fig) {
        case Figure::fig1:
            return render(ordered_scene(detail::normalize(example_query(1)), std::nullopt, "Example of geodesic"));
        case Figure::fig2: {
            const detail::NormalizedQuery nq = detail::normalize(example_query(2));
            const Vec w = Vec{2.0, -3.0} / std::sqrt(13.0);
            Scene scene{"Example of two geodesics", {}, {}, {}};
            bool dashed = false;
            for (const Vec& choice : {w, -w}) {
                const ordered::OrderedGeodesic g = ordered::solve_geodesic(nq.p, nq.q, choice);
                add_trajectories(scene, g.path.sample(figure_samples), nq.scale, dashed);
                if (!dashed) add_contact(scene, *g.contact, nq.scale);
                dashed = true;
            }
            add_endpoints(scene, nq.p, nq.q, nq.scale);
            return render(scene);
        }
        case Figure::fig3: {
            const detail::NormalizedQuery nq = detail::normalize(example_query(1));
            Scene scene{"Geodesic in F(R^2,2) using the product metric", {}, {}, {}};
            add_trajectories(scene, altmetric::plan_alt(nq.p, nq.q).sample(figure_samples), nq.scale, false);
            add_endpoints(scene, nq.p, nq.q, nq.scale);
            return render(scene);
        }
    }
    throw GeoError(ErrorCode::invalid_argument, "unknown figure");
}

std::string render_query(const QuerySpec& spec) {
    require_plane(spec.n);
    const detail::NormalizedQuery nq = detail::normalize(spec);
    switch (spec.space) {
        case SpaceKind::ordered: {
            std::optional<Vec> w;
            if (spec.w) w = Vec(*spec.w);
            return render(ordered_scene(nq, w, "Geodesic in F0(R^2,2)"));
        }
        case SpaceKind::unordered: {
            Scene scene{"Geodesic in C(R^2,2)", {}, {}, {}};
            const unordered::UnorderedConfig up(nq.p), uq(nq.q);
            const GeodesicPath path = planner::plan_unordered(up, uq);
            add_trajectories(scene, path.sample(figure_samples), nq.scale, false);
            add_endpoints(scene, path.start(), path.end(), nq.scale);
            return render(scene);
        }
        case SpaceKind::alt: {
            Scene scene{"Geodesic in F(R^2,2) using the product metric", {}, {}, {}};
            add_trajectories(scene, altmetric::plan_alt(nq.p, nq.q).sample(figure_samples), nq.scale, false);
            add_endpoints(scene, nq.p, nq.q, nq.scale);
            return render(scene);
        }
    }
    throw GeoError(ErrorCode::invalid_argument, "unknown space");
}

}  // namespace geoconfig::cli
