#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <regex>
#include <string>
#include <vector>

#include "geoconfig/path.hpp"
#include "geoconfig/vec.hpp"

// Generators and reference computations shared by the unit tests and the
// acceptance binary. Nothing here calls the library's own solvers.
namespace support {

using geoconfig::OrderedConfig;
using geoconfig::Vec;

inline Vec random_vec(std::size_t n, double lo, double hi, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(lo, hi);
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = d(rng);
    return v;
}

inline Vec random_unit(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> d;
    for (;;) {
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = d(rng);
        const double r = geoconfig::norm(v);
        if (r > 1e-3) return v / r;
    }
}

inline double uniform(double lo, double hi, std::mt19937_64& rng) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// (A - h, A + h) with |h| drawn from [rmin, rmax].
inline OrderedConfig random_config(std::size_t n, std::mt19937_64& rng, double rmin = 1.0, double rmax = 3.0,
                                   double box = 4.0) {
    const Vec mid = random_vec(n, -box, box, rng);
    const Vec h = random_unit(n, rng) * uniform(rmin, rmax, rng);
    return {mid - h, mid + h};
}

inline OrderedConfig config_from(const Vec& mid, const Vec& h) { return {mid - h, mid + h}; }

inline Vec half_sep(const OrderedConfig& p) { return (p.second - p.first) / 2.0; }
inline Vec midpoint(const OrderedConfig& p) { return (p.second + p.first) / 2.0; }

// Pair whose half-separations are antiparallel: k = -c h.
inline std::pair<OrderedConfig, OrderedConfig> random_antiparallel(std::size_t n, std::mt19937_64& rng) {
    const Vec dir = random_unit(n, rng);
    const Vec h = dir * uniform(1.0, 3.0, rng);
    const Vec k = dir * -uniform(1.0, 3.0, rng);
    return {config_from(random_vec(n, -4, 4, rng), h), config_from(random_vec(n, -4, 4, rng), k)};
}

// Exact minimum over t in [0, 1] of 2 |(1 - t) h + t k|, by minimizing the quadratic.
inline double linear_min_gap(const Vec& h, const Vec& k) {
    const Vec d = k - h;
    const double dd = geoconfig::dot(d, d);
    double t = dd > 0 ? -geoconfig::dot(h, d) / dd : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return 2.0 * geoconfig::norm(h + d * t);
}

using Eval = std::function<OrderedConfig(double)>;

inline double dense_min_gap(const Eval& f, std::size_t samples) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
        const OrderedConfig c = f(static_cast<double>(i) / static_cast<double>(samples - 1));
        best = std::min(best, geoconfig::distance(c.first, c.second));
    }
    return best;
}

inline double dense_polyline(const Eval& f, std::size_t samples) {
    double total = 0.0;
    OrderedConfig prev = f(0.0);
    for (std::size_t i = 1; i < samples; ++i) {
        const OrderedConfig c = f(static_cast<double>(i) / static_cast<double>(samples - 1));
        total += geoconfig::config_distance(prev, c);
        prev = std::move(c);
    }
    return total;
}

inline Eval eval_of(const geoconfig::GeodesicPath& p) {
    return [&p](double t) { return p.eval(t); };
}

inline Eval linear_eval(const OrderedConfig& p, const OrderedConfig& q) {
    return [p, q](double t) {
        return OrderedConfig(geoconfig::lerp(p.first, q.first, t), geoconfig::lerp(p.second, q.second, t));
    };
}

// Sup over sample times of the coordinate difference of two paths.
inline double sup_deviation(const Eval& f, const Eval& g, std::size_t samples) {
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
        worst = std::max(worst, geoconfig::config_max_abs_diff(f(t), g(t)));
    }
    return worst;
}

// Minimal contact pair found inside the plane of h and k: each unit u with
// h.u = 1 is one of two reflections about h, likewise for v; the best of the
// four combinations has the smallest angle.
struct PlanarPair {
    Vec u, v;
    double beta;
};

inline PlanarPair planar_minimal_pair(const Vec& h, const Vec& k) {
    const std::size_t n = h.dim();
    const Vec e1 = h / geoconfig::norm(h);
    Vec rest = k - e1 * geoconfig::dot(k, e1);
    const Vec e2 = rest / geoconfig::norm(rest);
    const double th = 0.0;
    const double tk = std::atan2(geoconfig::dot(k, e2), geoconfig::dot(k, e1));
    const double ah = std::acos(std::min(1.0, 1.0 / geoconfig::norm(h)));
    const double ak = std::acos(std::min(1.0, 1.0 / geoconfig::norm(k)));
    auto at = [&](double angle) { return e1 * std::cos(angle) + e2 * std::sin(angle); };
    PlanarPair best{Vec(n), Vec(n), std::numeric_limits<double>::infinity()};
    for (double su : {-1.0, 1.0}) {
        for (double sv : {-1.0, 1.0}) {
            const Vec u = at(th + su * ah);
            const Vec v = at(tk + sv * ak);
            const double c = std::clamp(geoconfig::dot(u, v), -1.0, 1.0);
            const double beta = std::acos(c);
            if (beta < best.beta) best = {u, v, beta};
        }
    }
    return best;
}

// Parse the circles tagged class="contact" out of an SVG document.
struct SvgCircle {
    double cx, cy, r;
};

inline std::vector<SvgCircle> contact_circles(const std::string& svg) {
    static const std::regex re(R"re(<circle class="contact" cx="([-0-9.]+)" cy="([-0-9.]+)" r="([-0-9.]+)")re");
    std::vector<SvgCircle> out;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
        out.push_back({std::stod((*it)[1]), std::stod((*it)[2]), std::stod((*it)[3])});
    return out;
}

inline bool has_circle_near(const std::vector<SvgCircle>& cs, double x, double y, double r, double tol) {
    return std::any_of(cs.begin(), cs.end(), [&](const SvgCircle& c) {
        return std::abs(c.cx - x) <= tol && std::abs(c.cy - y) <= tol && std::abs(c.r - r) <= tol;
    });
}

}  // namespace support
