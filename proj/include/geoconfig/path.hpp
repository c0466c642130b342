#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "geoconfig/vec.hpp"

namespace geoconfig {

struct LinearSegment {
    OrderedConfig from;
    OrderedConfig to;

    double length() const { return config_distance(from, to); }
    OrderedConfig eval(double s) const;
};

// Geodesic in the boundary of F0 from (x - u, x + u) to (y - v, y + v): the
// midpoint moves linearly while the contact direction rotates along the
// great circle from u to v,
//   u(s) = cos(s*alpha) u + sin(s*alpha) e,   e = unit tangent at u toward v.
// For alpha in (0, pi) this equals (sin((1-s)alpha) u + sin(s alpha) v) / sin(alpha).
class BoundaryArc {
public:
    // alpha >= pi throws unless `via` supplies the rotation plane (a unit
    // vector orthogonal to u), which is needed to pick one of the half-turns.
    BoundaryArc(Vec x, Vec y, Vec u, Vec v, std::optional<Vec> via = std::nullopt);

    const Vec& x() const noexcept { return x_; }
    const Vec& y() const noexcept { return y_; }
    const Vec& u() const noexcept { return u_; }
    const Vec& v() const noexcept { return v_; }
    const Vec& tangent() const noexcept { return e_; }
    double alpha() const noexcept { return alpha_; }

    // sqrt(2 (|x - y|^2 + alpha^2))
    double length() const;
    Vec direction(double s) const;
    Vec center(double s) const { return lerp(x_, y_, s); }
    OrderedConfig eval(double s) const;

private:
    Vec x_, y_, u_, v_, e_;
    double alpha_ = 0.0;
};

using Segment = std::variant<LinearSegment, BoundaryArc>;

double segment_length(const Segment& seg);
OrderedConfig segment_eval(const Segment& seg, double s);

// Piecewise path parametrized over [0, 1] at constant speed: each segment
// receives a time share proportional to its length.
class GeodesicPath {
public:
    explicit GeodesicPath(std::vector<Segment> segments);

    static GeodesicPath linear(const OrderedConfig& p, const OrderedConfig& q);

    const std::vector<Segment>& segments() const noexcept { return segments_; }
    double total_length() const noexcept { return total_; }
    std::size_t dim() const;

    OrderedConfig eval(double t) const;
    OrderedConfig start() const { return eval(0.0); }
    OrderedConfig end() const { return eval(1.0); }

    // `count` configurations at t = i / (count - 1).
    std::vector<OrderedConfig> sample(std::size_t count) const;

private:
    std::vector<Segment> segments_;
    std::vector<double> lengths_;
    std::vector<double> cumulative_;  // cumulative_[i] = length before segment i
    double total_ = 0.0;
};

using PathEval = std::function<OrderedConfig(double)>;

inline PathEval evaluator(const GeodesicPath& path) {
    return [&path](double t) { return path.eval(t); };
}

}  // namespace geoconfig
