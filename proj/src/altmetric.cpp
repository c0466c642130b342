#include "geoconfig/altmetric.hpp"

#include <cmath>
#include <numbers>

#include "geoconfig/fields.hpp"

namespace geoconfig::altmetric {

AltCoords to_alt(const OrderedConfig& p) {
    if (!p.first.is_finite() || !p.second.is_finite())
        throw GeoError(ErrorCode::invalid_argument, "configuration has non-finite coordinates");
    const Vec h = (p.second - p.first) * 0.5;
    const double r = norm(h);
    if (r == 0.0) throw GeoError(ErrorCode::degenerate, "coincident points are not in F(R^n,2)");
    return {(p.second + p.first) * 0.5, h / r, r};
}

OrderedConfig from_alt(const AltCoords& c) {
    return {c.mid - c.radius * c.dir, c.mid + c.radius * c.dir};
}

double sphere_distance(const Vec& a, const Vec& b) {
    // half-angle atan2 form: exact zero for equal inputs, precise near 0 and pi
    return 2.0 * std::atan2(distance(a, b), norm(a + b));
}

double alt_distance(const AltCoords& x, const AltCoords& y) {
    const double dm = distance(x.mid, y.mid);
    const double ds = sphere_distance(x.dir, y.dir);
    const double dr = y.radius - x.radius;
    return std::sqrt(dm * dm + ds * ds + dr * dr);
}

double d_prime(const OrderedConfig& p, const OrderedConfig& q) {
    require_same_dim(p.first, q.first);
    return alt_distance(to_alt(p), to_alt(q));
}

AltPath::AltPath(const OrderedConfig& p, const OrderedConfig& q, const Vec* via)
    : start_(to_alt(p)), end_(to_alt(q)) {
    require_same_dim(p.first, q.first);
    const Vec& u = start_.dir;
    const double c = dot(u, end_.dir);
    const Vec perp = end_.dir - c * u;
    const double s = norm(perp);
    alpha_ = s > 0.0 ? sphere_distance(u, end_.dir) : (c > 0.0 ? 0.0 : std::numbers::pi);
    if (std::numbers::pi - alpha_ <= tol_antipodal) {
        if (!via) throw GeoError(ErrorCode::non_unique, "antipodal directions: geodesic is non-unique; use plan_alt");
        tangent_ = normalized(*via - dot(*via, u) * u);
        alpha_ = std::numbers::pi;
    } else if (s > 0.0) {
        tangent_ = perp / s;
    } else {
        tangent_ = Vec(u.dim());
    }
}

AltCoords AltPath::coords(double t) const {
    if (t <= 0.0) return start_;
    if (t >= 1.0) return end_;
    Vec dir = alpha_ == 0.0 ? start_.dir
                            : std::cos(t * alpha_) * start_.dir + std::sin(t * alpha_) * tangent_;
    return {lerp(start_.mid, end_.mid, t), std::move(dir), (1.0 - t) * start_.radius + t * end_.radius};
}

double AltPath::length() const {
    const double dm = distance(start_.mid, end_.mid);
    const double dr = end_.radius - start_.radius;
    return std::sqrt(dm * dm + alpha_ * alpha_ + dr * dr);
}

std::vector<OrderedConfig> AltPath::sample(std::size_t count) const {
    std::vector<OrderedConfig> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(eval(count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1)));
    return out;
}

AltPath geodesic_alt(const OrderedConfig& p, const OrderedConfig& q) { return AltPath(p, q, nullptr); }

AltPath plan_alt(const OrderedConfig& p, const OrderedConfig& q) {
    const AltCoords a = to_alt(p);
    const AltCoords b = to_alt(q);
    if (std::numbers::pi - sphere_distance(a.dir, b.dir) > tol_antipodal) return AltPath(p, q, nullptr);
    const Vec via = fields::tangent_choice(a.dir);
    return AltPath(p, q, &via);
}

double product_polyline_length(const AltPath& path, std::size_t samples) {
    if (samples < 2) throw GeoError(ErrorCode::invalid_argument, "at least two samples are required");
    double total = 0.0;
    AltCoords prev = path.coords(0.0);
    for (std::size_t i = 1; i < samples; ++i) {
        AltCoords cur = path.coords(static_cast<double>(i) / static_cast<double>(samples - 1));
        total += alt_distance(prev, cur);
        prev = std::move(cur);
    }
    return total;
}

}  // namespace geoconfig::altmetric
