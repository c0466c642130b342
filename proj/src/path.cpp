#include "geoconfig/path.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace geoconfig {

OrderedConfig LinearSegment::eval(double s) const {
    return {lerp(from.first, to.first, s), lerp(from.second, to.second, s)};
}

BoundaryArc::BoundaryArc(Vec x, Vec y, Vec u, Vec v, std::optional<Vec> via)
    : x_(std::move(x)), y_(std::move(y)), u_(std::move(u)), v_(std::move(v)) {
    require_same_dim(x_, y_);
    require_same_dim(x_, u_);
    require_same_dim(x_, v_);
    if (std::abs(norm(u_) - 1.0) > 1e-9 || std::abs(norm(v_) - 1.0) > 1e-9)
        throw GeoError(ErrorCode::invalid_argument, "boundary arc directions must be unit vectors");

    const double c = dot(u_, v_);
    Vec perp = v_ - c * u_;
    const double s = norm(perp);
    alpha_ = std::atan2(s, c);

    constexpr double antipodal_tol = 1e-9;
    if (std::numbers::pi - alpha_ <= antipodal_tol) {
        if (!via) {
            throw GeoError(ErrorCode::out_of_domain,
                           "boundary arc requires angle(u, v) < pi; antipodal directions need a "
                           "rotation plane");
        }
        Vec w = *via - dot(*via, u_) * u_;
        if (norm(w) < 0.5)
            throw GeoError(ErrorCode::invalid_argument, "rotation direction must be orthogonal to u");
        e_ = normalized(w);
        alpha_ = std::numbers::pi;
    } else if (s > 0.0) {
        e_ = perp / s;
    } else {
        e_ = Vec(u_.dim());
    }
}

double BoundaryArc::length() const {
    const double dxy = distance(x_, y_);
    return std::sqrt(2.0 * (dxy * dxy + alpha_ * alpha_));
}

Vec BoundaryArc::direction(double s) const {
    if (s <= 0.0) return u_;
    if (s >= 1.0) return alpha_ == std::numbers::pi ? -u_ : v_;
    if (alpha_ == 0.0) return u_;
    return std::cos(s * alpha_) * u_ + std::sin(s * alpha_) * e_;
}

OrderedConfig BoundaryArc::eval(double s) const {
    const Vec c = center(s);
    const Vec d = direction(s);
    return {c - d, c + d};
}

double segment_length(const Segment& seg) {
    return std::visit([](const auto& s) { return s.length(); }, seg);
}

OrderedConfig segment_eval(const Segment& seg, double s) {
    return std::visit([s](const auto& x) { return x.eval(s); }, seg);
}

GeodesicPath::GeodesicPath(std::vector<Segment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) throw GeoError(ErrorCode::invalid_argument, "path needs at least one segment");
    lengths_.reserve(segments_.size());
    cumulative_.reserve(segments_.size());
    for (const Segment& seg : segments_) {
        lengths_.push_back(segment_length(seg));
        cumulative_.push_back(total_);
        total_ += lengths_.back();
    }
}

GeodesicPath GeodesicPath::linear(const OrderedConfig& p, const OrderedConfig& q) {
    return GeodesicPath({LinearSegment{p, q}});
}

std::size_t GeodesicPath::dim() const { return segment_eval(segments_.front(), 0.0).dim(); }

OrderedConfig GeodesicPath::eval(double t) const {
    t = std::clamp(t, 0.0, 1.0);
    if (total_ == 0.0) return segment_eval(segments_.front(), 0.0);
    if (t == 1.0) return segment_eval(segments_.back(), 1.0);
    const double target = t * total_;
    // last segment whose start is <= target, skipping zero-length segments
    std::size_t i = static_cast<std::size_t>(
        std::upper_bound(cumulative_.begin(), cumulative_.end(), target) - cumulative_.begin());
    i = i == 0 ? 0 : i - 1;
    const double len = lengths_[i];
    const double s = len > 0.0 ? std::clamp((target - cumulative_[i]) / len, 0.0, 1.0) : 0.0;
    return segment_eval(segments_[i], s);
}

std::vector<OrderedConfig> GeodesicPath::sample(std::size_t count) const {
    std::vector<OrderedConfig> out;
    if (count == 0) return out;
    out.reserve(count);
    if (count == 1) {
        out.push_back(eval(0.0));
        return out;
    }
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(eval(static_cast<double>(i) / static_cast<double>(count - 1)));
    return out;
}

}  // namespace geoconfig
