#pragma once

#include <vector>

#include "geoconfig/vec.hpp"

// F(R^n, 2) viewed as R^n x S^{n-1} x R+ through
//   (a, a') -> ((a' + a)/2, (a' - a)/|a' - a|, |a' - a|/2)
// with the product of the Euclidean, great-circle and Euclidean metrics.
// Every pair of configurations is joined by a geodesic in this metric.
namespace geoconfig::altmetric {

inline constexpr double tol_antipodal = 1e-9;

struct AltCoords {
    Vec mid;
    Vec dir;  // unit
    double radius = 0.0;  // half-separation
};

AltCoords to_alt(const OrderedConfig& p);
OrderedConfig from_alt(const AltCoords& c);

// Great-circle distance between unit vectors.
double sphere_distance(const Vec& a, const Vec& b);

double d_prime(const OrderedConfig& p, const OrderedConfig& q);

// Product-metric distance between two coordinate triples.
double alt_distance(const AltCoords& x, const AltCoords& y);

// Constant-speed geodesic: midpoint and radius interpolate linearly, the
// direction moves along a great circle.
class AltPath {
public:
    // `via` fixes the great semicircle when the directions are antipodal.
    AltPath(const OrderedConfig& p, const OrderedConfig& q, const Vec* via);

    AltCoords coords(double t) const;
    OrderedConfig eval(double t) const { return from_alt(coords(t)); }
    double length() const;
    double alpha() const noexcept { return alpha_; }
    std::vector<OrderedConfig> sample(std::size_t count) const;

private:
    AltCoords start_, end_;
    Vec tangent_;
    double alpha_ = 0.0;
};

// Unique geodesic; throws GeoError(non_unique) for antipodal directions.
AltPath geodesic_alt(const OrderedConfig& p, const OrderedConfig& q);

// geodesic_alt, or for antipodal directions the semicircle through the
// planner's tangent field at the start direction.
AltPath plan_alt(const OrderedConfig& p, const OrderedConfig& q);

// Polyline length in the product metric over `samples` equally spaced times.
double product_polyline_length(const AltPath& path, std::size_t samples);

}  // namespace geoconfig::altmetric
