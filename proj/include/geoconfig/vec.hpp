#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "geoconfig/error.hpp"

namespace geoconfig {

// Tolerance for unit-norm and clearance invariants.
inline constexpr double tol_feas = 1e-12;

// Runtime-dimension real vector. Arithmetic between vectors of different
// dimension throws GeoError(dimension_mismatch).
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n, double fill = 0.0) : c_(n, fill) {}
    Vec(std::initializer_list<double> coords) : c_(coords) {}
    explicit Vec(std::vector<double> coords) : c_(std::move(coords)) {}
    explicit Vec(std::span<const double> coords) : c_(coords.begin(), coords.end()) {}

    static Vec unit(std::size_t n, std::size_t axis);

    std::size_t dim() const noexcept { return c_.size(); }
    double& operator[](std::size_t i) { return c_[i]; }
    double operator[](std::size_t i) const { return c_[i]; }
    std::span<const double> coords() const noexcept { return c_; }
    const std::vector<double>& data() const noexcept { return c_; }

    bool is_finite() const;

    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec& operator*=(double s);
    Vec& operator/=(double s);

    friend bool operator==(const Vec&, const Vec&) = default;

private:
    std::vector<double> c_;
};

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator-(Vec a);
Vec operator*(Vec a, double s);
Vec operator*(double s, Vec a);
Vec operator/(Vec a, double s);

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
double norm(const Vec& a);
double distance(const Vec& a, const Vec& b);
Vec normalized(const Vec& a);
// (1-t)a + tb
Vec lerp(const Vec& a, const Vec& b, double t);
// Angle in [0, pi] between nonzero vectors, accurate near 0 and pi.
double angle_between(const Vec& a, const Vec& b);
// Lexicographic comparison of coordinates.
bool lex_less(const Vec& a, const Vec& b);
double max_abs_diff(const Vec& a, const Vec& b);

void require_same_dim(const Vec& a, const Vec& b);

std::ostream& operator<<(std::ostream& os, const Vec& v);

// An ordered pair (a, a') of points in R^n. Coincident points are
// representable; entry points into the clearance-constrained space reject
// them (see require_f0).
struct OrderedConfig {
    Vec first;
    Vec second;

    OrderedConfig() = default;
    OrderedConfig(Vec a, Vec b);

    std::size_t dim() const noexcept { return first.dim(); }
    double gap() const { return distance(first, second); }
    OrderedConfig swapped() const { return {second, first}; }

    friend bool operator==(const OrderedConfig&, const OrderedConfig&) = default;
};

// Flattened (a, a') in R^{2n}.
std::vector<double> flatten(const OrderedConfig& p);
OrderedConfig unflatten(std::span<const double> flat);

// Euclidean distance in R^{2n}.
double config_distance(const OrderedConfig& p, const OrderedConfig& q);
double config_max_abs_diff(const OrderedConfig& p, const OrderedConfig& q);

struct HalvingData {
    Vec h;  // (a' - a) / 2
    Vec mid;  // (a' + a) / 2
};

HalvingData halving_data(const OrderedConfig& p);
OrderedConfig from_halving(const Vec& mid, const Vec& h);

// Throws GeoError(infeasible) unless |a' - a| >= 2 - tol_feas.
void require_f0(const OrderedConfig& p, const char* what = "configuration");
bool in_f0(const OrderedConfig& p);

// A point (x - u, x + u) of the boundary of F0.
class BoundaryPoint {
public:
    BoundaryPoint(Vec center, Vec unit_dir);

    const Vec& center() const noexcept { return x_; }
    const Vec& dir() const noexcept { return u_; }
    OrderedConfig config() const { return {x_ - u_, x_ + u_}; }

private:
    Vec x_;
    Vec u_;
};

// Whether the segment from p to the boundary point c stays in F0,
// decided by h.u >= 1.
bool segment_feasible(const OrderedConfig& p, const BoundaryPoint& c);

}  // namespace geoconfig
