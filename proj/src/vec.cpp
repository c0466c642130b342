#include "geoconfig/vec.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace geoconfig {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::dimension_mismatch: return "dimension_mismatch";
        case ErrorCode::infeasible: return "infeasible";
        case ErrorCode::degenerate: return "degenerate";
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::parallel_input: return "parallel_input";
        case ErrorCode::boundary_endpoint: return "boundary_endpoint";
        case ErrorCode::missing_choice: return "missing_choice";
        case ErrorCode::non_unique: return "non_unique";
        case ErrorCode::out_of_domain: return "out_of_domain";
    }
    return "unknown";
}

Vec Vec::unit(std::size_t n, std::size_t axis) {
    Vec e(n);
    e[axis] = 1.0;
    return e;
}

bool Vec::is_finite() const {
    return std::all_of(c_.begin(), c_.end(), [](double x) { return std::isfinite(x); });
}

void require_same_dim(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) {
        std::ostringstream msg;
        msg << "dimension mismatch: " << a.dim() << " vs " << b.dim();
        throw GeoError(ErrorCode::dimension_mismatch, msg.str());
    }
}

Vec& Vec::operator+=(const Vec& o) {
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Vec& Vec::operator*=(double s) {
    for (double& x : c_) x *= s;
    return *this;
}

Vec& Vec::operator/=(double s) {
    for (double& x : c_) x /= s;
    return *this;
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }
Vec operator-(Vec a) { return a *= -1.0; }
Vec operator*(Vec a, double s) { return a *= s; }
Vec operator*(double s, Vec a) { return a *= s; }
Vec operator/(Vec a, double s) { return a /= s; }

double dot(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vec& a) { return dot(a, a); }
double norm(const Vec& a) { return std::sqrt(norm2(a)); }

double distance(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

Vec normalized(const Vec& a) {
    const double len = norm(a);
    if (len == 0.0) throw GeoError(ErrorCode::degenerate, "cannot normalize the zero vector");
    return a / len;
}

Vec lerp(const Vec& a, const Vec& b, double t) {
    require_same_dim(a, b);
    Vec out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = (1.0 - t) * a[i] + t * b[i];
    return out;
}

double angle_between(const Vec& a, const Vec& b) {
    const Vec ua = normalized(a);
    const Vec ub = normalized(b);
    const double c = dot(ua, ub);
    const double s = norm(ub - c * ua);
    return std::atan2(s, c);
}

bool lex_less(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    return std::lexicographical_compare(a.data().begin(), a.data().end(), b.data().begin(),
                                        b.data().end());
}

double max_abs_diff(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

std::ostream& operator<<(std::ostream& os, const Vec& v) {
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
    return os << ')';
}

OrderedConfig::OrderedConfig(Vec a, Vec b) : first(std::move(a)), second(std::move(b)) {
    require_same_dim(first, second);
}

std::vector<double> flatten(const OrderedConfig& p) {
    std::vector<double> flat(p.first.data());
    flat.insert(flat.end(), p.second.data().begin(), p.second.data().end());
    return flat;
}

OrderedConfig unflatten(std::span<const double> flat) {
    if (flat.size() % 2 != 0)
        throw GeoError(ErrorCode::dimension_mismatch, "flattened configuration has odd length");
    const std::size_t n = flat.size() / 2;
    return {Vec(flat.first(n)), Vec(flat.subspan(n))};
}

double config_distance(const OrderedConfig& p, const OrderedConfig& q) {
    require_same_dim(p.first, q.first);
    const double d1 = distance(p.first, q.first);
    const double d2 = distance(p.second, q.second);
    return std::sqrt(d1 * d1 + d2 * d2);
}

double config_max_abs_diff(const OrderedConfig& p, const OrderedConfig& q) {
    return std::max(max_abs_diff(p.first, q.first), max_abs_diff(p.second, q.second));
}

HalvingData halving_data(const OrderedConfig& p) {
    return {(p.second - p.first) * 0.5, (p.second + p.first) * 0.5};
}

OrderedConfig from_halving(const Vec& mid, const Vec& h) { return {mid - h, mid + h}; }

bool in_f0(const OrderedConfig& p) { return p.gap() >= 2.0 - tol_feas; }

void require_f0(const OrderedConfig& p, const char* what) {
    if (!p.first.is_finite() || !p.second.is_finite())
        throw GeoError(ErrorCode::invalid_argument, std::string(what) + " has non-finite coordinates");
    if (p.dim() < 2)
        throw GeoError(ErrorCode::invalid_argument, std::string(what) + " must have dimension n >= 2");
    if (!in_f0(p)) {
        std::ostringstream msg;
        msg << what << " violates the clearance constraint: |a' - a| = " << p.gap() << " < 2";
        throw GeoError(ErrorCode::infeasible, msg.str());
    }
}

BoundaryPoint::BoundaryPoint(Vec center, Vec unit_dir) : x_(std::move(center)), u_(std::move(unit_dir)) {
    require_same_dim(x_, u_);
    if (std::abs(norm(u_) - 1.0) > tol_feas)
        throw GeoError(ErrorCode::invalid_argument, "boundary point direction must be a unit vector");
}

bool segment_feasible(const OrderedConfig& p, const BoundaryPoint& c) {
    require_f0(p);
    require_same_dim(p.first, c.center());
    const Vec h = (p.second - p.first) * 0.5;
    return dot(h, c.dir()) >= 1.0 - tol_feas;
}

}  // namespace geoconfig
