#include "geoconfig/fields.hpp"

#include <cmath>

namespace geoconfig::fields {

Vec even_field(const Vec& x) {
    if (x.dim() % 2 != 0) throw GeoError(ErrorCode::invalid_argument, "even_field needs even dimension");
    Vec v(x.dim());
    for (std::size_t i = 0; i + 1 < x.dim(); i += 2) {
        v[i] = -x[i + 1];
        v[i + 1] = x[i];
    }
    return v;
}

bool on_e1_axis(const Vec& x) {
    double perp2 = 0.0;
    for (std::size_t i = 1; i < x.dim(); ++i) perp2 += x[i] * x[i];
    return std::sqrt(perp2) <= tol_axis * norm(x);
}

Vec punctured_field(const Vec& x) {
    if (on_e1_axis(x))
        throw GeoError(ErrorCode::out_of_domain, "punctured field is undefined on the e1 axis");
    const Vec e1 = Vec::unit(x.dim(), 0);
    return normalized(e1 - x[0] * x);
}

Vec axis_fallback(std::size_t n) { return Vec::unit(n, 1); }

Vec tangent_choice(const Vec& unit_x) {
    if (unit_x.dim() % 2 == 0) return even_field(unit_x);
    if (on_e1_axis(unit_x)) return axis_fallback(unit_x.dim());
    return punctured_field(unit_x);
}

}  // namespace geoconfig::fields
