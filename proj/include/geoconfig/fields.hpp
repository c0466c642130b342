#pragma once

#include "geoconfig/vec.hpp"

// Unit tangent vector fields on S^{n-1} used to pick one geodesic
// continuously when the minimal geodesic is not unique.
namespace geoconfig::fields {

inline constexpr double tol_axis = 1e-9;

// n even: V(x1, x2, ..., x2m) = (-x2, x1, -x4, x3, ...).
Vec even_field(const Vec& x);

// n odd, x not in {+e1, -e1}: normalize(e1 - (e1.x) x).
Vec punctured_field(const Vec& x);

// Whether a unit x lies within tol_axis (angular) of the e1 axis, either sign.
bool on_e1_axis(const Vec& x);

// (0, 1, 0, ..., 0)
Vec axis_fallback(std::size_t n);

// The field for the dimension's parity; on the e1 axis in odd dimension the
// fallback direction is returned.
Vec tangent_choice(const Vec& unit_x);

}  // namespace geoconfig::fields
