#pragma once

#include <optional>
#include <vector>

#include "geoconfig/path.hpp"
#include "geoconfig/vec.hpp"

// Minimal geodesics in F0(R^n, 2) = {(a, a') : |a' - a| >= 2}, the space of
// ordered pairs of disjoint open unit balls, with the Euclidean metric of R^{2n}.
namespace geoconfig::ordered {

inline constexpr double tol_class = 1e-9;
inline constexpr double tol_par = 1e-10;

// Scalars and vectors derived from a query pair P = (a, a'), Q = (b, b').
struct PairGeometry {
    Vec h, k;    // half-differences (a' - a)/2, (b' - b)/2
    Vec A, B;    // midpoints
    double H = 0, K = 0, D = 0;  // |h|^2, |k|^2, h.k
    double gram = 0;             // HK - D^2, computed as |h ^ k|^2
    double S0 = 0, S1 = 0;       // sqrt(H - 1), sqrt(K - 1)
    double delta = 0;            // minimal gap along the linear path P -> Q

    std::size_t dim() const { return h.dim(); }
    // h and k parallel (either orientation), scale-invariant.
    bool parallel() const { return gram <= tol_par * H * K; }
    bool antiparallel() const { return parallel() && D < 0.0; }
};

PairGeometry pair_geometry(const OrderedConfig& p, const OrderedConfig& q);

enum class GeodesicType { TypeA, TypeB, TypeC };

const char* type_name(GeodesicType t);

// Contact data of a two-sided geodesic: unit directions u, v with
// h.u = 1 = k.v, their angle beta, and the centers x, y of the boundary arc.
struct Contact {
    Vec u, v;
    double beta = 0.0;
    Vec x, y;
};

struct GeodesicClass {
    GeodesicType type = GeodesicType::TypeA;
    PairGeometry geometry;
    std::optional<Contact> contact;  // TypeB
    std::vector<Vec> w_basis;        // TypeC: orthonormal basis of h-perp
};

GeodesicClass classify(const OrderedConfig& p, const OrderedConfig& q);

struct UnitPair {
    Vec u, v;
};

// Unique minimal pair for non-parallel h, k with |h|, |k| > 1.
UnitPair solve_uv(const PairGeometry& g);

// Minimal pair for antiparallel h, k and a unit w orthogonal to h.
UnitPair solve_uv_parallel(const PairGeometry& g, const Vec& w);

// u, v for a type (b) pair, including the boundary-endpoint shortcut
// (|h| = 1 gives u = h, |k| = 1 gives v = k).
UnitPair contact_directions(const PairGeometry& g);

enum class BetaMode { NonParallel, Parallel };

// Angle between the minimal u and v, from its closed-form cosine.
double beta_of(const PairGeometry& g, BetaMode mode);

struct ContactPoints {
    Vec x, y;
};

ContactPoints contact_points(const PairGeometry& g, double beta);

// Geodesic of the boundary from (x - u, x + u) to (y - v, y + v).
BoundaryArc boundary_geodesic(const Vec& x, const Vec& y, const Vec& u, const Vec& v);

struct OrderedGeodesic {
    GeodesicClass cls;
    std::optional<Contact> contact;  // TypeB, or TypeC for the chosen w
    std::optional<Vec> w;            // TypeC choice
    GeodesicPath path;
};

// TypeC pairs require `w` (unit, orthogonal to h).
OrderedGeodesic solve_geodesic(const OrderedConfig& p, const OrderedConfig& q,
                               const std::optional<Vec>& w = std::nullopt);

GeodesicPath geodesic(const OrderedConfig& p, const OrderedConfig& q,
                      const std::optional<Vec>& w = std::nullopt);

// Closed-form length of the minimal geodesic.
double geodesic_length(const OrderedConfig& p, const OrderedConfig& q);

// At delta = 2 the minimal u equals v and equals (S1 h + S0 k)/(S0 + S1).
bool convex_u_identity_check(const PairGeometry& g);

// Orthonormal basis of the orthogonal complement of a nonzero vector.
std::vector<Vec> orthonormal_complement(const Vec& h);

}  // namespace geoconfig::ordered
