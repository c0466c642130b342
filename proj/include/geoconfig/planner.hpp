#pragma once

#include <optional>
#include <string>

#include "geoconfig/ordered.hpp"
#include "geoconfig/unordered.hpp"

// Geodesic motion-planning rules: each query pair falls in exactly one
// region, and on each region the returned geodesic varies continuously.
namespace geoconfig::planner {

enum class Space { OrderedF0, UnorderedC };

const char* space_name(Space s);

struct PlannerRegion {
    Space space = Space::OrderedF0;
    int region_id = 0;
    std::string descriptor;

    friend bool operator==(const PlannerRegion&, const PlannerRegion&) = default;
};

// Ordered space F0(R^n, 2):
//   region 1  E1, pairs of type (a) or (b), unique geodesic;
//   region 0  E0 (minus Z in odd n), type (c), w taken from a tangent field;
//   region 2  Z (odd n only), type (c) with h on the e1 axis, w = (0, 1, 0, ...).
inline constexpr int region_e0 = 0;
inline constexpr int region_e1 = 1;
inline constexpr int region_z = 2;

int ordered_region_count(std::size_t n);

PlannerRegion region_ordered(const OrderedConfig& p, const OrderedConfig& q);

// Membership predicates, each evaluated independently of region_ordered.
bool in_ordered_region(const OrderedConfig& p, const OrderedConfig& q, int region_id);

// w used for a type (c) pair, nullopt otherwise.
std::optional<Vec> ordered_w(const OrderedConfig& p, const OrderedConfig& q);

struct OrderedPlan {
    PlannerRegion region;
    ordered::OrderedGeodesic geodesic;
};

OrderedPlan plan_ordered_detail(const OrderedConfig& p, const OrderedConfig& q);
GeodesicPath plan_ordered(const OrderedConfig& p, const OrderedConfig& q);

// Unordered space C(R^n, 2):
//   region 0  E0, separations not orthogonal, best pairing;
//   other regions cover orthogonal separations; each carries a continuous
//   orientation transport from the line of a' - a to the line of b' - b.
//   n = 2: region 1 (quarter turn).
//   n = 3: regions 1..3 by the first nonzero coordinate of the normal line.
//   n > 3: regions 1 + i*n + j by the first nonzero coordinates (i, j) of
//          the two lines; correct but not minimal in number.
PlannerRegion region_unordered(const unordered::UnorderedConfig& p, const unordered::UnorderedConfig& q);

bool in_unordered_region(const unordered::UnorderedConfig& p, const unordered::UnorderedConfig& q,
                         int region_id);

// Orientation of the line of q's separation assigned to the orientation
// `dir` of p's separation, for orthogonal separations.
Vec transport_orientation(const Vec& dir, const Vec& target_line);

struct UnorderedPlan {
    PlannerRegion region;
    unordered::Pairing pairing = unordered::Pairing::Identity;  // never Tie
    GeodesicPath path;
};

UnorderedPlan plan_unordered_detail(const unordered::UnorderedConfig& p, const unordered::UnorderedConfig& q);
GeodesicPath plan_unordered(const unordered::UnorderedConfig& p, const unordered::UnorderedConfig& q);

}  // namespace geoconfig::planner
