#include "geoconfig/planner.hpp"

#include <cmath>
#include <string>

#include "geoconfig/fields.hpp"

namespace geoconfig::planner {

using ordered::GeodesicType;
using unordered::Pairing;
using unordered::UnorderedConfig;

const char* space_name(Space s) { return s == Space::OrderedF0 ? "ordered" : "unordered"; }

int ordered_region_count(std::size_t n) { return n % 2 == 0 ? 2 : 3; }

namespace {

bool is_type_c(const ordered::PairGeometry& g) {
    return g.delta < 2.0 - ordered::tol_class && g.D < 0.0 && (g.delta <= ordered::tol_class || g.antiparallel());
}

PlannerRegion ordered_region(int id) {
    switch (id) {
        case region_e1: return {Space::OrderedF0, id, "E1: unique geodesic (type a or b)"};
        case region_e0: return {Space::OrderedF0, id, "E0: type c, w = V(h/|h|) from a tangent field"};
        default: return {Space::OrderedF0, id, "Z: type c with h on the e1 axis, w = (0,1,0,...)"};
    }
}

// First coordinate index with |c_i| > 1e-12 |c|.
std::size_t leading_index(const Vec& c) {
    const double scale = 1e-12 * norm(c);
    for (std::size_t i = 0; i < c.dim(); ++i)
        if (std::abs(c[i]) > scale) return i;
    throw GeoError(ErrorCode::degenerate, "zero vector has no leading coordinate");
}

// The orientation of a line whose leading coordinate is positive.
Vec canonical_orientation(const Vec& line) {
    Vec u = normalized(line);
    return u[leading_index(u)] < 0.0 ? -u : u;
}

Vec cross3(const Vec& a, const Vec& b) {
    return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

PlannerRegion region_ordered(const OrderedConfig& p, const OrderedConfig& q) {
    const ordered::GeodesicClass cls = ordered::classify(p, q);
    if (cls.type != GeodesicType::TypeC) return ordered_region(region_e1);
    const ordered::PairGeometry& g = cls.geometry;
    if (g.dim() % 2 == 1 && fields::on_e1_axis(g.h)) return ordered_region(region_z);
    return ordered_region(region_e0);
}

bool in_ordered_region(const OrderedConfig& p, const OrderedConfig& q, int region_id) {
    const ordered::PairGeometry g = ordered::pair_geometry(p, q);
    const bool odd = g.dim() % 2 == 1;
    const bool c = is_type_c(g);
    switch (region_id) {
        case region_e1: return !c;
        case region_e0: return c && !(odd && fields::on_e1_axis(g.h));
        case region_z: return c && odd && fields::on_e1_axis(g.h);
        default: return false;
    }
}

std::optional<Vec> ordered_w(const OrderedConfig& p, const OrderedConfig& q) {
    const ordered::GeodesicClass cls = ordered::classify(p, q);
    if (cls.type != GeodesicType::TypeC) return std::nullopt;
    return fields::tangent_choice(normalized(cls.geometry.h));
}

OrderedPlan plan_ordered_detail(const OrderedConfig& p, const OrderedConfig& q) {
    PlannerRegion region = region_ordered(p, q);
    std::optional<Vec> w;
    if (region.region_id != region_e1) {
        const Vec hhat = normalized(halving_data(p).h);
        w = region.region_id == region_z ? fields::axis_fallback(p.dim()) : fields::tangent_choice(hhat);
    }
    return {std::move(region), ordered::solve_geodesic(p, q, w)};
}

GeodesicPath plan_ordered(const OrderedConfig& p, const OrderedConfig& q) {
    return plan_ordered_detail(p, q).geodesic.path;
}

PlannerRegion region_unordered(const UnorderedConfig& p, const UnorderedConfig& q) {
    require_same_dim(p.rep().first, q.rep().first);
    if (!unordered::separations_orthogonal(p, q))
        return {Space::UnorderedC, 0, "E0: separations not orthogonal, best pairing"};
    const std::size_t n = p.dim();
    if (n == 2) return {Space::UnorderedC, 1, "E1: quarter-turn orientation transport"};
    if (n == 3) {
        const Vec m = cross3(p.separation(), q.separation());
        const std::size_t i = leading_index(m);
        return {Space::UnorderedC, 1 + static_cast<int>(i),
                "E1: transport by the normal line, leading coordinate " + std::to_string(i + 1)};
    }
    const std::size_t i = leading_index(p.separation());
    const std::size_t j = leading_index(q.separation());
    return {Space::UnorderedC, 1 + static_cast<int>(i * n + j),
            "E1: canonical orientations, leading coordinates " + std::to_string(i + 1) + "," +
                std::to_string(j + 1)};
}

bool in_unordered_region(const UnorderedConfig& p, const UnorderedConfig& q, int region_id) {
    const Vec sp = p.separation();
    const Vec sq = q.separation();
    const bool orthogonal = std::abs(dot(sp, sq)) <= unordered::tie_tol * norm(sp) * norm(sq);
    if (region_id == 0) return !orthogonal;
    if (!orthogonal) return false;
    const std::size_t n = p.dim();
    if (n == 2) return region_id == 1;
    if (n == 3) return region_id == 1 + static_cast<int>(leading_index(cross3(sp, sq)));
    return region_id == 1 + static_cast<int>(leading_index(sp) * n + leading_index(sq));
}

Vec transport_orientation(const Vec& dir, const Vec& target_line) {
    require_same_dim(dir, target_line);
    const Vec d = normalized(dir);
    const std::size_t n = d.dim();
    if (n == 2) return Vec{-d[1], d[0]};
    if (n == 3) {
        const Vec m = canonical_orientation(cross3(d, target_line));
        return cross3(m, d);
    }
    const Vec c0 = canonical_orientation(d);
    const Vec c1 = canonical_orientation(target_line);
    return dot(d, c0) > 0.0 ? c1 : -c1;
}

UnorderedPlan plan_unordered_detail(const UnorderedConfig& p, const UnorderedConfig& q) {
    PlannerRegion region = region_unordered(p, q);
    Pairing pairing;
    if (region.region_id == 0) {
        pairing = unordered::best_pairing(p, q);
    } else {
        const Vec o = transport_orientation(p.separation(), q.separation());
        pairing = dot(q.separation(), o) > 0.0 ? Pairing::Identity : Pairing::Swapped;
    }
    GeodesicPath path = unordered::geodesic_unordered(p, q, pairing);
    return {std::move(region), pairing, std::move(path)};
}

GeodesicPath plan_unordered(const UnorderedConfig& p, const UnorderedConfig& q) {
    return plan_unordered_detail(p, q).path;
}

}  // namespace geoconfig::planner
