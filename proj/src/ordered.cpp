#include "geoconfig/ordered.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace geoconfig::ordered {

namespace {

// |h ^ k|^2 = HK - D^2 without the cancellation of the direct formula.
double wedge_norm2(const Vec& h, const Vec& k) {
    double s = 0.0;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        for (std::size_t j = i + 1; j < h.dim(); ++j) {
            const double m = h[i] * k[j] - h[j] * k[i];
            s += m * m;
        }
    }
    return s;
}

double safe_sqrt(double x) { return std::sqrt(std::max(x, 0.0)); }

bool on_boundary(double s) { return s * s <= tol_feas; }

Vec unit_orthogonal_to(const Vec& w, const Vec& axis) {
    const Vec a = normalized(axis);
    return normalized(w - dot(w, a) * a);
}

}  // namespace

const char* type_name(GeodesicType t) {
    switch (t) {
        case GeodesicType::TypeA: return "a";
        case GeodesicType::TypeB: return "b";
        case GeodesicType::TypeC: return "c";
    }
    return "?";
}

PairGeometry pair_geometry(const OrderedConfig& p, const OrderedConfig& q) {
    require_same_dim(p.first, q.first);
    require_f0(p, "start configuration");
    require_f0(q, "goal configuration");

    PairGeometry g;
    auto [h, A] = halving_data(p);
    auto [k, B] = halving_data(q);
    g.h = std::move(h);
    g.k = std::move(k);
    g.A = std::move(A);
    g.B = std::move(B);
    g.H = norm2(g.h);
    g.K = norm2(g.k);
    g.D = dot(g.h, g.k);
    g.gram = wedge_norm2(g.h, g.k);
    g.S0 = safe_sqrt(g.H - 1.0);
    g.S1 = safe_sqrt(g.K - 1.0);

    const double scale = std::max({1.0, std::sqrt(g.H), std::sqrt(g.K)});
    const bool same = max_abs_diff(g.h, g.k) <= 1e-12 * scale;
    const double lo = std::min(g.H, g.K);
    double delta2;
    if (same || lo <= g.D) {
        delta2 = 4.0 * lo;
    } else {
        delta2 = 4.0 * g.gram / norm2(g.h - g.k);
    }
    g.delta = std::sqrt(delta2);
    return g;
}

UnitPair contact_directions(const PairGeometry& g) {
    const double r = std::sqrt(g.gram);
    Vec u = on_boundary(g.S0) ? normalized(g.h) : g.h / g.H + (g.S0 / r) * (g.k - (g.D / g.H) * g.h);
    Vec v = on_boundary(g.S1) ? normalized(g.k) : g.k / g.K + (g.S1 / r) * (g.h - (g.D / g.K) * g.k);
    return {std::move(u), std::move(v)};
}

UnitPair solve_uv(const PairGeometry& g) {
    if (g.parallel())
        throw GeoError(ErrorCode::parallel_input,
                       "h and k are parallel; use solve_uv_parallel with a direction w");
    if (on_boundary(g.S0) || on_boundary(g.S1))
        throw GeoError(ErrorCode::boundary_endpoint,
                       "an endpoint lies on the boundary (|h| = 1 or |k| = 1); use the boundary shortcut");
    if (g.delta > 2.0 + tol_class)
        throw GeoError(ErrorCode::out_of_domain, "delta > 2: the linear path is already feasible");
    return contact_directions(g);
}

UnitPair solve_uv_parallel(const PairGeometry& g, const Vec& w) {
    require_same_dim(g.h, w);
    if (!g.antiparallel())
        throw GeoError(ErrorCode::invalid_argument, "solve_uv_parallel requires antiparallel h and k");
    if (std::abs(norm(w) - 1.0) > 1e-9)
        throw GeoError(ErrorCode::invalid_argument, "w must be a unit vector");
    if (std::abs(dot(g.h, w)) > 1e-9 * std::sqrt(g.H))
        throw GeoError(ErrorCode::invalid_argument, "w must be orthogonal to h");
    // Re-orthogonalize so the constraints hold to rounding even when k is
    // antiparallel to h only within tol_par.
    const Vec wh = unit_orthogonal_to(w, g.h);
    const Vec wk = unit_orthogonal_to(w, g.k);
    return {g.h / g.H + (g.S0 / std::sqrt(g.H)) * wh, g.k / g.K + (g.S1 / std::sqrt(g.K)) * wk};
}

double beta_of(const PairGeometry& g, BetaMode mode) {
    double c;
    if (mode == BetaMode::NonParallel) {
        if (g.parallel())
            throw GeoError(ErrorCode::invalid_argument, "non-parallel beta requested for parallel h, k");
        c = ((g.S0 + g.S1) * std::sqrt(g.gram) + (1.0 - g.S0 * g.S1) * g.D) / (g.H * g.K);
    } else {
        if (!g.antiparallel())
            throw GeoError(ErrorCode::invalid_argument, "parallel beta requested for non-antiparallel h, k");
        c = g.D / (g.H * g.K) + g.S0 * g.S1 / std::sqrt(g.H * g.K);
    }
    return std::acos(std::clamp(c, -1.0, 1.0));
}

ContactPoints contact_points(const PairGeometry& g, double beta) {
    const double denom = beta + g.S0 + g.S1;
    if (denom == 0.0) return {g.A, g.A};
    const Vec x = (beta * g.A + g.S0 * g.B + g.S1 * g.A) / denom;
    const Vec y = (beta * g.B + g.S0 * g.B + g.S1 * g.A) / denom;
    return {x, y};
}

BoundaryArc boundary_geodesic(const Vec& x, const Vec& y, const Vec& u, const Vec& v) {
    return BoundaryArc(x, y, u, v);
}

std::vector<Vec> orthonormal_complement(const Vec& h) {
    const std::size_t n = h.dim();
    std::vector<Vec> basis{normalized(h)};
    for (std::size_t axis = 0; axis < n && basis.size() < n; ++axis) {
        Vec e = Vec::unit(n, axis);
        for (const Vec& b : basis) e -= dot(e, b) * b;
        const double len = norm(e);
        if (len > 0.5 / std::sqrt(static_cast<double>(n))) basis.push_back(e / len);
    }
    basis.erase(basis.begin());
    return basis;
}

GeodesicClass classify(const OrderedConfig& p, const OrderedConfig& q) {
    GeodesicClass cls;
    cls.geometry = pair_geometry(p, q);
    const PairGeometry& g = cls.geometry;
    if (g.delta >= 2.0 - tol_class) {
        cls.type = GeodesicType::TypeA;
    } else if (g.D < 0.0 && (g.delta <= tol_class || g.antiparallel())) {
        cls.type = GeodesicType::TypeC;
        cls.w_basis = orthonormal_complement(g.h);
    } else {
        cls.type = GeodesicType::TypeB;
        auto [u, v] = contact_directions(g);
        const double beta = beta_of(g, BetaMode::NonParallel);
        auto [x, y] = contact_points(g, beta);
        cls.contact = Contact{std::move(u), std::move(v), beta, std::move(x), std::move(y)};
    }
    return cls;
}

namespace {

GeodesicPath two_sided_path(const OrderedConfig& p, const OrderedConfig& q, const Contact& c,
                            const std::optional<Vec>& via) {
    const OrderedConfig c0{c.x - c.u, c.x + c.u};
    const OrderedConfig c1{c.y - c.v, c.y + c.v};
    std::vector<Segment> segments;
    segments.emplace_back(LinearSegment{p, c0});
    segments.emplace_back(BoundaryArc(c.x, c.y, c.u, c.v, via));
    segments.emplace_back(LinearSegment{c1, q});
    return GeodesicPath(std::move(segments));
}

}  // namespace

OrderedGeodesic solve_geodesic(const OrderedConfig& p, const OrderedConfig& q, const std::optional<Vec>& w) {
    GeodesicClass cls = classify(p, q);
    switch (cls.type) {
        case GeodesicType::TypeA: {
            GeodesicPath path = GeodesicPath::linear(p, q);
            return {std::move(cls), std::nullopt, std::nullopt, std::move(path)};
        }
        case GeodesicType::TypeB: {
            Contact c = *cls.contact;
            GeodesicPath path = two_sided_path(p, q, c, std::nullopt);
            return {std::move(cls), std::move(c), std::nullopt, std::move(path)};
        }
        case GeodesicType::TypeC: {
            if (!w) {
                std::ostringstream msg;
                msg << "type (c) pair: the geodesic depends on a unit vector w orthogonal to h; "
                       "valid choices form the unit sphere of a "
                    << cls.w_basis.size() << "-dimensional subspace";
                throw GeoError(ErrorCode::missing_choice, msg.str());
            }
            const PairGeometry& g = cls.geometry;
            auto [u, v] = solve_uv_parallel(g, *w);
            const double beta = beta_of(g, BetaMode::Parallel);
            auto [x, y] = contact_points(g, beta);
            Contact c{std::move(u), std::move(v), beta, std::move(x), std::move(y)};
            GeodesicPath path = two_sided_path(p, q, c, *w);
            return {std::move(cls), std::move(c), *w, std::move(path)};
        }
    }
    throw GeoError(ErrorCode::invalid_argument, "unreachable geodesic type");
}

GeodesicPath geodesic(const OrderedConfig& p, const OrderedConfig& q, const std::optional<Vec>& w) {
    return solve_geodesic(p, q, w).path;
}

double geodesic_length(const OrderedConfig& p, const OrderedConfig& q) {
    const GeodesicClass cls = classify(p, q);
    if (cls.type == GeodesicType::TypeA) return config_distance(p, q);
    const PairGeometry& g = cls.geometry;
    const double beta = cls.type == GeodesicType::TypeB ? cls.contact->beta : beta_of(g, BetaMode::Parallel);
    const double dab = distance(g.A, g.B);
    const double turn = beta + g.S0 + g.S1;
    return std::numbers::sqrt2 * std::sqrt(dab * dab + turn * turn);
}

bool convex_u_identity_check(const PairGeometry& g) {
    if (std::abs(g.delta - 2.0) > 1e-6)
        throw GeoError(ErrorCode::out_of_domain, "convex identity requires delta = 2");
    if (g.S0 + g.S1 <= 0.0)
        throw GeoError(ErrorCode::out_of_domain, "convex identity requires S0 + S1 > 0");
    if (g.parallel())
        throw GeoError(ErrorCode::parallel_input, "convex identity requires non-parallel h and k");
    const auto [u, v] = contact_directions(g);
    const Vec target = (g.S1 * g.h + g.S0 * g.k) / (g.S0 + g.S1);
    return norm(u - target) <= 1e-8 && norm(v - target) <= 1e-8;
}

}  // namespace geoconfig::ordered
