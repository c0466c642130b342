#include "geoconfig/unordered.hpp"

#include <algorithm>
#include <cmath>

namespace geoconfig::unordered {

UnorderedConfig::UnorderedConfig(Vec a, Vec b) {
    require_same_dim(a, b);
    if (!a.is_finite() || !b.is_finite())
        throw GeoError(ErrorCode::invalid_argument, "unordered configuration has non-finite coordinates");
    if (a == b) throw GeoError(ErrorCode::degenerate, "the two points of an unordered configuration must differ");
    if (lex_less(b, a)) std::swap(a, b);
    rep_ = OrderedConfig(std::move(a), std::move(b));
}

const char* pairing_name(Pairing p) {
    switch (p) {
        case Pairing::Identity: return "identity";
        case Pairing::Swapped: return "swapped";
        case Pairing::Tie: return "tie";
    }
    return "?";
}

OrderedConfig paired_target(const UnorderedConfig& q, Pairing pairing) {
    return pairing == Pairing::Swapped ? q.rep().swapped() : q.rep();
}

double separation_dot(const UnorderedConfig& p, const UnorderedConfig& q) {
    return dot(p.separation(), q.separation());
}

bool separations_orthogonal(const UnorderedConfig& p, const UnorderedConfig& q) {
    const Vec sp = p.separation();
    const Vec sq = q.separation();
    return std::abs(dot(sp, sq)) <= tie_tol * norm(sp) * norm(sq);
}

double d_U(const UnorderedConfig& p, const UnorderedConfig& q) {
    require_same_dim(p.rep().first, q.rep().first);
    return std::min(config_distance(p.rep(), q.rep()), config_distance(p.rep(), q.rep().swapped()));
}

Pairing best_pairing(const UnorderedConfig& p, const UnorderedConfig& q) {
    require_same_dim(p.rep().first, q.rep().first);
    if (separations_orthogonal(p, q)) return Pairing::Tie;
    return separation_dot(p, q) > 0.0 ? Pairing::Identity : Pairing::Swapped;
}

double linear_min_separation(const OrderedConfig& p, const OrderedConfig& q) {
    const Vec d0 = p.second - p.first;
    const Vec d1 = q.second - q.first;
    const Vec step = d1 - d0;
    const double len2 = norm2(step);
    const double t = len2 > 0.0 ? std::clamp(-dot(d0, step) / len2, 0.0, 1.0) : 0.0;
    return norm(d0 + t * step);
}

GeodesicPath geodesic_unordered(const UnorderedConfig& p, const UnorderedConfig& q,
                                std::optional<Pairing> pairing) {
    require_same_dim(p.rep().first, q.rep().first);
    const Pairing chosen = pairing.value_or(best_pairing(p, q));
    const OrderedConfig target = paired_target(q, chosen);
    const double scale = std::max(p.rep().gap(), target.gap());
    if (linear_min_separation(p.rep(), target) <= 1e-12 * scale)
        throw GeoError(ErrorCode::degenerate,
                       "representative leaves F(R^n,2): the forced pairing makes the points collide");
    return GeodesicPath::linear(p.rep(), target);
}

}  // namespace geoconfig::unordered
