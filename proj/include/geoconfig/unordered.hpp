#pragma once

#include <optional>

#include "geoconfig/path.hpp"
#include "geoconfig/vec.hpp"

// The unordered configuration space C(R^n, 2) of two distinct points with
// the min-over-pairings metric d_U. No clearance constraint applies.
namespace geoconfig::unordered {

// A set {a, a'}, stored as its lexicographically smaller ordering.
class UnorderedConfig {
public:
    UnorderedConfig(Vec a, Vec b);
    explicit UnorderedConfig(const OrderedConfig& p) : UnorderedConfig(p.first, p.second) {}

    const OrderedConfig& rep() const noexcept { return rep_; }
    std::size_t dim() const noexcept { return rep_.dim(); }
    // a' - a of the representative
    Vec separation() const { return rep_.second - rep_.first; }

    friend bool operator==(const UnorderedConfig&, const UnorderedConfig&) = default;

private:
    OrderedConfig rep_;
};

enum class Pairing { Identity, Swapped, Tie };

const char* pairing_name(Pairing p);

// Ordered target for a pairing: rep(q) for Identity (and Tie), rep(q) swapped otherwise.
OrderedConfig paired_target(const UnorderedConfig& q, Pairing pairing);

// (a' - a).(b' - b) of the representatives.
double separation_dot(const UnorderedConfig& p, const UnorderedConfig& q);

// |separation_dot| <= tie_tol * |a' - a| |b' - b| counts as orthogonal.
inline constexpr double tie_tol = 1e-12;
bool separations_orthogonal(const UnorderedConfig& p, const UnorderedConfig& q);

double d_U(const UnorderedConfig& p, const UnorderedConfig& q);

// The pairing realizing d_U, from the sign identity
//   d(id)^2 - d(swapped)^2 = -2 (a' - a).(b' - b).
Pairing best_pairing(const UnorderedConfig& p, const UnorderedConfig& q);

// Linear path of representatives from rep(p) to the paired target. Without
// an explicit pairing the best one is used (Tie resolves to Identity).
// Throws if a forced pairing makes the two points collide mid-path.
GeodesicPath geodesic_unordered(const UnorderedConfig& p, const UnorderedConfig& q,
                                std::optional<Pairing> pairing = std::nullopt);

// Smallest separation |second(t) - first(t)| along the linear path p -> q.
double linear_min_separation(const OrderedConfig& p, const OrderedConfig& q);

}  // namespace geoconfig::unordered
