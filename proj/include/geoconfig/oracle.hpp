#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "geoconfig/ordered.hpp"

// Brute-force check of the closed-form geodesics: discretize the path as
// waypoints in R^{2n}, shorten it by projected descent while keeping every
// waypoint at gap >= 2, and compare lengths.
namespace geoconfig::oracle {

inline constexpr double tol_proj = 1e-9;

// K waypoints stored row-major, each a flattened (p, p') of size 2n.
class Waypoints {
public:
    Waypoints(std::size_t n, std::size_t count) : n_(n), flat_(2 * n * count, 0.0) {}
    static Waypoints from_configs(std::span<const OrderedConfig> configs);

    std::size_t n() const noexcept { return n_; }
    std::size_t stride() const noexcept { return 2 * n_; }
    std::size_t count() const noexcept { return flat_.size() / stride(); }
    std::span<double> point(std::size_t i) { return {flat_.data() + i * stride(), stride()}; }
    std::span<const double> point(std::size_t i) const { return {flat_.data() + i * stride(), stride()}; }
    std::span<const double> flat() const noexcept { return flat_; }
    std::span<double> flat() noexcept { return flat_; }
    OrderedConfig config(std::size_t i) const { return unflatten(point(i)); }

    double chord_length() const;
    double min_gap() const;

    // Resample to `count` points equally spaced in chord length.
    Waypoints resampled(std::size_t count) const;

private:
    std::size_t n_;
    std::vector<double> flat_;
};

// Nearest point of {|p' - p| >= 2}: keep the midpoint, push the pair apart
// radially; coincident points separate along e1.
void project_waypoint(std::span<double> point, std::size_t n);
void project_all(Waypoints& w);

struct DescentResult {
    double length = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

struct OracleOptions {
    std::size_t waypoints = 400;
    std::size_t iters = 50000;
    std::uint64_t seed = 7;
};

// Projected gradient descent on the chord length with a backtracking line
// search (step halving from 0.5). Endpoints stay fixed.
DescentResult shorten(Waypoints& w, std::size_t iters);

// Projected relaxation of the discrete energy sum |w_{i+1} - w_i|^2, used
// to smooth a rough initial guess before shorten().
void relax_energy(Waypoints& w, std::size_t iters);

struct OracleResult {
    Waypoints best;
    double length = 0.0;
    double length_from_closed_form = 0.0;
    double length_from_linear = 0.0;
    bool converged = false;
};

// Runs the descent from the sampled closed-form geodesic and from a
// perturbed linear path (refined coarse to fine) and returns the shorter.
OracleResult optimize_path(const OrderedConfig& p, const OrderedConfig& q, const OracleOptions& opts);

// Descent from the perturbed linear initialization only.
OracleResult optimize_from_linear(const OrderedConfig& p, const OrderedConfig& q, const OracleOptions& opts);

// Descent from given initial waypoints.
OracleResult optimize_from(Waypoints init, std::size_t iters);

struct VerifyReport {
    double analytic = 0.0;
    double oracle = 0.0;
    double oracle_linear = 0.0;
    double min_gap = 0.0;
    bool feasible = false;
    double rel_gap = 0.0;  // (oracle - analytic) / analytic
    bool converged = false;
    bool pass = false;
    ordered::GeodesicType type = ordered::GeodesicType::TypeA;
};

inline constexpr double pass_rel_gap = -1e-3;

VerifyReport verify_instance(const OrderedConfig& p, const OrderedConfig& q, const OracleOptions& opts = {});

struct Query {
    OrderedConfig p, q;
};

// Random pair in F0(R^n, 2): midpoints in [-4, 4]^n, half-separations with
// uniform direction and length in [1, 3].
Query random_query(std::size_t n, std::mt19937_64& rng);

struct CampaignEntry {
    std::size_t id = 0;
    Query query;
    VerifyReport report;
    std::string error;  // non-empty if the instance threw
};

// Instances are independent and seeded per id, so the result does not
// depend on scheduling. The parallel version runs instances under OpenMP.
std::vector<CampaignEntry> run_campaign(std::size_t count, std::size_t n, std::uint64_t seed,
                                        const OracleOptions& opts);
std::vector<CampaignEntry> run_campaign_serial(std::size_t count, std::size_t n, std::uint64_t seed,
                                               const OracleOptions& opts);

std::uint64_t instance_seed(std::uint64_t seed, std::size_t id);

}  // namespace geoconfig::oracle
