#include "geoconfig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geoconfig/kernels.hpp"
#include "geoconfig/planner.hpp"

namespace geoconfig::oracle {

namespace {

double flat_dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

Waypoints linear_waypoints(const OrderedConfig& p, const OrderedConfig& q, std::size_t count) {
    const std::vector<double> a = flatten(p);
    const std::vector<double> b = flatten(q);
    Waypoints w(p.dim(), count);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(count - 1);
        auto pt = w.point(i);
        for (std::size_t j = 0; j < pt.size(); ++j) pt[j] = (1.0 - t) * a[j] + t * b[j];
    }
    return w;
}

constexpr std::size_t coarse_waypoints = 16;

}  // namespace

Waypoints Waypoints::from_configs(std::span<const OrderedConfig> configs) {
    if (configs.empty()) throw GeoError(ErrorCode::invalid_argument, "no waypoints");
    Waypoints w(configs.front().dim(), configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const std::vector<double> f = flatten(configs[i]);
        std::copy(f.begin(), f.end(), w.point(i).begin());
    }
    return w;
}

double Waypoints::chord_length() const { return kernels::chord_length(flat_, stride()); }

double Waypoints::min_gap() const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count(); ++i) {
        auto pt = point(i);
        best = std::min(best, flat_dist(pt.first(n_), pt.subspan(n_)));
    }
    return best;
}

Waypoints Waypoints::resampled(std::size_t target) const {
    const std::size_t m = count();
    std::vector<double> cum(m, 0.0);
    for (std::size_t i = 1; i < m; ++i) cum[i] = cum[i - 1] + flat_dist(point(i - 1), point(i));
    Waypoints out(n_, target);
    const double total = cum.back();
    std::size_t seg = 0;
    for (std::size_t j = 0; j < target; ++j) {
        auto dst = out.point(j);
        if (j == 0 || total == 0.0) {
            std::copy(point(0).begin(), point(0).end(), dst.begin());
            continue;
        }
        if (j + 1 == target) {
            std::copy(point(m - 1).begin(), point(m - 1).end(), dst.begin());
            continue;
        }
        const double s = total * static_cast<double>(j) / static_cast<double>(target - 1);
        while (seg + 2 < m && cum[seg + 1] < s) ++seg;
        const double len = cum[seg + 1] - cum[seg];
        const double t = len > 0.0 ? std::clamp((s - cum[seg]) / len, 0.0, 1.0) : 0.0;
        auto a = point(seg);
        auto b = point(seg + 1);
        for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = (1.0 - t) * a[k] + t * b[k];
    }
    return out;
}

void project_waypoint(std::span<double> point, std::size_t n) {
    double len2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = point[n + i] - point[i];
        len2 += d * d;
    }
    if (len2 >= 4.0) return;
    const double len = std::sqrt(len2);
    for (std::size_t i = 0; i < n; ++i) {
        const double m = 0.5 * (point[i] + point[n + i]);
        const double u = len > 0.0 ? (point[n + i] - point[i]) / len : (i == 0 ? 1.0 : 0.0);
        point[i] = m - u;
        point[n + i] = m + u;
    }
}

void project_all(Waypoints& w) {
    for (std::size_t i = 0; i < w.count(); ++i) project_waypoint(w.point(i), w.n());
}

void relax_energy(Waypoints& w, std::size_t iters) {
    const std::size_t m = w.count();
    const std::size_t stride = w.stride();
    if (m < 3) return;
    std::vector<double> next(w.flat().begin(), w.flat().end());
    const double scale = std::max(1.0, w.chord_length());
    for (std::size_t it = 0; it < iters; ++it) {
        double moved = 0.0;
        for (std::size_t i = 1; i + 1 < m; ++i) {
            auto prev = w.point(i - 1);
            auto cur = w.point(i);
            auto nxt = w.point(i + 1);
            std::span<double> dst(next.data() + i * stride, stride);
            for (std::size_t k = 0; k < stride; ++k) dst[k] = 0.5 * cur[k] + 0.25 * (prev[k] + nxt[k]);
            project_waypoint(dst, w.n());
            for (std::size_t k = 0; k < stride; ++k) moved = std::max(moved, std::abs(dst[k] - cur[k]));
        }
        std::copy(next.begin(), next.end(), w.flat().begin());
        if (moved <= 1e-13 * scale) break;
    }
}

DescentResult shorten(Waypoints& w, std::size_t iters) {
    DescentResult res;
    const std::size_t m = w.count();
    const std::size_t stride = w.stride();
    res.length = w.chord_length();
    if (m < 3 || res.length == 0.0) {
        res.converged = true;
        return res;
    }
    std::vector<double> grad(w.flat().size(), 0.0);
    Waypoints trial = w;
    double step = 0.5;
    for (; res.iterations < iters; ++res.iterations) {
        std::fill(grad.begin(), grad.end(), 0.0);
        for (std::size_t i = 1; i < m; ++i) {
            auto a = w.point(i - 1);
            auto b = w.point(i);
            const double len = flat_dist(a, b);
            if (len == 0.0) continue;
            for (std::size_t k = 0; k < stride; ++k) {
                const double t = (b[k] - a[k]) / len;
                if (i < m - 1) grad[i * stride + k] += t;
                if (i > 1) grad[(i - 1) * stride + k] -= t;
            }
        }
        // Halving line search, starting no higher than 0.5.
        step = std::min(0.5, 4.0 * step);
        bool accepted = false;
        double trial_len = res.length;
        while (step > 1e-16) {
            auto src = w.flat();
            auto dst = trial.flat();
            for (std::size_t k = 0; k < src.size(); ++k) dst[k] = src[k] - step * grad[k];
            for (std::size_t i = 1; i + 1 < m; ++i) project_waypoint(trial.point(i), w.n());
            trial_len = trial.chord_length();
            if (trial_len < res.length) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            res.converged = true;
            break;
        }
        const double rel_change = (res.length - trial_len) / res.length;
        std::swap(w, trial);
        res.length = trial_len;
        if (rel_change <= 1e-10) {
            res.converged = true;
            ++res.iterations;
            break;
        }
    }
    return res;
}

OracleResult optimize_from(Waypoints init, std::size_t iters) {
    project_all(init);
    const DescentResult d = shorten(init, iters);
    OracleResult out{std::move(init), d.length, d.length, d.length, d.converged};
    return out;
}

OracleResult optimize_from_linear(const OrderedConfig& p, const OrderedConfig& q, const OracleOptions& opts) {
    if (opts.waypoints < coarse_waypoints)
        throw GeoError(ErrorCode::invalid_argument, "the oracle needs at least 16 waypoints");
    std::mt19937_64 rng(opts.seed);
    const double scale = std::max(1.0, config_distance(p, q));
    std::normal_distribution<double> noise(0.0, 0.02 * scale);

    Waypoints w = linear_waypoints(p, q, coarse_waypoints);
    for (std::size_t i = 1; i + 1 < w.count(); ++i)
        for (double& x : w.point(i)) x += noise(rng);
    project_all(w);

    constexpr std::size_t relax_iters = 4000;
    while (true) {
        relax_energy(w, relax_iters);
        if (w.count() >= opts.waypoints) break;
        w = w.resampled(std::min(opts.waypoints, 2 * w.count()));
        project_all(w);
    }
    const DescentResult d = shorten(w, opts.iters);
    OracleResult out{std::move(w), d.length, 0.0, d.length, d.converged};
    return out;
}

OracleResult optimize_path(const OrderedConfig& p, const OrderedConfig& q, const OracleOptions& opts) {
    require_f0(p, "start configuration");
    require_f0(q, "goal configuration");
    if (opts.waypoints < coarse_waypoints)
        throw GeoError(ErrorCode::invalid_argument, "the oracle needs at least 16 waypoints");
    if (opts.iters < 1) throw GeoError(ErrorCode::invalid_argument, "the oracle needs at least one iteration");

    const GeodesicPath closed = planner::plan_ordered(p, q);
    OracleResult from_closed = optimize_from(Waypoints::from_configs(closed.sample(opts.waypoints)), opts.iters);
    OracleResult from_linear = optimize_from_linear(p, q, opts);

    const double lc = from_closed.length;
    const double ll = from_linear.length;
    OracleResult& best = lc <= ll ? from_closed : from_linear;
    OracleResult out{std::move(best.best), std::min(lc, ll), lc, ll, best.converged};
    return out;
}

VerifyReport verify_instance(const OrderedConfig& p, const OrderedConfig& q, const OracleOptions& opts) {
    VerifyReport r;
    r.type = ordered::classify(p, q).type;
    r.analytic = ordered::geodesic_length(p, q);
    const GeodesicPath path = planner::plan_ordered(p, q);
    r.min_gap = kernels::min_gap_along(evaluator(path), 10000);
    r.feasible = r.min_gap >= 2.0 - tol_proj;

    const OracleResult o = optimize_path(p, q, opts);
    r.oracle = o.length;
    r.oracle_linear = o.length_from_linear;
    r.converged = o.converged;
    r.rel_gap = r.analytic > 0.0 ? (r.oracle - r.analytic) / r.analytic : 0.0;
    r.pass = r.rel_gap >= pass_rel_gap && r.feasible;
    return r;
}

Query random_query(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mid(-4.0, 4.0);
    std::uniform_real_distribution<double> len(1.0, 3.0);
    std::normal_distribution<double> gauss;
    auto config = [&] {
        Vec m(n), d(n);
        for (std::size_t i = 0; i < n; ++i) {
            m[i] = mid(rng);
            d[i] = gauss(rng);
        }
        const Vec h = normalized(d) * len(rng);
        return from_halving(m, h);
    };
    OrderedConfig p = config();
    OrderedConfig q = config();
    return {std::move(p), std::move(q)};
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t id) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(id) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

CampaignEntry run_entry(std::size_t id, std::size_t n, std::uint64_t seed, const OracleOptions& opts) {
    std::mt19937_64 rng(instance_seed(seed, id));
    CampaignEntry e;
    e.id = id;
    e.query = random_query(n, rng);
    OracleOptions local = opts;
    local.seed = instance_seed(seed ^ 0x5bd1e995ULL, id);
    try {
        e.report = verify_instance(e.query.p, e.query.q, local);
    } catch (const std::exception& ex) {
        e.error = ex.what();
        e.report.pass = false;
    }
    return e;
}

}  // namespace

std::vector<CampaignEntry> run_campaign_serial(std::size_t count, std::size_t n, std::uint64_t seed,
                                               const OracleOptions& opts) {
    std::vector<CampaignEntry> out;
    out.reserve(count);
    for (std::size_t id = 0; id < count; ++id) out.push_back(run_entry(id, n, seed, opts));
    return out;
}

std::vector<CampaignEntry> run_campaign(std::size_t count, std::size_t n, std::uint64_t seed,
                                        const OracleOptions& opts) {
    std::vector<CampaignEntry> out(count);
    const auto total = static_cast<std::ptrdiff_t>(count);
#ifdef GEOCONFIG_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::ptrdiff_t id = 0; id < total; ++id) {
        const auto i = static_cast<std::size_t>(id);
        out[i] = run_entry(i, n, seed, opts);
    }
    return out;
}

}  // namespace geoconfig::oracle
