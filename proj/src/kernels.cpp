#include "geoconfig/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#ifdef GEOCONFIG_OPENMP
#include <omp.h>
#endif

namespace geoconfig::kernels {

namespace {

void require_samples(std::size_t samples) {
    if (samples < 2) throw GeoError(ErrorCode::invalid_argument, "at least two samples are required");
}

double time_of(std::size_t i, std::size_t samples) {
    return static_cast<double>(i) / static_cast<double>(samples - 1);
}

double flat_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace

int max_threads() {
#ifdef GEOCONFIG_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

double min_gap_along_serial(const PathEval& path, std::size_t samples) {
    require_samples(samples);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) best = std::min(best, path(time_of(i, samples)).gap());
    return best;
}

double min_gap_along(const PathEval& path, std::size_t samples) {
    require_samples(samples);
    double best = std::numeric_limits<double>::infinity();
    const auto count = static_cast<std::ptrdiff_t>(samples);
#ifdef GEOCONFIG_OPENMP
#pragma omp parallel for reduction(min : best) schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        best = std::min(best, path(time_of(static_cast<std::size_t>(i), samples)).gap());
    }
    return best;
}

double polyline_length_serial(const PathEval& path, std::size_t samples) {
    require_samples(samples);
    double total = 0.0;
    OrderedConfig prev = path(0.0);
    for (std::size_t i = 1; i < samples; ++i) {
        OrderedConfig cur = path(time_of(i, samples));
        total += config_distance(prev, cur);
        prev = std::move(cur);
    }
    return total;
}

double polyline_length(const PathEval& path, std::size_t samples) {
    require_samples(samples);
    std::vector<OrderedConfig> pts(samples);
    const auto count = static_cast<std::ptrdiff_t>(samples);
#ifdef GEOCONFIG_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < count; ++i)
        pts[static_cast<std::size_t>(i)] = path(time_of(static_cast<std::size_t>(i), samples));

    double total = 0.0;
#ifdef GEOCONFIG_OPENMP
#pragma omp parallel for reduction(+ : total) schedule(static)
#endif
    for (std::ptrdiff_t i = 1; i < count; ++i)
        total += config_distance(pts[static_cast<std::size_t>(i - 1)], pts[static_cast<std::size_t>(i)]);
    return total;
}

ChordStats chord_stats(const PathEval& path, std::size_t samples) {
    require_samples(samples);
    ChordStats stats{std::numeric_limits<double>::infinity(), 0.0, 0.0};
    OrderedConfig prev = path(0.0);
    for (std::size_t i = 1; i < samples; ++i) {
        OrderedConfig cur = path(time_of(i, samples));
        const double c = config_distance(prev, cur);
        stats.min_chord = std::min(stats.min_chord, c);
        stats.max_chord = std::max(stats.max_chord, c);
        stats.total += c;
        prev = std::move(cur);
    }
    return stats;
}

double chord_length_serial(std::span<const double> points, std::size_t dim) {
    const std::size_t count = points.size() / dim;
    double total = 0.0;
    for (std::size_t i = 1; i < count; ++i)
        total += flat_distance(points.subspan((i - 1) * dim, dim), points.subspan(i * dim, dim));
    return total;
}

double chord_length(std::span<const double> points, std::size_t dim) {
    const auto count = static_cast<std::ptrdiff_t>(points.size() / dim);
    double total = 0.0;
#ifdef GEOCONFIG_OPENMP
#pragma omp parallel for reduction(+ : total) schedule(static) if (count > 4096)
#endif
    for (std::ptrdiff_t i = 1; i < count; ++i) {
        const auto j = static_cast<std::size_t>(i);
        total += flat_distance(points.subspan((j - 1) * dim, dim), points.subspan(j * dim, dim));
    }
    return total;
}

}  // namespace geoconfig::kernels
