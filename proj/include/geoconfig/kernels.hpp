#pragma once

#include <cstddef>
#include <span>

#include "geoconfig/path.hpp"

// Dense-sampling kernels. Each kernel has an OpenMP version (the default
// entry point) and a serial reference kept for testing and benchmarking;
// both visit the same sample times t_i = i / (samples - 1) and must agree.
namespace geoconfig::kernels {

// min over sample times of |second(t) - first(t)|.
double min_gap_along(const PathEval& path, std::size_t samples);
double min_gap_along_serial(const PathEval& path, std::size_t samples);

// Sum of chord lengths in R^{2n} between consecutive samples.
double polyline_length(const PathEval& path, std::size_t samples);
double polyline_length_serial(const PathEval& path, std::size_t samples);

struct ChordStats {
    double min_chord = 0.0;
    double max_chord = 0.0;
    double total = 0.0;
};

// Chord statistics, used to check constant-speed parametrization.
ChordStats chord_stats(const PathEval& path, std::size_t samples);

// Chord length of a polyline stored row-major as `count` points of size `dim`.
double chord_length(std::span<const double> points, std::size_t dim);
double chord_length_serial(std::span<const double> points, std::size_t dim);

int max_threads();

}  // namespace geoconfig::kernels

namespace geoconfig {

// Minimum gap d(first(t), second(t)) over `samples` equally spaced times.
inline double min_gap_along(const PathEval& path, std::size_t samples) {
    return kernels::min_gap_along(path, samples);
}

}  // namespace geoconfig
