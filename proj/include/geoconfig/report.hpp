#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "geoconfig/error.hpp"

// Command layer behind the geoconfig CLI. Every command returns a JSON
// document; the executable only parses flags and prints.
namespace geoconfig::cli {

using nlohmann::json;

enum class SpaceKind { ordered, unordered, alt };

SpaceKind parse_space(std::string_view name);
const char* space_label(SpaceKind s);

struct QuerySpec {
    SpaceKind space = SpaceKind::ordered;
    std::size_t n = 2;
    std::vector<double> p;  // 2n coordinates: a then a'
    std::vector<double> q;
    std::size_t samples = 256;
    std::optional<std::vector<double>> w;
    double scale_eps = 2.0;  // clearance; inputs are rescaled so it becomes 2
};

// Whitespace- or comma-separated reals.
std::vector<double> parse_coords(std::string_view text);

// Reads {"space", "n", "p", "q", "samples", "w", "scale_eps"}.
QuerySpec query_from_json(const json& j);

void validate(const QuerySpec& spec);

// Round to 10 significant digits.
double sig10(double x);

json cmd_geodesic(const QuerySpec& spec);
json cmd_plan(const QuerySpec& spec);

enum class VerifyFixture { ex1, ex2 };

struct VerifySpec {
    std::size_t count = 100;
    std::size_t n = 2;
    std::uint64_t seed = 7;
    std::size_t waypoints = 400;
    std::size_t iters = 50000;
    std::optional<VerifyFixture> fixture;
};

// Default seed, overridden by GEOCONFIG_SEED when set.
std::uint64_t default_seed();

json cmd_verify(const VerifySpec& spec);

enum class Figure { fig1, fig2, fig3 };

Figure parse_figure(std::string_view name);

// SVG documents; byte-identical for identical inputs.
std::string render_figure(Figure fig);
std::string render_query(const QuerySpec& spec);

json error_json(ErrorCode code, std::string_view message);

// The configurations used by the built-in fixtures.
QuerySpec example_query(int which);

}  // namespace geoconfig::cli
