#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geoconfig {

enum class ErrorCode {
    dimension_mismatch,
    infeasible,          // configuration outside the clearance-constrained space
    degenerate,          // coincident points where distinct points are required
    invalid_argument,
    parallel_input,      // h and k are parallel; the parallel solver must be used
    boundary_endpoint,   // an endpoint lies on the boundary; use the boundary shortcut
    missing_choice,      // type (c) pair queried without a direction w
    non_unique,          // antipodal directions, geodesic not unique
    out_of_domain,
};

std::string_view to_string(ErrorCode code);

class GeoError : public std::runtime_error {
public:
    GeoError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace geoconfig
