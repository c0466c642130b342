#pragma once

#include "geoconfig/report.hpp"
#include "geoconfig/vec.hpp"

namespace geoconfig::cli::detail {

// A query converted to clearance-2 units; multiply lengths by `scale` to
// return to the caller's units.
struct NormalizedQuery {
    OrderedConfig p, q;
    double scale = 1.0;
};

NormalizedQuery normalize(const QuerySpec& spec);

}  // namespace geoconfig::cli::detail
