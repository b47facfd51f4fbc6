#pragma once

#include "trisq/polytope.hpp"
#include "trisq/sample.hpp"

#include <string>
#include <vector>

namespace trisq {

// Standalone SVG documents. Output depends only on the arguments: fixed
// 480x480 canvas, axes fitted to the data with a 5% pad.
std::string polygon_svg(const Polygon& polygon, const std::string& title, const std::string& xlabel = "d3",
                        const std::string& ylabel = "d4");

// Scaled Q^r for each r, drawn over the limit region.
std::string scaled_polygons_svg(const std::vector<unsigned>& rs, unsigned cutoff = kDefaultLimitCutoff);

std::string limit_region_svg(unsigned cutoff = kDefaultLimitCutoff);

// Batch points over Q^r.
std::string sample_scatter_svg(const SampleBatch& batch);

}  // namespace trisq
