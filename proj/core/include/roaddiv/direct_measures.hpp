#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "roaddiv/aggregation.hpp"
#include "roaddiv/geometry.hpp"

namespace roaddiv {

/// Point count of the canonical serialization, independent of the catalogue
/// resampling configuration so byte forms stay comparable across runs.
inline constexpr std::size_t kSerializePoints = 100;

/// Canonical text serialization of a road: resampled to kSerializePoints,
/// moved to the canonical pose (start at origin, initial heading +x), points
/// printed one per line at fixed 3-decimal precision. Identical geometries --
/// including rigid-motion copies -- give identical bytes.
std::string serialize_road(const RoadGeometry& g);

/// "zlib-<level>" codec selector; level in 1..9.
struct CompressorConfig {
  std::string codec = "zlib-9";
};

/// Compressed byte count of the input under the configured codec.
std::size_t compressed_size(std::string_view bytes, const CompressorConfig& config);

/// Test set diameter: NCD for multisets over the concatenated canonical
/// serializations,
///   NCD1(X) = (C(X) - min_x C(X \ {x})) / max_x C(X \ {x}),
/// with the concatenation order pinned to sorted road id.
DiversityValue test_set_diameter(const std::vector<RoadGeometry>& suite,
                                 const CompressorConfig& config, int jobs = 1);

/// Variant over pre-serialized blobs (id, bytes); used by the catalogue cache.
DiversityValue test_set_diameter_serialized(
    std::vector<std::pair<std::string, const std::string*>> blobs, const CompressorConfig& config,
    int jobs = 1);

/// Area of the convex hull of the union of all road points, in m^2. With
/// canonical_align the hull measures shape spread rather than placement
/// spread; disable it for heading-sensitive analyses.
DiversityValue convex_hull_diversity(const std::vector<RoadGeometry>& suite,
                                     bool canonical_align = true);

/// Same measure over point sets that are already posed as desired.
DiversityValue convex_hull_diversity_points(const std::vector<std::vector<Point2d>>& point_sets);

}  // namespace roaddiv
