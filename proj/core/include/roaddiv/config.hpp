#pragma once

#include <string>

namespace roaddiv {

/// Whether point-based distances see Procrustes-aligned pairs and the hull
/// sees canonically posed roads (Aligned), or everything stays in world
/// coordinates (Raw, for heading-sensitive agents).
enum class AlignmentMode { Aligned, Raw };

inline const char* to_string(AlignmentMode m) {
  return m == AlignmentMode::Aligned ? "aligned" : "raw";
}

/// Knobs shared by the distance functions, the aggregations and the direct
/// measures. Defaults follow the library-wide conventions: 100-point
/// resampling, 10 length x 18 turn buckets, 20 m frames, 5-degree edit
/// symbols, zlib at maximum level.
struct CatalogueConfig {
  int resample_points = 100;
  AlignmentMode alignment = AlignmentMode::Aligned;
  int length_buckets = 10;
  int turn_buckets = 18;
  double frame_length_m = 20.0;
  double levenshtein_bucket_deg = 5.0;
  double weitzman_budget_seconds = 300.0;
  std::string codec = "zlib-9";
  bool dedup_exact_duplicates = false;
  int jobs = 1;
};

}  // namespace roaddiv
