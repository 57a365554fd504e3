#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "roaddiv/config.hpp"
#include "roaddiv/geometry.hpp"

namespace roaddiv {

/// The nine pairwise road distance functions.
enum class PairwiseDistanceId {
  DiscreteFrechet,
  PCM,
  DTW,
  NormalizedRelativeAngle,
  ComplexityVectors,
  IterativeLevenshtein,
  JaccardDistance,
  AreaBetweenCurves,
  ManhattanFeatures,
};

inline constexpr std::size_t kPairwiseDistanceCount = 9;

const std::array<PairwiseDistanceId, kPairwiseDistanceCount>& all_pairwise_distances();
const char* to_string(PairwiseDistanceId id);

/// Symmetric non-negative pairwise-distance table with zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }

  double at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }

  /// Copy extended to m rows/columns (m >= size); new entries zero.
  DistanceMatrix extended(std::size_t m) const;

  /// Throws if any entry is negative, non-finite, asymmetric, or the diagonal
  /// is nonzero.
  void validate() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// ---------------------------------------------------------------------------
// Pairwise distance functions. Point-based functions expect both roads
// prepared the same way (the matrix builder resamples to a common count).
// ---------------------------------------------------------------------------

/// Dynamic-programming discrete Frechet distance over the point sequences.
double discrete_frechet(const RoadGeometry& a, const RoadGeometry& b);

/// Partial-curve-mapping distance. Both curves are normalized (centroid to
/// origin, scaled by mean centroid distance), then the shorter one slides
/// along the longer and the summed segment-strip area is minimized over
/// offsets. Ties in length compute both directions and take the minimum.
double pcm_distance(const RoadGeometry& a, const RoadGeometry& b);

/// Classic dynamic time warping, Euclidean point cost, full window, sum cost.
double dtw_distance(const RoadGeometry& a, const RoadGeometry& b);

/// L2 distance between the turning-angle profiles; the normalized variant
/// divides by sqrt(sequence length). Requires equal point counts.
double relative_angle_distance(const RoadGeometry& a, const RoadGeometry& b, bool normalized);
double relative_angle_distance(const AngleSequence& a, const AngleSequence& b, bool normalized);

/// Hausdorff distance between the per-frame complexity-vector sets.
double complexity_distance(const RoadGeometry& a, const RoadGeometry& b, double frame_length_m);
double complexity_distance(const std::vector<ComplexityVector>& a,
                           const std::vector<ComplexityVector>& b);

/// Unit-cost edit distance between the angle sequences quantized into buckets
/// of angle_bucket_deg degrees.
double iterative_levenshtein(const RoadGeometry& a, const RoadGeometry& b,
                             double angle_bucket_deg);
double levenshtein_symbols(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> quantize_angles(const AngleSequence& seq, double bucket_deg);

/// 1 - multiset Jaccard similarity of the segment sets (min multiplicities
/// over max multiplicities).
double jaccard_distance(const SegmentSet& a, const SegmentSet& b);
double jaccard_distance(const RoadGeometry& a, const RoadGeometry& b);

/// Total unsigned area of the quadrilateral strip between corresponding
/// points. Requires equal point counts.
double area_between_curves(const RoadGeometry& a, const RoadGeometry& b);

/// Min-max normalization bounds per feature, computed over the active corpus.
struct FeatureNormalization {
  std::array<double, RoadFeatureVector::kCount> lo{};
  std::array<double, RoadFeatureVector::kCount> hi{};

  static FeatureNormalization over(const std::vector<RoadFeatureVector>& features);

  /// Normalized coordinate in [0, 1]; a collapsed bound contributes 0.
  double normalize(std::size_t dim, double value) const;
};

/// L1 distance between min-max-normalized feature vectors; total in [0, 7].
double manhattan_feature_distance(const RoadFeatureVector& a, const RoadFeatureVector& b,
                                  const FeatureNormalization& norms);
double manhattan_feature_distance(const RoadGeometry& a, const RoadGeometry& b,
                                  const FeatureNormalization& norms);

// ---------------------------------------------------------------------------
// Prepared roads: per-road derivatives cached once and reused across suites.
// ---------------------------------------------------------------------------

struct PreparedRoad {
  RoadGeometry resampled;  // config.resample_points points
  AngleSequence angles;
  SegmentSet segments;
  RoadFeatureVector features;
  std::vector<ComplexityVector> frames;
  std::string serialized;  // canonical byte form for compression measures
};

PreparedRoad prepare_road(const RoadGeometry& g, const CatalogueConfig& config);

/// One pairwise value between prepared roads. Alignment (when configured)
/// applies to the point-based functions only; the remaining functions operate
/// on rotation-invariant derivatives.
double pairwise_distance(PairwiseDistanceId id, const PreparedRoad& a, const PreparedRoad& b,
                         const CatalogueConfig& config, const FeatureNormalization& norms);

/// Fills all n(n-1)/2 pairs; deterministic for any jobs value because every
/// entry is computed independently.
DistanceMatrix distance_matrix(const std::vector<const PreparedRoad*>& suite,
                               PairwiseDistanceId id, const CatalogueConfig& config,
                               const FeatureNormalization& norms);

/// Extends a base matrix over `all` (base members first) with the pairs that
/// involve indices >= base.size() only.
DistanceMatrix extend_distance_matrix(const DistanceMatrix& base,
                                      const std::vector<const PreparedRoad*>& all,
                                      PairwiseDistanceId id, const CatalogueConfig& config,
                                      const FeatureNormalization& norms);

/// Convenience entry point matching the suite-of-geometries contract:
/// prepares every road at config defaults, computes corpus normalization
/// bounds over the suite, then builds the matrix.
DistanceMatrix distance_matrix(const std::vector<RoadGeometry>& suite, PairwiseDistanceId id,
                               const CatalogueConfig& config);

}  // namespace roaddiv
