#pragma once

#include <array>
#include <string>
#include <vector>

#include "roaddiv/config.hpp"
#include "roaddiv/distances.hpp"

namespace roaddiv {

enum class AggregationId { Weitzman, DistanceEntropy, Sum, Average, AverageOfMaxima };

inline constexpr std::size_t kAggregationCount = 5;

const std::array<AggregationId, kAggregationCount>& all_aggregations();
const char* to_string(AggregationId id);

/// One of the 47 diversity measures: a (distance, aggregation) pair or one of
/// the two direct measures.
struct DiversityMeasureId {
  enum class Kind { Aggregated, TestSetDiameter, ConvexHull };

  Kind kind = Kind::Aggregated;
  PairwiseDistanceId distance = PairwiseDistanceId::DiscreteFrechet;
  AggregationId aggregation = AggregationId::Weitzman;

  static DiversityMeasureId aggregated(PairwiseDistanceId d, AggregationId a) {
    return {Kind::Aggregated, d, a};
  }
  static DiversityMeasureId test_set_diameter() {
    return {Kind::TestSetDiameter, {}, {}};
  }
  static DiversityMeasureId convex_hull() {
    return {Kind::ConvexHull, {}, {}};
  }

  std::string name() const;

  bool operator==(const DiversityMeasureId&) const = default;

  /// All 47 measures in fixed enumeration order: the 9 x 5 grid (distance
  /// major), then test set diameter, then convex hull.
  static const std::vector<DiversityMeasureId>& catalogue();
};

inline constexpr std::size_t kDiversityMeasureCount = 47;

/// A single suite-level diversity value.
struct DiversityValue {
  DiversityMeasureId measure;
  double value = 0.0;
  std::string suite_id;
  bool timed_out = false;  // only possible for budgeted Weitzman
  bool exact = true;       // false when a Weitzman lower bound was returned
  std::string error;       // nonempty when the measure failed; value then 0
};

/// Nodes explored per second assumed when converting a wall-clock Weitzman
/// budget into a deterministic node budget. The branch-and-bound search stops
/// on a node count, not a clock, so equal inputs give bit-identical results.
inline constexpr double kWeitzmanNodesPerSecond = 2.0e6;

/// Weitzman's recursive diversity. Exact (subset DP) for n <= 20; larger
/// instances run a budgeted branch-and-bound and return the best lower bound
/// with timed_out set when the node budget expires.
DiversityValue weitzman(const DistanceMatrix& m, double budget_seconds = 300.0);

/// Shannon entropy (nats) of the normalized minimum-spanning-tree edge
/// weights of the complete relationship graph. All-zero MST yields 0.
DiversityValue distance_entropy(const DistanceMatrix& m);

/// MST edge weights under the deterministic lexicographic tie-break, exposed
/// for verification.
std::vector<double> mst_edge_weights(const DistanceMatrix& m);

DiversityValue sum_aggregation(const DistanceMatrix& m);
DiversityValue average_aggregation(const DistanceMatrix& m);
DiversityValue average_of_maxima(const DistanceMatrix& m);

DiversityValue aggregate(AggregationId id, const DistanceMatrix& m, double weitzman_budget);

/// Full per-suite catalogue evaluation: the 9 distance matrices, every
/// aggregation of each, the direct measures, and per-step wall times.
struct SuiteCatalogue {
  std::string suite_id;
  std::vector<DiversityValue> values;  // 47, catalogue order
  std::array<DistanceMatrix, kPairwiseDistanceCount> matrices;
  std::array<double, kPairwiseDistanceCount> matrix_seconds{};
  std::array<std::array<double, kAggregationCount>, kPairwiseDistanceCount> agg_seconds{};
  double tsd_seconds = 0.0;
  double hull_seconds = 0.0;
  double weitzman_budgeted_seconds = 0.0;  // wall time burned in budgeted calls
};

SuiteCatalogue compute_catalogue_detailed(const std::vector<const PreparedRoad*>& suite,
                                          const CatalogueConfig& config,
                                          const FeatureNormalization& norms,
                                          const std::string& suite_id);

/// Re-evaluates a catalogue after roads were appended, extending each stored
/// distance matrix with the new pairs only.
SuiteCatalogue extend_catalogue_detailed(const SuiteCatalogue& base,
                                         const std::vector<const PreparedRoad*>& extended_suite,
                                         const CatalogueConfig& config,
                                         const FeatureNormalization& norms,
                                         const std::string& suite_id);

/// Computes all 47 measures for a suite of road geometries. Per-measure
/// failures are recorded in the value's error field and never abort the
/// catalogue.
std::vector<DiversityValue> compute_catalogue(const std::vector<RoadGeometry>& suite,
                                              const CatalogueConfig& config);

}  // namespace roaddiv
