#include "roaddiv/distances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "roaddiv/direct_measures.hpp"
#include "roaddiv/errors.hpp"
#include "roaddiv/parallel.hpp"

namespace roaddiv {

namespace {

double point_cost(Point2d a, Point2d b) {
  double dx = a.x - b.x, dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

/// Unsigned area of the quad (a1 a2 b2 b1) via two triangles.
double quad_area(Point2d a1, Point2d a2, Point2d b2, Point2d b1) {
  double t1 = 0.5 * std::abs(cross(a2 - a1, b1 - a1));
  double t2 = 0.5 * std::abs(cross(b2 - a2, b1 - a2));
  return t1 + t2;
}

/// Centroid-normalized copy: translated to the origin and scaled by the mean
/// centroid distance.
RoadGeometry pcm_normalize(const RoadGeometry& g) {
  Point2d centroid{0.0, 0.0};
  for (Point2d p : g.points) centroid = centroid + p;
  centroid = (1.0 / static_cast<double>(g.points.size())) * centroid;
  double mean_dist = 0.0;
  for (Point2d p : g.points) mean_dist += distance(p, centroid);
  mean_dist /= static_cast<double>(g.points.size());
  if (mean_dist < 1e-12) {
    throw DegenerateRoadError("road '" + g.id + "': zero extent, cannot normalize");
  }
  std::vector<Point2d> pts;
  pts.reserve(g.points.size());
  for (Point2d p : g.points) pts.push_back((1.0 / mean_dist) * (p - centroid));
  return RoadGeometry::from_points(g.id, std::move(pts));
}

/// Minimum strip area over all placements of the (shorter) curve onto a
/// section of the (longer) curve. Candidate offsets are the longer curve's
/// vertex arclengths where the window fits, plus the flush-end offset.
double pcm_directed(const RoadGeometry& shorter, const RoadGeometry& longer) {
  double ls = shorter.total_length();
  double ll = longer.total_length();
  std::vector<double> offsets;
  for (double o : longer.cum_arclength) {
    if (o + ls <= ll + 1e-9) offsets.push_back(o);
  }
  double flush = ll - ls;
  if (flush >= 0.0 && (offsets.empty() || std::abs(offsets.back() - flush) > 1e-12)) {
    offsets.push_back(flush);
  }
  if (offsets.empty()) offsets.push_back(0.0);

  double best = std::numeric_limits<double>::infinity();
  for (double o : offsets) {
    double area = 0.0;
    Point2d prev_s = shorter.points.front();
    Point2d prev_t = longer.point_at(o);
    for (std::size_t i = 1; i < shorter.points.size(); ++i) {
      Point2d cur_s = shorter.points[i];
      Point2d cur_t = longer.point_at(o + shorter.cum_arclength[i]);
      area += quad_area(prev_s, cur_s, cur_t, prev_t);
      prev_s = cur_s;
      prev_t = cur_t;
    }
    best = std::min(best, area);
  }
  return best;
}

double relative_angle_impl(const std::vector<double>& a, const std::vector<double>& b,
                           bool normalized) {
  if (a.size() != b.size()) {
    throw ShapeMismatchError("relative angle distance: angle sequence lengths differ");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    sum += d * d;
  }
  double l2 = std::sqrt(sum);
  return normalized ? l2 / std::sqrt(static_cast<double>(a.size())) : l2;
}

double complexity_vector_cost(const ComplexityVector& a, const ComplexityVector& b) {
  auto va = a.as_array();
  auto vb = b.as_array();
  double sum = 0.0;
  for (std::size_t i = 0; i < va.size(); ++i) {
    double d = va[i] - vb[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double hausdorff_directed(const std::vector<ComplexityVector>& a,
                          const std::vector<ComplexityVector>& b) {
  double worst = 0.0;
  for (const auto& fa : a) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& fb : b) nearest = std::min(nearest, complexity_vector_cost(fa, fb));
    worst = std::max(worst, nearest);
  }
  return worst;
}

}  // namespace

const std::array<PairwiseDistanceId, kPairwiseDistanceCount>& all_pairwise_distances() {
  static const std::array<PairwiseDistanceId, kPairwiseDistanceCount> ids = {
      PairwiseDistanceId::DiscreteFrechet,      PairwiseDistanceId::PCM,
      PairwiseDistanceId::DTW,                  PairwiseDistanceId::NormalizedRelativeAngle,
      PairwiseDistanceId::ComplexityVectors,    PairwiseDistanceId::IterativeLevenshtein,
      PairwiseDistanceId::JaccardDistance,      PairwiseDistanceId::AreaBetweenCurves,
      PairwiseDistanceId::ManhattanFeatures,
  };
  return ids;
}

const char* to_string(PairwiseDistanceId id) {
  switch (id) {
    case PairwiseDistanceId::DiscreteFrechet: return "discrete_frechet";
    case PairwiseDistanceId::PCM: return "pcm";
    case PairwiseDistanceId::DTW: return "dtw";
    case PairwiseDistanceId::NormalizedRelativeAngle: return "norm_rel_angle";
    case PairwiseDistanceId::ComplexityVectors: return "complexity";
    case PairwiseDistanceId::IterativeLevenshtein: return "iter_levenshtein";
    case PairwiseDistanceId::JaccardDistance: return "jaccard";
    case PairwiseDistanceId::AreaBetweenCurves: return "area_between";
    case PairwiseDistanceId::ManhattanFeatures: return "manhattan_features";
  }
  return "unknown";
}

DistanceMatrix DistanceMatrix::extended(std::size_t m) const {
  DistanceMatrix out(m);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) out.set(i, j, at(i, j));
  }
  return out;
}

void DistanceMatrix::validate() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (at(i, i) != 0.0) throw Error("distance matrix: nonzero diagonal");
    for (std::size_t j = i + 1; j < n_; ++j) {
      double v = at(i, j);
      if (!std::isfinite(v)) throw NonFiniteError("distance matrix: non-finite entry");
      if (v < 0.0) throw Error("distance matrix: negative entry");
      if (v != at(j, i)) throw Error("distance matrix: asymmetric entry");
    }
  }
}

double discrete_frechet(const RoadGeometry& a, const RoadGeometry& b) {
  const auto& pa = a.points;
  const auto& pb = b.points;
  const std::size_t n = pa.size(), m = pb.size();
  std::vector<double> prev(m), cur(m);
  for (std::size_t j = 0; j < m; ++j) {
    double d = point_cost(pa[0], pb[j]);
    prev[j] = j == 0 ? d : std::max(prev[j - 1], d);
  }
  for (std::size_t i = 1; i < n; ++i) {
    cur[0] = std::max(prev[0], point_cost(pa[i], pb[0]));
    for (std::size_t j = 1; j < m; ++j) {
      double reach = std::min({prev[j], cur[j - 1], prev[j - 1]});
      cur[j] = std::max(reach, point_cost(pa[i], pb[j]));
    }
    std::swap(prev, cur);
  }
  return prev[m - 1];
}

double dtw_distance(const RoadGeometry& a, const RoadGeometry& b) {
  const auto& pa = a.points;
  const auto& pb = b.points;
  const std::size_t n = pa.size(), m = pb.size();
  std::vector<double> prev(m), cur(m);
  for (std::size_t j = 0; j < m; ++j) {
    double d = point_cost(pa[0], pb[j]);
    prev[j] = j == 0 ? d : prev[j - 1] + d;
  }
  for (std::size_t i = 1; i < n; ++i) {
    cur[0] = prev[0] + point_cost(pa[i], pb[0]);
    for (std::size_t j = 1; j < m; ++j) {
      cur[j] = point_cost(pa[i], pb[j]) + std::min({prev[j], cur[j - 1], prev[j - 1]});
    }
    std::swap(prev, cur);
  }
  return prev[m - 1];
}

double pcm_distance(const RoadGeometry& a, const RoadGeometry& b) {
  if (a.points.size() < 3 || b.points.size() < 3) {
    throw DegenerateRoadError("pcm: both roads need >= 3 points");
  }
  RoadGeometry na = pcm_normalize(a);
  RoadGeometry nb = pcm_normalize(b);
  double la = na.total_length(), lb = nb.total_length();
  if (std::abs(la - lb) <= 1e-12 * std::max({la, lb, 1.0})) {
    return std::min(pcm_directed(na, nb), pcm_directed(nb, na));
  }
  return la < lb ? pcm_directed(na, nb) : pcm_directed(nb, na);
}

double relative_angle_distance(const RoadGeometry& a, const RoadGeometry& b, bool normalized) {
  if (a.points.size() != b.points.size()) {
    throw ShapeMismatchError("relative angle distance: point counts differ");
  }
  return relative_angle_impl(turning_angles(a).angles, turning_angles(b).angles, normalized);
}

double relative_angle_distance(const AngleSequence& a, const AngleSequence& b, bool normalized) {
  return relative_angle_impl(a.angles, b.angles, normalized);
}

double complexity_distance(const std::vector<ComplexityVector>& a,
                           const std::vector<ComplexityVector>& b) {
  if (a.empty() || b.empty()) throw DegenerateRoadError("complexity distance: no frames");
  return std::max(hausdorff_directed(a, b), hausdorff_directed(b, a));
}

double complexity_distance(const RoadGeometry& a, const RoadGeometry& b, double frame_length_m) {
  return complexity_distance(complexity_frames(a, frame_length_m),
                             complexity_frames(b, frame_length_m));
}

std::vector<int> quantize_angles(const AngleSequence& seq, double bucket_deg) {
  std::vector<int> symbols;
  symbols.reserve(seq.angles.size());
  for (double a : seq.angles) {
    double deg = a * 180.0 / std::numbers::pi;
    // Nearest-center bucket so exactly straight segments quantize stably.
    symbols.push_back(static_cast<int>(std::floor(deg / bucket_deg + 0.5)));
  }
  return symbols;
}

double levenshtein_symbols(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return static_cast<double>(prev[m]);
}

double iterative_levenshtein(const RoadGeometry& a, const RoadGeometry& b,
                             double angle_bucket_deg) {
  return levenshtein_symbols(quantize_angles(turning_angles(a), angle_bucket_deg),
                             quantize_angles(turning_angles(b), angle_bucket_deg));
}

double jaccard_distance(const SegmentSet& a, const SegmentSet& b) {
  if (a.counts.empty() || b.counts.empty()) {
    throw EmptySegmentsError("jaccard distance: empty segment set");
  }
  long long inter = 0, uni = 0;
  auto ia = a.counts.begin();
  auto ib = b.counts.begin();
  while (ia != a.counts.end() || ib != b.counts.end()) {
    if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
      uni += ia->second;
      ++ia;
    } else if (ia == a.counts.end() || ib->first < ia->first) {
      uni += ib->second;
      ++ib;
    } else {
      inter += std::min(ia->second, ib->second);
      uni += std::max(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  return 1.0 - static_cast<double>(inter) / static_cast<double>(uni);
}

double jaccard_distance(const RoadGeometry& a, const RoadGeometry& b) {
  CatalogueConfig defaults;
  return jaccard_distance(segment_set(a, defaults.length_buckets, defaults.turn_buckets),
                          segment_set(b, defaults.length_buckets, defaults.turn_buckets));
}

double area_between_curves(const RoadGeometry& a, const RoadGeometry& b) {
  if (a.points.size() != b.points.size()) {
    throw ShapeMismatchError("area between curves: point counts differ");
  }
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < a.points.size(); ++i) {
    area += quad_area(a.points[i], a.points[i + 1], b.points[i + 1], b.points[i]);
  }
  return area;
}

FeatureNormalization FeatureNormalization::over(const std::vector<RoadFeatureVector>& features) {
  if (features.empty()) {
    throw std::invalid_argument("feature normalization needs at least one vector");
  }
  FeatureNormalization n;
  n.lo.fill(std::numeric_limits<double>::infinity());
  n.hi.fill(-std::numeric_limits<double>::infinity());
  for (const auto& f : features) {
    auto v = f.as_array();
    for (std::size_t d = 0; d < RoadFeatureVector::kCount; ++d) {
      n.lo[d] = std::min(n.lo[d], v[d]);
      n.hi[d] = std::max(n.hi[d], v[d]);
    }
  }
  return n;
}

double FeatureNormalization::normalize(std::size_t dim, double value) const {
  double span = hi[dim] - lo[dim];
  if (span <= 0.0) return 0.0;  // collapsed bound: the feature contributes nothing
  return std::clamp((value - lo[dim]) / span, 0.0, 1.0);
}

double manhattan_feature_distance(const RoadFeatureVector& a, const RoadFeatureVector& b,
                                  const FeatureNormalization& norms) {
  auto va = a.as_array();
  auto vb = b.as_array();
  double sum = 0.0;
  for (std::size_t d = 0; d < RoadFeatureVector::kCount; ++d) {
    sum += std::abs(norms.normalize(d, va[d]) - norms.normalize(d, vb[d]));
  }
  return sum;
}

double manhattan_feature_distance(const RoadGeometry& a, const RoadGeometry& b,
                                  const FeatureNormalization& norms) {
  return manhattan_feature_distance(road_feature_vector(a), road_feature_vector(b), norms);
}

PreparedRoad prepare_road(const RoadGeometry& g, const CatalogueConfig& config) {
  PreparedRoad p;
  p.resampled = resample_uniform(g, static_cast<std::size_t>(config.resample_points));
  p.angles = turning_angles(p.resampled);
  p.segments = segment_set(p.resampled, config.length_buckets, config.turn_buckets);
  p.features = road_feature_vector(p.resampled);
  p.frames = complexity_frames(p.resampled, config.frame_length_m);
  p.serialized = serialize_road(p.resampled);
  return p;
}

double pairwise_distance(PairwiseDistanceId id, const PreparedRoad& a, const PreparedRoad& b,
                         const CatalogueConfig& config, const FeatureNormalization& norms) {
  const bool aligned = config.alignment == AlignmentMode::Aligned;
  auto aligned_other = [&]() {
    return aligned ? procrustes_align(a.resampled, b.resampled) : b.resampled;
  };
  switch (id) {
    case PairwiseDistanceId::DiscreteFrechet:
      return discrete_frechet(a.resampled, aligned_other());
    case PairwiseDistanceId::PCM:
      return pcm_distance(a.resampled, aligned_other());
    case PairwiseDistanceId::DTW:
      return dtw_distance(a.resampled, aligned_other());
    case PairwiseDistanceId::AreaBetweenCurves:
      return area_between_curves(a.resampled, aligned_other());
    case PairwiseDistanceId::NormalizedRelativeAngle:
      return relative_angle_impl(a.angles.angles, b.angles.angles, true);
    case PairwiseDistanceId::ComplexityVectors:
      return complexity_distance(a.frames, b.frames);
    case PairwiseDistanceId::IterativeLevenshtein:
      return levenshtein_symbols(quantize_angles(a.angles, config.levenshtein_bucket_deg),
                                 quantize_angles(b.angles, config.levenshtein_bucket_deg));
    case PairwiseDistanceId::JaccardDistance:
      return jaccard_distance(a.segments, b.segments);
    case PairwiseDistanceId::ManhattanFeatures:
      return manhattan_feature_distance(a.features, b.features, norms);
  }
  throw std::invalid_argument("unknown pairwise distance id");
}

namespace {

DistanceMatrix fill_pairs(DistanceMatrix m, const std::vector<const PreparedRoad*>& suite,
                          const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                          PairwiseDistanceId id, const CatalogueConfig& config,
                          const FeatureNormalization& norms) {
  parallel_for(pairs.size(), config.jobs, [&](std::size_t k) {
    auto [i, j] = pairs[k];
    try {
      m.set(i, j, pairwise_distance(id, *suite[i], *suite[j], config, norms));
    } catch (const Error& e) {
      throw Error(std::string(to_string(id)) + " pair (" + std::to_string(i) + ", " +
                  std::to_string(j) + "): " + e.what());
    }
  });
  m.validate();
  return m;
}

}  // namespace

DistanceMatrix distance_matrix(const std::vector<const PreparedRoad*>& suite,
                               PairwiseDistanceId id, const CatalogueConfig& config,
                               const FeatureNormalization& norms) {
  if (suite.size() < 2) throw std::invalid_argument("distance matrix needs >= 2 roads");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(suite.size() * (suite.size() - 1) / 2);
  for (std::size_t i = 0; i < suite.size(); ++i) {
    for (std::size_t j = i + 1; j < suite.size(); ++j) pairs.emplace_back(i, j);
  }
  return fill_pairs(DistanceMatrix(suite.size()), suite, pairs, id, config, norms);
}

DistanceMatrix extend_distance_matrix(const DistanceMatrix& base,
                                      const std::vector<const PreparedRoad*>& all,
                                      PairwiseDistanceId id, const CatalogueConfig& config,
                                      const FeatureNormalization& norms) {
  const std::size_t n0 = base.size();
  if (all.size() < n0) throw std::invalid_argument("extended suite smaller than base");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = std::max(i + 1, n0); j < all.size(); ++j) pairs.emplace_back(i, j);
  }
  return fill_pairs(base.extended(all.size()), all, pairs, id, config, norms);
}

DistanceMatrix distance_matrix(const std::vector<RoadGeometry>& suite, PairwiseDistanceId id,
                               const CatalogueConfig& config) {
  std::vector<PreparedRoad> prepared;
  prepared.reserve(suite.size());
  for (const auto& g : suite) prepared.push_back(prepare_road(g, config));
  std::vector<const PreparedRoad*> ptrs;
  std::vector<RoadFeatureVector> feats;
  for (const auto& p : prepared) {
    ptrs.push_back(&p);
    feats.push_back(p.features);
  }
  return distance_matrix(ptrs, id, config, FeatureNormalization::over(feats));
}

}  // namespace roaddiv
