#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace roaddiv {

struct Point2d {
  double x = 0.0;
  double y = 0.0;
};

inline Point2d operator+(Point2d a, Point2d b) { return {a.x + b.x, a.y + b.y}; }
inline Point2d operator-(Point2d a, Point2d b) { return {a.x - b.x, a.y - b.y}; }
inline Point2d operator*(double s, Point2d p) { return {s * p.x, s * p.y}; }
inline double dot(Point2d a, Point2d b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2d a, Point2d b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2d p) { return std::sqrt(p.x * p.x + p.y * p.y); }
inline double distance(Point2d a, Point2d b) { return norm(a - b); }

/// Raw road as it arrives from a generator: sparse Cartesian control points.
struct ControlPointRoad {
  std::string id;
  std::vector<Point2d> control_points;
  double lane_width = 4.0;  // carried through for validation, unused by distances
};

/// Interpolated planar road: the curve object every measure operates on.
///
/// `cum_arclength[i]` is the polyline length from the first point up to
/// point i, so cum_arclength[0] == 0 and the last entry is the total length.
struct RoadGeometry {
  std::string id;
  std::vector<Point2d> points;
  std::vector<double> cum_arclength;

  double total_length() const { return cum_arclength.empty() ? 0.0 : cum_arclength.back(); }

  /// Builds a geometry from a polyline, validating finiteness and that no two
  /// consecutive points coincide (distance > 1e-9 m). Throws DegenerateRoadError.
  static RoadGeometry from_points(std::string id, std::vector<Point2d> pts);

  /// Point at arclength s (clamped to [0, total_length]) by linear
  /// interpolation along the polyline.
  Point2d point_at(double s) const;
};

/// Signed heading changes between consecutive segments, each in (-pi, pi].
struct AngleSequence {
  std::vector<double> angles;
};

/// Signed Menger curvature sampled at interior points plus its
/// finite-difference derivative over arclength.
struct CurvatureProfile {
  std::vector<double> kappa;      // 1/m, signed by turn direction, size |points|-2
  std::vector<double> s;          // arclength of each sample, same size as kappa
  std::vector<double> dkappa_ds;  // 1/m^2, size |kappa|-1 (forward differences)
};

/// Multiset of quantized (length bucket, turn bucket) segments.
struct SegmentSet {
  std::map<std::pair<int, int>, int> counts;

  std::size_t size() const {
    std::size_t total = 0;
    for (const auto& [key, mult] : counts) total += static_cast<std::size_t>(mult);
    return total;
  }
};

/// Per-frame curvature statistics: (mean |k|, max |k|, mean |dk/ds|, max |dk/ds|).
struct ComplexityVector {
  double mean_abs_kappa = 0.0;
  double max_abs_kappa = 0.0;
  double mean_abs_dkappa = 0.0;
  double max_abs_dkappa = 0.0;

  std::array<double, 4> as_array() const {
    return {mean_abs_kappa, max_abs_kappa, mean_abs_dkappa, max_abs_dkappa};
  }
};

/// Seven aggregate shape features of a single road.
///
/// Headings that feed direction_coverage are measured relative to the road's
/// initial heading, so the whole vector is invariant under rigid motions.
struct RoadFeatureVector {
  double total_length = 0.0;        // m
  double min_radius = 0.0;          // m, clamped to [1, 1000]
  double mean_abs_curvature = 0.0;  // 1/m
  double max_abs_curvature = 0.0;   // 1/m
  int direction_coverage = 0;       // occupied 10-degree heading bins, 1..36
  int turn_count = 0;               // sign changes of kappa above threshold
  double std_heading_change = 0.0;  // rad, population std of turning angles

  static constexpr std::size_t kCount = 7;

  std::array<double, kCount> as_array() const {
    return {total_length,
            min_radius,
            mean_abs_curvature,
            max_abs_curvature,
            static_cast<double>(direction_coverage),
            static_cast<double>(turn_count),
            std_heading_change};
  }
};

/// Curvature magnitude below which a sample does not count towards turn_count.
inline constexpr double kTurnKappaThreshold = 0.01;  // 1/m

/// Wraps an angle to (-pi, pi]; ties at -pi resolve to +pi.
double wrap_angle(double a);

/// Cubic-spline interpolation of the control points, resampled at roughly
/// uniform arclength spacing. The output passes through the first and last
/// control points exactly.
RoadGeometry interpolate_road(const ControlPointRoad& road, double spacing_m);

/// n points at equal arclength intervals along g. Total length is preserved
/// within 0.1% and resampling an already uniform road at its own n is the
/// identity within 1e-9 m.
RoadGeometry resample_uniform(const RoadGeometry& g, std::size_t n);

/// Signed heading change between consecutive segments.
AngleSequence turning_angles(const RoadGeometry& g);

/// Signed Menger curvature (inverse circumradius of consecutive point
/// triplets, signed by turn direction) at interior points.
CurvatureProfile curvature_profile(const RoadGeometry& g);

/// Rotation angle about the start point that minimizes the sum of squared
/// point-to-point distances from `other` (translated start-to-start) to
/// `reference`. Closed form.
double optimal_rotation_angle(const RoadGeometry& reference, const RoadGeometry& other);

/// Translates `other` so starting points coincide, then rotates about the
/// start by the least-squares-optimal angle. Inputs are not modified.
RoadGeometry procrustes_align(const RoadGeometry& reference, const RoadGeometry& other);

/// Quantizes consecutive segments into (length bucket, heading-change bucket)
/// pairs. Length buckets cover [0, 2 x mean segment length]; turn buckets
/// cover (-pi, pi]. Bucketing rounds to the nearest bucket center so straight
/// segments land stably in the middle bucket.
SegmentSet segment_set(const RoadGeometry& g, int length_buckets, int turn_buckets);

/// Partitions the road into consecutive arclength frames of frame_length_m
/// (a trailing frame shorter than half the frame length merges into the
/// previous one) and computes one ComplexityVector per frame.
std::vector<ComplexityVector> complexity_frames(const RoadGeometry& g, double frame_length_m);

RoadFeatureVector road_feature_vector(const RoadGeometry& g);

/// Convex hull (counter-clockwise, starting at the lexicographically smallest
/// point, collinear points dropped).
std::vector<Point2d> convex_hull(std::vector<Point2d> pts);

/// Area of the convex hull of the union of all point sets; 0 when the union
/// is collinear.
double convex_hull_area(const std::vector<std::vector<Point2d>>& point_sets);

/// True iff any two non-adjacent segments of g intersect or touch.
bool self_intersects(const RoadGeometry& g);

/// Rigid motion moving the start to the origin and the initial heading onto
/// the +x axis. Canonical pose shared by serialization and hull alignment.
RoadGeometry canonical_pose(const RoadGeometry& g);

}  // namespace roaddiv
