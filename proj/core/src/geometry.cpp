#include "roaddiv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "roaddiv/errors.hpp"

namespace roaddiv {

namespace {

constexpr double kMinPointSeparation = 1e-9;  // m

bool finite(Point2d p) { return std::isfinite(p.x) && std::isfinite(p.y); }

std::vector<double> cumulative_arclength(const std::vector<Point2d>& pts) {
  std::vector<double> cum(pts.size(), 0.0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    cum[i] = cum[i - 1] + distance(pts[i - 1], pts[i]);
  }
  return cum;
}

/// Natural cubic spline through (t_i, v_i); evaluates by index lookup.
class NaturalSpline {
 public:
  NaturalSpline(const std::vector<double>& t, const std::vector<double>& v) : t_(t), v_(v) {
    const std::size_t n = t.size();
    m_.assign(n, 0.0);
    if (n < 3) return;  // second derivatives stay zero: linear
    // Tridiagonal solve for interior second derivatives (natural ends).
    std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      double h0 = t[i] - t[i - 1];
      double h1 = t[i + 1] - t[i];
      a[i] = h0;
      b[i] = 2.0 * (h0 + h1);
      c[i] = h1;
      d[i] = 6.0 * ((v[i + 1] - v[i]) / h1 - (v[i] - v[i - 1]) / h0);
    }
    for (std::size_t i = 2; i + 1 < n; ++i) {
      double w = a[i] / b[i - 1];
      b[i] -= w * c[i - 1];
      d[i] -= w * d[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
      m_[i] = (d[i] - c[i] * m_[i + 1]) / b[i];
      if (i == 1) break;
    }
  }

  double eval(double t) const {
    std::size_t i = segment_index(t);
    double h = t_[i + 1] - t_[i];
    double u = (t - t_[i]) / h;
    double w = 1.0 - u;
    return w * v_[i] + u * v_[i + 1] +
           (h * h / 6.0) * ((w * w * w - w) * m_[i] + (u * u * u - u) * m_[i + 1]);
  }

 private:
  std::size_t segment_index(double t) const {
    auto it = std::upper_bound(t_.begin(), t_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - t_.begin());
    if (i == 0) return 0;
    if (i >= t_.size()) return t_.size() - 2;
    return i - 1;
  }

  std::vector<double> t_;
  std::vector<double> v_;
  std::vector<double> m_;
};

double segment_heading(Point2d a, Point2d b) { return std::atan2(b.y - a.y, b.x - a.x); }

/// Nearest-center bucket index, clamped to [0, buckets).
int bucket_of(double value, double bucket_width, int buckets) {
  int idx = static_cast<int>(std::floor(value / bucket_width + 0.5));
  return std::clamp(idx, 0, buckets - 1);
}

int orientation_sign(Point2d a, Point2d b, Point2d c) {
  double v = cross(b - a, c - a);
  // Tolerance keeps near-collinear triples from flipping sign on fp noise.
  double scale = std::max({std::abs(a.x), std::abs(a.y), std::abs(b.x), std::abs(b.y),
                           std::abs(c.x), std::abs(c.y), 1.0});
  double eps = 1e-12 * scale * scale;
  if (v > eps) return 1;
  if (v < -eps) return -1;
  return 0;
}

bool on_segment(Point2d p, Point2d a, Point2d b) {
  return std::min(a.x, b.x) - 1e-12 <= p.x && p.x <= std::max(a.x, b.x) + 1e-12 &&
         std::min(a.y, b.y) - 1e-12 <= p.y && p.y <= std::max(a.y, b.y) + 1e-12;
}

bool segments_intersect(Point2d p1, Point2d p2, Point2d q1, Point2d q2) {
  int o1 = orientation_sign(p1, p2, q1);
  int o2 = orientation_sign(p1, p2, q2);
  int o3 = orientation_sign(q1, q2, p1);
  int o4 = orientation_sign(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(q1, p1, p2)) return true;
  if (o2 == 0 && on_segment(q2, p1, p2)) return true;
  if (o3 == 0 && on_segment(p1, q1, q2)) return true;
  if (o4 == 0 && on_segment(p2, q1, q2)) return true;
  return false;
}

}  // namespace

double wrap_angle(double a) {
  double r = std::fmod(a, 2.0 * std::numbers::pi);
  if (r > std::numbers::pi) r -= 2.0 * std::numbers::pi;
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

RoadGeometry RoadGeometry::from_points(std::string id, std::vector<Point2d> pts) {
  if (pts.size() < 2) {
    throw DegenerateRoadError("road '" + id + "': fewer than 2 points");
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!finite(pts[i])) {
      throw NonFiniteError("road '" + id + "': non-finite coordinate at index " +
                           std::to_string(i));
    }
    if (i > 0 && distance(pts[i - 1], pts[i]) <= kMinPointSeparation) {
      throw DegenerateRoadError("road '" + id + "': repeated point at index " +
                                std::to_string(i));
    }
  }
  RoadGeometry g;
  g.id = std::move(id);
  g.cum_arclength = cumulative_arclength(pts);
  g.points = std::move(pts);
  return g;
}

Point2d RoadGeometry::point_at(double s) const {
  if (points.empty()) return {};
  if (s <= 0.0) return points.front();
  if (s >= cum_arclength.back()) return points.back();
  auto it = std::upper_bound(cum_arclength.begin(), cum_arclength.end(), s);
  std::size_t i = static_cast<std::size_t>(it - cum_arclength.begin());
  if (i == 0) return points.front();
  if (i >= points.size()) return points.back();
  double seg = cum_arclength[i] - cum_arclength[i - 1];
  double u = seg > 0.0 ? (s - cum_arclength[i - 1]) / seg : 0.0;
  return points[i - 1] + u * (points[i] - points[i - 1]);
}

RoadGeometry interpolate_road(const ControlPointRoad& road, double spacing_m) {
  if (spacing_m <= 0.0) throw std::invalid_argument("spacing must be positive");
  if (road.control_points.size() < 2) {
    throw DegenerateRoadError("road '" + road.id + "': fewer than 2 usable control points");
  }
  for (std::size_t i = 0; i < road.control_points.size(); ++i) {
    if (!finite(road.control_points[i])) {
      throw NonFiniteError("road '" + road.id + "': non-finite control point");
    }
    if (i > 0 &&
        distance(road.control_points[i - 1], road.control_points[i]) <= kMinPointSeparation) {
      throw DegenerateRoadError("road '" + road.id + "': duplicate consecutive control points");
    }
  }

  // Chord-length parameterization.
  std::vector<double> t = cumulative_arclength(road.control_points);
  std::vector<double> xs(road.control_points.size()), ys(road.control_points.size());
  for (std::size_t i = 0; i < road.control_points.size(); ++i) {
    xs[i] = road.control_points[i].x;
    ys[i] = road.control_points[i].y;
  }
  NaturalSpline sx(t, xs), sy(t, ys);

  // Dense pre-sampling at 10x the target density, then uniform resampling.
  double chord = t.back();
  std::size_t dense_n =
      std::max<std::size_t>(road.control_points.size(),
                            static_cast<std::size_t>(std::ceil(chord / (spacing_m / 10.0)))) +
      1;
  std::vector<Point2d> dense;
  dense.reserve(dense_n);
  for (std::size_t i = 0; i < dense_n; ++i) {
    double ti = chord * static_cast<double>(i) / static_cast<double>(dense_n - 1);
    Point2d p{sx.eval(ti), sy.eval(ti)};
    if (!finite(p)) {
      throw NonFiniteError("road '" + road.id + "': spline evaluation produced non-finite point");
    }
    if (!dense.empty() && distance(dense.back(), p) <= 1e-12) continue;
    dense.push_back(p);
  }
  // Endpoints are knots of the spline; pin them exactly.
  dense.front() = road.control_points.front();
  dense.back() = road.control_points.back();

  RoadGeometry dense_g = RoadGeometry::from_points(road.id, std::move(dense));
  double length = dense_g.total_length();
  auto n_out = static_cast<std::size_t>(std::llround(length / spacing_m)) + 1;
  n_out = std::max<std::size_t>(n_out, 3);
  return resample_uniform(dense_g, n_out);
}

RoadGeometry resample_uniform(const RoadGeometry& g, std::size_t n) {
  if (n < 3) throw std::invalid_argument("resample_uniform requires n >= 3");
  double length = g.total_length();
  if (length < 1e-6 || g.points.size() < 2) {
    throw DegenerateRoadError("road '" + g.id + "': too short to resample");
  }
  std::vector<Point2d> out;
  out.reserve(n);
  out.push_back(g.points.front());
  for (std::size_t k = 1; k + 1 < n; ++k) {
    double s = length * static_cast<double>(k) / static_cast<double>(n - 1);
    out.push_back(g.point_at(s));
  }
  out.push_back(g.points.back());
  return RoadGeometry::from_points(g.id, std::move(out));
}

AngleSequence turning_angles(const RoadGeometry& g) {
  if (g.points.size() < 3) {
    throw DegenerateRoadError("road '" + g.id + "': needs >= 3 points for turning angles");
  }
  AngleSequence seq;
  seq.angles.reserve(g.points.size() - 2);
  double prev = segment_heading(g.points[0], g.points[1]);
  for (std::size_t i = 1; i + 1 < g.points.size(); ++i) {
    if (distance(g.points[i], g.points[i + 1]) <= 1e-12) {
      throw DegenerateRoadError("road '" + g.id + "': repeated point");
    }
    double h = segment_heading(g.points[i], g.points[i + 1]);
    seq.angles.push_back(wrap_angle(h - prev));
    prev = h;
  }
  return seq;
}

CurvatureProfile curvature_profile(const RoadGeometry& g) {
  if (g.points.size() < 3) {
    throw DegenerateRoadError("road '" + g.id + "': needs >= 3 points for curvature");
  }
  CurvatureProfile prof;
  const std::size_t m = g.points.size() - 2;
  prof.kappa.reserve(m);
  prof.s.reserve(m);
  for (std::size_t i = 1; i + 1 < g.points.size(); ++i) {
    Point2d p1 = g.points[i - 1], p2 = g.points[i], p3 = g.points[i + 1];
    double a = distance(p1, p2);
    double b = distance(p2, p3);
    double c = distance(p1, p3);
    if (a <= 1e-12 || b <= 1e-12 || c <= 1e-12) {
      throw DegenerateRoadError("road '" + g.id + "': degenerate point triplet at index " +
                                std::to_string(i));
    }
    // Menger curvature: 4 * signed triangle area / (a b c).
    double kappa = 2.0 * cross(p2 - p1, p3 - p2) / (a * b * c);
    if (!std::isfinite(kappa)) {
      throw NonFiniteError("road '" + g.id + "': non-finite curvature");
    }
    prof.kappa.push_back(kappa);
    prof.s.push_back(g.cum_arclength[i]);
  }
  prof.dkappa_ds.reserve(m > 0 ? m - 1 : 0);
  for (std::size_t i = 0; i + 1 < prof.kappa.size(); ++i) {
    double ds = prof.s[i + 1] - prof.s[i];
    prof.dkappa_ds.push_back((prof.kappa[i + 1] - prof.kappa[i]) / ds);
  }
  return prof;
}

double optimal_rotation_angle(const RoadGeometry& reference, const RoadGeometry& other) {
  if (reference.points.size() != other.points.size()) {
    throw ShapeMismatchError("procrustes: point counts differ (" +
                             std::to_string(reference.points.size()) + " vs " +
                             std::to_string(other.points.size()) + ")");
  }
  Point2d r0 = reference.points.front();
  Point2d q0 = other.points.front();
  double a = 0.0, b = 0.0;
  for (std::size_t i = 1; i < reference.points.size(); ++i) {
    Point2d v = reference.points[i] - r0;
    Point2d u = other.points[i] - q0;
    a += dot(u, v);
    b += cross(u, v);
  }
  if (a == 0.0 && b == 0.0) return 0.0;
  return std::atan2(b, a);
}

RoadGeometry procrustes_align(const RoadGeometry& reference, const RoadGeometry& other) {
  double theta = optimal_rotation_angle(reference, other);
  double c = std::cos(theta), s = std::sin(theta);
  Point2d r0 = reference.points.front();
  Point2d q0 = other.points.front();
  std::vector<Point2d> out;
  out.reserve(other.points.size());
  for (Point2d p : other.points) {
    Point2d u = p - q0;
    out.push_back({r0.x + c * u.x - s * u.y, r0.y + s * u.x + c * u.y});
  }
  return RoadGeometry::from_points(other.id, std::move(out));
}

SegmentSet segment_set(const RoadGeometry& g, int length_buckets, int turn_buckets) {
  if (length_buckets < 1 || turn_buckets < 1) {
    throw std::invalid_argument("bucket counts must be >= 1");
  }
  const std::size_t nseg = g.points.size() - 1;
  double mean_len = g.total_length() / static_cast<double>(nseg);
  double len_width = 2.0 * mean_len / static_cast<double>(length_buckets);
  double turn_width = 2.0 * std::numbers::pi / static_cast<double>(turn_buckets);

  AngleSequence angles = turning_angles(g);
  SegmentSet set;
  for (std::size_t i = 0; i < nseg; ++i) {
    double len = g.cum_arclength[i + 1] - g.cum_arclength[i];
    // Turn entering the next segment; the last segment has no successor.
    double turn = i + 1 < nseg ? angles.angles[i] : 0.0;
    int li = bucket_of(len, len_width, length_buckets);
    int ti = bucket_of(turn + std::numbers::pi, turn_width, turn_buckets);
    set.counts[{li, ti}] += 1;
  }
  return set;
}

std::vector<ComplexityVector> complexity_frames(const RoadGeometry& g, double frame_length_m) {
  if (frame_length_m <= 0.0) throw std::invalid_argument("frame length must be positive");
  double length = g.total_length();
  if (length < frame_length_m / 2.0) {
    throw DegenerateRoadError("road '" + g.id + "': shorter than half a frame");
  }
  std::size_t n_full = static_cast<std::size_t>(std::floor(length / frame_length_m));
  double remainder = length - static_cast<double>(n_full) * frame_length_m;
  std::size_t n_frames;
  if (n_full == 0) {
    n_frames = 1;  // single short frame, guaranteed >= frame/2 above
  } else if (remainder >= frame_length_m / 2.0) {
    n_frames = n_full + 1;
  } else {
    n_frames = n_full;  // trailing sliver merges into the last frame
  }

  CurvatureProfile prof = curvature_profile(g);
  std::vector<ComplexityVector> frames(n_frames);
  std::vector<std::size_t> kappa_counts(n_frames, 0), dk_counts(n_frames, 0);

  auto frame_of = [&](double s) {
    auto f = static_cast<std::size_t>(std::floor(s / frame_length_m));
    return std::min(f, n_frames - 1);
  };

  for (std::size_t i = 0; i < prof.kappa.size(); ++i) {
    std::size_t f = frame_of(prof.s[i]);
    double ak = std::abs(prof.kappa[i]);
    frames[f].mean_abs_kappa += ak;
    frames[f].max_abs_kappa = std::max(frames[f].max_abs_kappa, ak);
    ++kappa_counts[f];
  }
  for (std::size_t i = 0; i < prof.dkappa_ds.size(); ++i) {
    double mid = 0.5 * (prof.s[i] + prof.s[i + 1]);
    std::size_t f = frame_of(mid);
    double ad = std::abs(prof.dkappa_ds[i]);
    frames[f].mean_abs_dkappa += ad;
    frames[f].max_abs_dkappa = std::max(frames[f].max_abs_dkappa, ad);
    ++dk_counts[f];
  }
  for (std::size_t f = 0; f < n_frames; ++f) {
    if (kappa_counts[f] > 0) frames[f].mean_abs_kappa /= static_cast<double>(kappa_counts[f]);
    if (dk_counts[f] > 0) frames[f].mean_abs_dkappa /= static_cast<double>(dk_counts[f]);
  }
  return frames;
}

RoadFeatureVector road_feature_vector(const RoadGeometry& g) {
  CurvatureProfile prof = curvature_profile(g);
  AngleSequence angles = turning_angles(g);

  RoadFeatureVector f;
  f.total_length = g.total_length();

  double max_abs = 0.0, sum_abs = 0.0;
  for (double k : prof.kappa) {
    double a = std::abs(k);
    max_abs = std::max(max_abs, a);
    sum_abs += a;
  }
  f.mean_abs_curvature = sum_abs / static_cast<double>(prof.kappa.size());
  f.max_abs_curvature = max_abs;
  f.min_radius = max_abs > 0.0 ? std::clamp(1.0 / max_abs, 1.0, 1000.0) : 1000.0;

  // Headings relative to the initial heading keep the feature rotation
  // invariant; 36 bins of 10 degrees.
  double h0 = segment_heading(g.points[0], g.points[1]);
  std::set<int> bins;
  for (std::size_t i = 0; i + 1 < g.points.size(); ++i) {
    double rel = wrap_angle(segment_heading(g.points[i], g.points[i + 1]) - h0);
    double deg = rel * 180.0 / std::numbers::pi;
    int bin = static_cast<int>(std::floor(deg / 10.0 + 0.5));
    bins.insert(((bin % 36) + 36) % 36);
  }
  f.direction_coverage = static_cast<int>(bins.size());

  int turns = 0;
  int prev_sign = 0;
  for (double k : prof.kappa) {
    if (std::abs(k) < kTurnKappaThreshold) continue;
    int sign = k > 0.0 ? 1 : -1;
    if (prev_sign != 0 && sign != prev_sign) ++turns;
    prev_sign = sign;
  }
  f.turn_count = turns;

  double mean = 0.0;
  for (double a : angles.angles) mean += a;
  mean /= static_cast<double>(angles.angles.size());
  double var = 0.0;
  for (double a : angles.angles) var += (a - mean) * (a - mean);
  var /= static_cast<double>(angles.angles.size());
  f.std_heading_change = std::sqrt(var);
  return f;
}

std::vector<Point2d> convex_hull(std::vector<Point2d> pts) {
  std::sort(pts.begin(), pts.end(), [](Point2d a, Point2d b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Point2d a, Point2d b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;

  std::vector<Point2d> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower hull
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper hull
    while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);  // last point repeats the first
  return hull;
}

double convex_hull_area(const std::vector<std::vector<Point2d>>& point_sets) {
  std::vector<Point2d> all;
  for (const auto& set : point_sets) all.insert(all.end(), set.begin(), set.end());
  if (all.empty()) throw std::invalid_argument("convex_hull_area: no points");
  std::vector<Point2d> hull = convex_hull(std::move(all));
  if (hull.size() < 3) return 0.0;
  double twice_area = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    Point2d a = hull[i];
    Point2d b = hull[(i + 1) % hull.size()];
    twice_area += a.x * b.y - b.x * a.y;
  }
  return std::abs(twice_area) / 2.0;
}

bool self_intersects(const RoadGeometry& g) {
  const std::size_t nseg = g.points.size() - 1;
  for (std::size_t i = 0; i + 2 < nseg; ++i) {
    for (std::size_t j = i + 2; j < nseg; ++j) {
      if (segments_intersect(g.points[i], g.points[i + 1], g.points[j], g.points[j + 1])) {
        return true;
      }
    }
  }
  return false;
}

RoadGeometry canonical_pose(const RoadGeometry& g) {
  Point2d p0 = g.points.front();
  double h0 = segment_heading(g.points[0], g.points[1]);
  double c = std::cos(-h0), s = std::sin(-h0);
  std::vector<Point2d> out;
  out.reserve(g.points.size());
  for (Point2d p : g.points) {
    Point2d u = p - p0;
    out.push_back({c * u.x - s * u.y, s * u.x + c * u.y});
  }
  return RoadGeometry::from_points(g.id, std::move(out));
}

}  // namespace roaddiv
