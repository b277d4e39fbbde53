#pragma once

#include <array>
#include <complex>
#include <utility>

#include "sphereratio/errors.hpp"
#include "sphereratio/rng.hpp"
#include "sphereratio/vec3.hpp"

namespace sphereratio {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Coincidence tolerance for points on the sphere (chordal metric in R^3).
inline constexpr double kChordalTol = 1e-12;

/// Point of the extended plane C u {inf}. Infinity is an explicit state and
/// never an IEEE infinity inside complex arithmetic.
class ExtPoint {
 public:
  ExtPoint() = default;
  ExtPoint(Complex z) : z_(z) {}          // NOLINT: implicit by design
  ExtPoint(double x) : z_(x, 0.0) {}      // NOLINT: implicit by design
  static ExtPoint infinity() {
    ExtPoint p;
    p.inf_ = true;
    return p;
  }

  bool is_inf() const { return inf_; }

  /// Finite chart value; throws DomainError at infinity.
  Complex value() const {
    if (inf_) throw DomainError("ExtPoint: no finite chart value at infinity");
    return z_;
  }

  /// Position on the unit sphere under stereographic projection with
  /// 0 -> (0,0,-1) and inf -> (0,0,1).
  Vec3 embedding() const;

 private:
  Complex z_{0.0, 0.0};
  bool inf_ = false;
};

/// Stereographic projection onto the unit sphere: 0 -> south pole (0,0,-1),
/// inf -> north pole (0,0,1), 1 -> (1,0,0). Pulls the round metric back to
/// ds = 2|dz| / (1+|z|^2) on the chart.
Vec3 stereo_project(const ExtPoint& p);

/// Inverse projection. The input is normalized onto the sphere first; the
/// round trip stays within kChordalTol in the chordal metric.
ExtPoint stereo_invert(const Vec3& x);

/// Euclidean distance of the spherical embeddings (chordal metric, range [0,2]).
double chordal(const ExtPoint& a, const ExtPoint& b);

/// Great-circle distance on the unit sphere, range [0, pi].
double spherical_distance(const ExtPoint& a, const ExtPoint& b);

/// The omitted triple E = {0, 1, inf}; pairwise spherical distances are
/// {pi/2, pi/2, pi}.
const std::array<ExtPoint, 3>& omitted_points();

/// Oriented arc of a great circle: start point, rotation axis (unit normal of
/// the circle plane, oriented by travel direction), and arc angle in (0, 2pi].
/// The full-circle case angle = 2pi (start == end) is legal and arises from
/// normalizing all-straight closed curves.
class GeodesicArc {
 public:
  /// start must be unit length and perpendicular to axis (within 1e-9).
  GeodesicArc(const Vec3& start, const Vec3& axis, double angle);

  /// Shorter great-circle arc between two points. Throws AntipodalPair when
  /// the endpoints are within 1e-12 (chordal) of antipodal.
  static GeodesicArc shortest(const ExtPoint& a, const ExtPoint& b);
  static GeodesicArc shortest(const Vec3& a, const Vec3& b);

  /// Arc from a to b travelling about the given oriented axis; the arc angle
  /// is the unique rotation in (0, 2pi] about axis taking a to b. Both
  /// endpoints must lie on the circle plane (within 1e-9).
  static GeodesicArc through(const Vec3& a, const Vec3& b, const Vec3& axis);

  /// Point at normalized parameter s in [0, 1].
  Vec3 point_at(double s) const;
  /// d(point)/ds; |velocity| == length() everywhere.
  Vec3 velocity_at(double s) const;

  /// Arc length == subtended angle on the unit sphere.
  double length() const { return angle_; }
  const Vec3& start() const { return start_; }
  Vec3 end() const { return point_at(1.0); }
  const Vec3& axis() const { return axis_; }

 private:
  Vec3 start_;
  Vec3 axis_;
  double angle_;
};

/// Circle on the sphere: spherical center and angular radius in (0, pi).
struct SphericalCircle {
  Vec3 center;
  double radius = 0.0;

  double length() const { return 2.0 * kPi * std::sin(radius); }
  double area() const { return 2.0 * kPi * (1.0 - std::cos(radius)); }
};

/// Proper rotation of the sphere, stored as a unit quaternion.
class Rotation {
 public:
  Rotation() = default;  // identity

  static Rotation axis_angle(const Vec3& axis, double angle);
  /// Haar-uniform random rotation from the deterministic generator.
  static Rotation random(Rng& rng);

  Vec3 apply(const Vec3& v) const;
  ExtPoint apply(const ExtPoint& p) const;

  /// Composition: (a.then(b)).apply(v) == b.apply(a.apply(v)).
  Rotation then(const Rotation& next) const;
  Rotation inverse() const;

  /// Chart action as the Moebius transformation
  ///   w -> (a w + b) / (-conj(b) w + conj(a)),   |a|^2 + |b|^2 = 1.
  /// Agrees with apply() through the stereographic projection.
  std::pair<Complex, Complex> mobius() const;

  /// Chart-level application with explicit infinity handling.
  ExtPoint apply_chart(const ExtPoint& p) const;

 private:
  Rotation(double w, double x, double y, double z) : w_(w), x_(x), y_(y), z_(z) {}
  // unit quaternion, identity by default
  double w_ = 1.0, x_ = 0.0, y_ = 0.0, z_ = 0.0;
};

}  // namespace sphereratio
