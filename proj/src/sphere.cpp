#include "sphereratio/sphere.hpp"

#include <cmath>

namespace sphereratio {

namespace {

bool finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

Vec3 ExtPoint::embedding() const { return stereo_project(*this); }

Vec3 stereo_project(const ExtPoint& p) {
  if (p.is_inf()) return {0.0, 0.0, 1.0};
  const Complex z = p.value();
  const double x = z.real(), y = z.imag();
  const double n2 = x * x + y * y;
  if (!std::isfinite(n2) || n2 > 1e300) {
    // Beyond this modulus the point is chordally closer than 1e-12 to the
    // pole; collapse to it rather than risk overflow in the quotients.
    return {0.0, 0.0, 1.0};
  }
  const double u = 1.0 + n2;
  return {2.0 * x / u, 2.0 * y / u, (n2 - 1.0) / u};
}

ExtPoint stereo_invert(const Vec3& raw) {
  const double n = raw.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("stereo_invert: zero or non-finite input");
  }
  const Vec3 x = raw * (1.0 / n);
  // Two algebraically equal forms of the inverse; pick the one without
  // cancellation so the round trip stays within the chordal tolerance even
  // for points with huge or tiny chart modulus:
  //   z = (x1 + i x2) / (1 - x3)  ==  (1 + x3) / (x1 - i x2).
  if (x.z <= 0.0) {
    const Complex z(x.x / (1.0 - x.z), x.y / (1.0 - x.z));
    return ExtPoint(z);
  }
  const Complex denom(x.x, -x.y);
  if (std::abs(denom) == 0.0) return ExtPoint::infinity();
  const Complex z = (1.0 + x.z) / denom;
  if (!finite(z)) return ExtPoint::infinity();
  return ExtPoint(z);
}

double chordal(const ExtPoint& a, const ExtPoint& b) {
  return (stereo_project(a) - stereo_project(b)).norm();
}

double spherical_distance(const ExtPoint& a, const ExtPoint& b) {
  return angle_between(stereo_project(a), stereo_project(b));
}

const std::array<ExtPoint, 3>& omitted_points() {
  static const std::array<ExtPoint, 3> pts = {
      ExtPoint(Complex(0.0, 0.0)), ExtPoint(Complex(1.0, 0.0)), ExtPoint::infinity()};
  return pts;
}

// ---- GeodesicArc ----

GeodesicArc::GeodesicArc(const Vec3& start, const Vec3& axis, double angle)
    : start_(start.normalized()), axis_(axis.normalized()), angle_(angle) {
  if (!(angle > 0.0) || angle > 2.0 * kPi + 1e-9) {
    throw DomainError("GeodesicArc: angle must lie in (0, 2pi]");
  }
  if (std::abs(dot(start_, axis_)) > 1e-9) {
    throw DomainError("GeodesicArc: start point not on the circle plane");
  }
  // Re-orthogonalize so point_at stays on the sphere to machine precision.
  start_ = (start_ - axis_ * dot(start_, axis_)).normalized();
}

GeodesicArc GeodesicArc::shortest(const Vec3& a, const Vec3& b) {
  const Vec3 u = a.normalized(), v = b.normalized();
  if ((u + v).norm() < 1e-12 || 2.0 - (u - v).norm() < 1e-12) {
    throw AntipodalPair("shortest: endpoints are (nearly) antipodal");
  }
  const Vec3 n = cross(u, v);
  if (n.norm() == 0.0) {
    throw DegenerateInput("shortest: coincident endpoints");
  }
  return GeodesicArc(u, n.normalized(), angle_between(u, v));
}

GeodesicArc GeodesicArc::shortest(const ExtPoint& a, const ExtPoint& b) {
  return shortest(stereo_project(a), stereo_project(b));
}

GeodesicArc GeodesicArc::through(const Vec3& a, const Vec3& b, const Vec3& axis) {
  const Vec3 u = a.normalized(), v = b.normalized(), n = axis.normalized();
  if (std::abs(dot(u, n)) > 1e-9 || std::abs(dot(v, n)) > 1e-9) {
    throw DomainError("through: endpoint off the circle plane");
  }
  double phi = std::atan2(dot(cross(u, v), n), dot(u, v));
  if ((u - v).norm() < 1e-12) {
    phi = 2.0 * kPi;  // closed edge: one full turn
  } else if (phi <= 0.0) {
    phi += 2.0 * kPi;
  }
  return GeodesicArc(u, n, phi);
}

Vec3 GeodesicArc::point_at(double s) const {
  const double t = s * angle_;
  const Vec3 w = cross(axis_, start_);
  return start_ * std::cos(t) + w * std::sin(t);
}

Vec3 GeodesicArc::velocity_at(double s) const {
  return cross(axis_, point_at(s)) * angle_;
}

// ---- Rotation ----

Rotation Rotation::axis_angle(const Vec3& axis, double angle) {
  const Vec3 u = axis.normalized();
  const double c = std::cos(0.5 * angle), s = std::sin(0.5 * angle);
  return Rotation(c, s * u.x, s * u.y, s * u.z);
}

Rotation Rotation::random(Rng& rng) {
  // Four independent gaussians (Box-Muller on the deterministic stream),
  // normalized: Haar-uniform on SO(3).
  double g[4];
  for (int i = 0; i < 4; i += 2) {
    double u1 = rng.uniform();
    while (u1 <= 0.0) u1 = rng.uniform();
    const double u2 = rng.uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    g[i] = r * std::cos(2.0 * kPi * u2);
    g[i + 1] = r * std::sin(2.0 * kPi * u2);
  }
  const double n = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3]);
  return Rotation(g[0] / n, g[1] / n, g[2] / n, g[3] / n);
}

Vec3 Rotation::apply(const Vec3& v) const {
  // v' = v + 2 q_vec x (q_vec x v + w v)
  const Vec3 q{x_, y_, z_};
  const Vec3 t = cross(q, v) * 2.0;
  return v + t * w_ + cross(q, t);
}

ExtPoint Rotation::apply(const ExtPoint& p) const {
  return stereo_invert(apply(stereo_project(p)));
}

Rotation Rotation::then(const Rotation& next) const {
  // Quaternion product next * this (apply this first).
  const Rotation& a = next;
  const Rotation& b = *this;
  return Rotation(a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
                  a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
                  a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
                  a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_);
}

Rotation Rotation::inverse() const { return Rotation(w_, -x_, -y_, -z_); }

std::pair<Complex, Complex> Rotation::mobius() const {
  // Verified against apply() through the projection: the generators are
  //   about x3 by phi: a = e^{i phi/2}, b = 0   (chart w -> e^{i phi} w)
  //   about x1 by phi: a = cos(phi/2), b = i sin(phi/2)
  //   about x2 by phi: a = cos(phi/2), b = -sin(phi/2).
  return {Complex(w_, z_), Complex(-y_, x_)};
}

ExtPoint Rotation::apply_chart(const ExtPoint& p) const {
  const auto [a, b] = mobius();
  const Complex c = -std::conj(b), d = std::conj(a);
  if (p.is_inf()) {
    // limit of (a w + b)/(c w + d) as w -> inf
    if (std::abs(c) == 0.0) return ExtPoint::infinity();
    return ExtPoint(a / c);
  }
  const Complex w = p.value();
  const Complex den = c * w + d;
  if (std::abs(den) == 0.0) return ExtPoint::infinity();
  const Complex out = (a * w + b) / den;
  if (!finite(out)) return ExtPoint::infinity();
  return ExtPoint(out);
}

}  // namespace sphereratio
