#include "sphereratio/isoperimetric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sphereratio/lens.hpp"
#include "sphereratio/quadrature.hpp"
#include "sphereratio/rng.hpp"
#include "sphereratio/sphere.hpp"

namespace sphereratio {

BernsteinCheck bernstein_holds(double area, double length) {
  if (!(area >= 0.0 && area <= 4.0 * kPi)) {
    throw DomainError("bernstein_holds: area must lie in [0, 4 pi]");
  }
  if (!(length >= 0.0)) {
    throw DomainError("bernstein_holds: length must be nonnegative");
  }
  BernsteinCheck out;
  out.area = area;
  out.length = length;
  out.slack = length * length - 4.0 * kPi * area + area * area;
  // Exact-equality data (spherical caps) can round to a slack of a few ulp
  // below zero; allow that much before declaring a violation.
  out.holds = out.slack >= -1e-12 * std::max(1.0, length * length);
  return out;
}

double cap_area_bound(double length) {
  if (!(length >= 0.0 && length <= 2.0 * kPi)) {
    throw DomainError("cap_area_bound: length must lie in [0, 2 pi]");
  }
  const double x = length / (2.0 * kPi);
  return 2.0 * kPi * (1.0 - std::sqrt(std::max(0.0, 1.0 - x * x)));
}

double superadditivity_gap(const std::vector<double>& lengths) {
  double total = 0.0;
  for (double l : lengths) {
    if (!(l >= 0.0)) {
      throw DomainError("superadditivity_gap: lengths must be nonnegative");
    }
    total += l;
  }
  if (!(total < 2.0 * kPi)) {
    throw DomainError("superadditivity_gap: total length must stay below 2 pi");
  }
  if (lengths.size() <= 1) return 0.0;
  double parts = 0.0;
  for (double l : lengths) parts += cap_area_bound(l);
  return cap_area_bound(total) - parts;
}

namespace {

struct Ball {
  Vec3 center{0.0, 0.0, 0.0};
  double radius2 = -1.0;  // negative: no ball yet
};

bool contains(const Ball& b, const Vec3& p) {
  if (b.radius2 < 0.0) return false;
  return (p - b.center).norm2() <= b.radius2 + 1e-12;
}

Ball ball_of_two(const Vec3& a, const Vec3& b) {
  Ball out;
  out.center = (a + b) * 0.5;
  out.radius2 = (a - out.center).norm2();
  return out;
}

// Circumscribed ball of three points (center in their plane); falls back to
// the widest two-point ball when the points are nearly collinear.
Ball ball_of_three(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 B = b - a, C = c - a;
  const Vec3 N = cross(B, C);
  const double denom = 2.0 * N.norm2();
  if (denom < 1e-18) {
    Ball best = ball_of_two(a, b);
    for (const Ball& cand : {ball_of_two(a, c), ball_of_two(b, c)}) {
      if (cand.radius2 > best.radius2) best = cand;
    }
    return best;
  }
  const Vec3 rel =
      (cross(N, B) * C.norm2() + cross(C, N) * B.norm2()) * (1.0 / denom);
  Ball out;
  out.center = a + rel;
  out.radius2 = rel.norm2();
  return out;
}

// Circumscribed ball of four points; falls back to the best triple when they
// are nearly coplanar.
Ball ball_of_four(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const Vec3 B = b - a, C = c - a, D = d - a;
  const double det = dot(B, cross(C, D));
  if (std::abs(det) < 1e-12) {
    Ball best;
    const Vec3 pts[4] = {a, b, c, d};
    for (int skip = 0; skip < 4; ++skip) {
      Vec3 tri[3];
      int k = 0;
      for (int i = 0; i < 4; ++i) {
        if (i != skip) tri[k++] = pts[i];
      }
      Ball cand = ball_of_three(tri[0], tri[1], tri[2]);
      if (contains(cand, pts[skip]) &&
          (best.radius2 < 0.0 || cand.radius2 < best.radius2)) {
        best = cand;
      }
    }
    if (best.radius2 >= 0.0) return best;
    Ball widest = ball_of_three(a, b, c);
    for (const Ball& cand : {ball_of_three(a, b, d), ball_of_three(a, c, d),
                             ball_of_three(b, c, d)}) {
      if (cand.radius2 > widest.radius2) widest = cand;
    }
    return widest;
  }
  // Solve (x - a) . B = |B|^2 / 2 etc. by Cramer's rule.
  const double rb = 0.5 * B.norm2(), rc = 0.5 * C.norm2(), rd = 0.5 * D.norm2();
  const Vec3 rel = (cross(C, D) * rb + cross(D, B) * rc + cross(B, C) * rd) *
                   (1.0 / det);
  Ball out;
  out.center = a + rel;
  out.radius2 = rel.norm2();
  return out;
}

// Welzl's move-to-front algorithm, written out by support size so recursion
// depth never exceeds the support bound of four.
Ball min_ball_3(const std::vector<Vec3>& pts, std::size_t n, const Vec3& q1,
                const Vec3& q2, const Vec3& q3) {
  Ball ball = ball_of_three(q1, q2, q3);
  for (std::size_t i = 0; i < n; ++i) {
    if (!contains(ball, pts[i])) ball = ball_of_four(q1, q2, q3, pts[i]);
  }
  return ball;
}

Ball min_ball_2(const std::vector<Vec3>& pts, std::size_t n, const Vec3& q1,
                const Vec3& q2) {
  Ball ball = ball_of_two(q1, q2);
  for (std::size_t i = 0; i < n; ++i) {
    if (!contains(ball, pts[i])) ball = min_ball_3(pts, i, q1, q2, pts[i]);
  }
  return ball;
}

Ball min_ball_1(const std::vector<Vec3>& pts, std::size_t n, const Vec3& q1) {
  Ball ball{q1, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    if (!contains(ball, pts[i])) ball = min_ball_2(pts, i, q1, pts[i]);
  }
  return ball;
}

Ball min_ball(const std::vector<Vec3>& pts) {
  Ball ball{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!contains(ball, pts[i])) ball = min_ball_1(pts, i, pts[i]);
  }
  return ball;
}

}  // namespace

EnclosingCap smallest_enclosing_cap(const std::vector<Vec3>& points,
                                    std::uint64_t seed) {
  if (points.empty()) {
    throw DegenerateInput("smallest_enclosing_cap: no points given");
  }
  std::vector<Vec3> pts;
  pts.reserve(points.size());
  for (const Vec3& p : points) pts.push_back(p.normalized());

  Rng rng(seed);
  for (std::size_t i = pts.size(); i > 1; --i) {
    std::swap(pts[i - 1], pts[rng.index(i)]);
  }

  const Ball ball = min_ball(pts);
  Vec3 center = ball.center;
  if (center.norm() < 1e-12) {
    // The ball is centered at the origin (e.g. an antipodal pair): any unit
    // vector equidistant from the support works; pick one deterministically.
    center = cross(pts[0], pts[1 % pts.size()]);
    if (center.norm() < 1e-12) center = Vec3{0.0, 0.0, 1.0};
  }
  center = center.normalized();

  EnclosingCap cap;
  cap.center = center;
  cap.radius = 0.0;
  for (const Vec3& p : pts) {
    cap.radius = std::max(cap.radius, angle_between(center, p));
  }
  cap.margin = kPi / 2.0 - cap.radius;
  return cap;
}

namespace {

QuadratureOptions tight_opt() {
  QuadratureOptions opt;
  opt.tol = 1e-12;
  return opt;
}

double arc_modulus(double theta, double t) {
  return std::sin(theta - t) / std::sin(theta);
}

}  // namespace

double generalized_arc_length(double theta) {
  if (!(theta > 0.0 && theta < kPi)) {
    throw DomainError("generalized_arc_length: theta must lie in (0, pi)");
  }
  const double s = std::sin(theta);
  return integrate(
             [theta, s](double t) {
               const double m = std::sin(theta - t);
               return 2.0 * s / (s * s + m * m);
             },
             0.0, theta, {}, tight_opt())
      .value;
}

double generalized_arc_area(double theta) {
  if (!(theta > 0.0 && theta < kPi)) {
    throw DomainError("generalized_arc_area: theta must lie in (0, pi)");
  }
  return integrate(
             [theta](double t) {
               const double m = arc_modulus(theta, t);
               const double m2 = m * m;
               return 2.0 * m2 / (1.0 + m2);
             },
             0.0, theta, {}, tight_opt())
      .value;
}

namespace {

// The arc-length integrand 2 s / (s^2 + sin^2(theta - t)), s = sin(theta),
// has the elementary antiderivative (2 / sqrt(1 + s^2)) *
// atan(sqrt(1 + s^2) tan(x) / s), so the length is available in closed form
// (adding pi inside the bracket once x passes pi/2). Near theta = pi the
// integrand is a spike of width sin(theta); the closed form keeps the
// bisection below exact and cheap where quadrature would struggle.
double arc_length_closed_form(double theta) {
  const double s = std::sin(theta);
  const double r = std::sqrt(1.0 + s * s);
  if (theta == kPi / 2.0) return kPi / std::sqrt(2.0);
  const double base = std::atan(r * std::tan(theta) / s);
  return (2.0 / r) * (theta > kPi / 2.0 ? base + kPi : base);
}

// Solve generalized_arc_length(theta) == target by bisection on the closed
// form; the length is strictly increasing in theta, from pi/2 to 3 pi/2.
double solve_arc_theta(double target) {
  double lo = 1e-12, hi = kPi - 1e-12;
  if (!(target > arc_length_closed_form(lo) &&
        target < arc_length_closed_form(hi))) {
    throw DomainError("lens_is_extremal_check: arc length not realizable");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (arc_length_closed_form(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

SplitLensCheck lens_is_extremal_check(double l, double l1, double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("lens_is_extremal_check: tolerance must be positive");
  }
  if (!(l >= kPi - 1e-12 && l <= std::sqrt(2.0) * kPi + 1e-12)) {
    throw DomainError(
        "lens_is_extremal_check: total length outside [pi, sqrt(2) pi]");
  }
  const double l2 = l - l1;
  if (!(l1 > kPi / 2.0 && l1 < 1.5 * kPi && l2 > kPi / 2.0 && l2 < 1.5 * kPi)) {
    throw DomainError(
        "lens_is_extremal_check: both arc lengths must lie in (pi/2, 3 pi/2)");
  }

  SplitLensCheck out;
  out.total_length = l;
  out.length1 = l1;
  out.length2 = l2;
  out.theta1 = solve_arc_theta(l1);
  out.theta2 = solve_arc_theta(l2);
  out.split_area =
      generalized_arc_area(out.theta1) + generalized_arc_area(out.theta2);

  const double tau = invert_zeta0(std::clamp(l / 2.0, kPi / 2.0, kPi / std::sqrt(2.0)));
  out.symmetric_area = 2.0 * zeta1(tau);
  out.gap = out.symmetric_area - out.split_area;
  out.holds = out.gap >= -tol;
  return out;
}

}  // namespace sphereratio
