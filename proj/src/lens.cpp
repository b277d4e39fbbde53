#include "sphereratio/lens.hpp"

#include <cmath>
#include <vector>

namespace sphereratio {

namespace {

void require_unit_interval(double tau, const char* who) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw DomainError(std::string(who) + ": tau must lie in [0, 1]");
  }
}

}  // namespace

double zeta0(double tau) {
  require_unit_interval(tau, "zeta0");
  const double sp = std::sqrt(1.0 + tau * tau);
  const double sm = std::sqrt(1.0 - tau * tau);
  return (2.0 / sp) * (kPi / 2.0 - std::atan(sm / sp));
}

double zeta1(double tau) {
  require_unit_interval(tau, "zeta1");
  return 2.0 * std::asin(tau) - tau * zeta0(tau);
}

double invert_zeta0(double length) {
  const double lo_val = kPi / 2.0, hi_val = kPi / std::sqrt(2.0);
  if (!(length >= lo_val - 1e-12 && length <= hi_val + 1e-12)) {
    throw DomainError("invert_zeta0: length outside [pi/2, pi/sqrt(2)]");
  }
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    (zeta0(mid) < length ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Complex arc_param(double tau, double t) {
  require_unit_interval(tau, "arc_param");
  if (tau == 0.0) throw DomainError("arc_param: degenerate at tau = 0");
  const double theta = std::asin(tau);
  return std::sin(theta - t) / std::sin(theta) * Complex(std::cos(t), std::sin(t));
}

Complex arc_param_deriv(double tau, double t) {
  require_unit_interval(tau, "arc_param_deriv");
  if (tau == 0.0) throw DomainError("arc_param_deriv: degenerate at tau = 0");
  const double theta = std::asin(tau);
  const Complex e(std::cos(t), std::sin(t));
  return e * Complex(-std::cos(theta - t), std::sin(theta - t)) / std::sin(theta);
}

ParamCurve arc_curve(double tau) {
  require_unit_interval(tau, "arc_curve");
  if (tau == 0.0) throw DomainError("arc_curve: degenerate at tau = 0");
  const double theta = std::asin(tau);
  return ParamCurve::from_chart(
      [tau, theta](double s) { return arc_param(tau, s * theta); },
      [tau, theta](double s) { return arc_param_deriv(tau, s * theta) * theta; });
}

double h(double tau) {
  require_unit_interval(tau, "h");
  const double sp = std::sqrt(1.0 + tau * tau);
  const double sm = std::sqrt(1.0 - tau * tau);
  const double arccot = kPi / 2.0 - std::atan(sm / sp);  // into (0, pi/2]
  return sp * (kPi + std::asin(tau)) / arccot - tau;
}

H0Result find_h0(double tol) {
  if (!(tol > 0.0)) throw DomainError("find_h0: tolerance must be positive");

  // Coarse scan brackets the global maximum; h has a single interior peak,
  // but the scan makes no use of that beyond picking the best sample.
  constexpr int kScan = 10'000;
  int best = 0;
  double best_val = h(0.0);
  for (int i = 1; i <= kScan; ++i) {
    const double val = h(static_cast<double>(i) / kScan);
    if (val > best_val) {
      best_val = val;
      best = i;
    }
  }
  double a = static_cast<double>(best > 0 ? best - 1 : 0) / kScan;
  double b = static_cast<double>(best < kScan ? best + 1 : kScan) / kScan;

  // Golden-section maximization on [a, b].
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = h(c), fd = h(d);
  int iterations = 0;
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = h(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = h(d);
    }
    ++iterations;
  }

  H0Result out;
  out.tau0 = 0.5 * (a + b);
  out.h0 = h(out.tau0);
  out.iterations = iterations;
  out.bracket_width = b - a;
  return out;
}

LensDomain lens_from_length(double l, AnchorPair anchor) {
  if (!(l >= kPi - 1e-12 && l <= std::sqrt(2.0) * kPi + 1e-12)) {
    throw DomainError("lens_from_length: length outside [pi, sqrt(2) pi]");
  }
  LensDomain lens;
  lens.tau = invert_zeta0(std::min(l / 2.0, kPi / std::sqrt(2.0)));
  lens.theta = std::asin(lens.tau);
  lens.half_length = zeta0(lens.tau);
  lens.boundary_length = 2.0 * lens.half_length;
  lens.area = 2.0 * zeta1(lens.tau);
  lens.anchor = anchor;
  return lens;
}

const Rotation& anchor_rotation() {
  // Quarter turn about the axis through +-i; in the chart w -> (1+w)/(1-w).
  static const Rotation rot = Rotation::axis_angle({0.0, 1.0, 0.0}, -kPi / 2.0);
  return rot;
}

ParamCurve lens_boundary(const LensDomain& lens) {
  ParamCurve zero_one;
  if (lens.tau == 0.0) {
    // Degenerate lens: the doubled segment between the anchors.
    zero_one = ParamCurve::concat(
        {ParamCurve::geodesic(GeodesicArc::shortest(ExtPoint(0.0), ExtPoint(1.0))),
         ParamCurve::geodesic(GeodesicArc::shortest(ExtPoint(1.0), ExtPoint(0.0)))});
  } else {
    const double tau = lens.tau, theta = lens.theta;
    // Positively oriented: lower arc 0 -> 1 (conjugate arc, reversed), then
    // upper arc 1 -> 0.
    ParamCurve lower = ParamCurve::from_chart(
        [tau, theta](double s) { return std::conj(arc_param(tau, theta * (1.0 - s))); },
        [tau, theta](double s) {
          return std::conj(arc_param_deriv(tau, theta * (1.0 - s))) * (-theta);
        });
    ParamCurve upper = ParamCurve::from_chart(
        [tau, theta](double s) { return arc_param(tau, theta * s); },
        [tau, theta](double s) { return arc_param_deriv(tau, theta * s) * theta; });
    zero_one = ParamCurve::concat({std::move(lower), std::move(upper)});
  }
  if (lens.anchor == AnchorPair::kZeroOne) return zero_one;
  return rotated(zero_one, anchor_rotation());
}

}  // namespace sphereratio
