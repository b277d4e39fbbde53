#pragma once

#include "sphereratio/quadrature.hpp"

namespace sphereratio {

/// Spherical length of one boundary arc of the symmetric lens with parameter
/// tau in [0, 1]:
///   zeta0(tau) = (2 / sqrt(1+tau^2)) (pi/2 - atan(sqrt(1-tau^2)/sqrt(1+tau^2))).
/// Increasing, with zeta0(0) = pi/2 and zeta0(1) = pi/sqrt(2).
double zeta0(double tau);

/// Spherical area between one lens arc and the chart segment [0, 1]:
///   zeta1(tau) = 2 asin(tau) - tau zeta0(tau).
double zeta1(double tau);

/// Inverse of zeta0 on [pi/2, pi/sqrt(2)] by monotone bisection.
double invert_zeta0(double length);

/// Chart parametrization of the lens arc from 1 to 0 through the upper half
/// plane: alpha(t) = (sin(theta - t) / sin(theta)) e^{i t}, t in [0, theta],
/// theta = asin(tau). Requires tau in (0, 1].
Complex arc_param(double tau, double t);
Complex arc_param_deriv(double tau, double t);

/// The same arc as a [0, 1]-parametrized spherical curve.
ParamCurve arc_curve(double tau);

/// Ratio functional whose maximum over [0, 1] is the sharp constant:
///   h(tau) = sqrt(1+tau^2) (pi + asin(tau)) / arccot(sqrt(1-tau^2)/sqrt(1+tau^2)) - tau
/// with arccot into (0, pi). Satisfies h(tau) zeta0(tau) = 2 pi + zeta1(tau),
/// h(0) = 4, h(1) = 3 sqrt(2) - 1.
double h(double tau);

struct H0Result {
  double tau0 = 0.0;          // argmax of h on [0, 1]
  double h0 = 0.0;            // h(tau0), in (4, 4.6)
  int iterations = 0;         // golden-section steps after the coarse scan
  double bracket_width = 0.0; // final bracket width, <= requested tol
};

/// Sharp constant: coarse 10^4-point scan to bracket the global maximum of h,
/// then golden-section until the bracket is narrower than tol.
H0Result find_h0(double tol = 1e-10);

/// Which pair of the omitted triple a lens spans.
enum class AnchorPair { kZeroOne, kOneInf };

/// Symmetric lens domain: two congruent circular arcs between two points of
/// {0, 1, inf} at spherical distance pi/2, symmetric about their axis.
struct LensDomain {
  double tau = 0.0;              // arc parameter
  double theta = 0.0;            // asin(tau), half opening angle
  double boundary_length = 0.0;  // full boundary length = 2 zeta0(tau)
  double half_length = 0.0;      // one arc, = zeta0(tau)
  double area = 0.0;             // enclosed area = 2 zeta1(tau)
  AnchorPair anchor = AnchorPair::kOneInf;
};

/// Lens with prescribed full boundary length l in [pi, sqrt(2) pi].
/// Identity: (4 pi + area) / l == h(tau) to 1e-10.
LensDomain lens_from_length(double l, AnchorPair anchor = AnchorPair::kOneInf);

/// Positively oriented boundary of the lens (starts and ends at the anchor
/// point 0 resp. 1). The degenerate case tau = 0 yields the doubled segment.
ParamCurve lens_boundary(const LensDomain& lens);

/// The rotation taking 0 -> 1 and 1 -> inf (quarter turn of the real great
/// circle about the axis through +-i); re-anchors {0,1} lenses to {1,inf}.
const Rotation& anchor_rotation();

}  // namespace sphereratio
