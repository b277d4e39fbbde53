#pragma once

#include <cstdint>
#include <vector>

#include "sphereratio/errors.hpp"
#include "sphereratio/vec3.hpp"

namespace sphereratio {

// Discrete form of the spherical isoperimetric inequality
//   L^2 >= A (4 pi - A)
// for a closed curve of length L enclosing area A.  `slack` is
// L^2 - 4 pi A + A^2; the inequality holds iff slack is nonnegative up to a
// relative rounding allowance of 1e-12 (caps make the slack exactly zero).
struct BernsteinCheck {
  double area = 0.0;
  double length = 0.0;
  double slack = 0.0;
  bool holds = false;
};
BernsteinCheck bernstein_holds(double area, double length);

// Largest area a closed curve of length L < 2 pi can enclose on the side it
// certifiably bounds: the area of the spherical cap with perimeter L,
//   2 pi (1 - sqrt(1 - (L / 2 pi)^2)).
// Throws DomainError for L < 0 or L > 2 pi.
double cap_area_bound(double length);

// cap_area_bound is superadditive: splitting a total length budget across
// several curves can only lose enclosed area.  Returns
//   cap_area_bound(sum) - sum_i cap_area_bound(l_i)  (>= 0).
// Throws DomainError on negative entries or if the sum reaches 2 pi.
double superadditivity_gap(const std::vector<double>& lengths);

// Smallest spherical cap containing a finite set of unit vectors, computed via
// the minimal enclosing Euclidean ball of the points (exact for cap radius
// <= pi/2, which is the only regime where the margin below is positive).
// `radius` is the honest angular radius max_p angle(center, p); `margin` is
// pi/2 - radius, positive iff the points fit strictly inside a hemisphere.
struct EnclosingCap {
  Vec3 center{0.0, 0.0, 1.0};
  double radius = 0.0;
  double margin = 0.0;
};
EnclosingCap smallest_enclosing_cap(const std::vector<Vec3>& points,
                                    std::uint64_t seed = 0);

// One-parameter family of circular arcs joining 0 and 1 in the chart:
//   alpha_theta(t) = (sin(theta - t) / sin(theta)) e^{it},  t in [0, theta],
// theta in (0, pi).  Spherical length and the area of the region enclosed
// between the arc and the segment [0, 1].  Length increases monotonically
// from pi/2 (theta -> 0) to 3 pi/2 (theta -> pi).
double generalized_arc_length(double theta);
double generalized_arc_area(double theta);

// Among all two-arc domains with endpoints {0, 1} and total boundary length
// l = l1 + l2, the symmetric lens (l1 = l2 = l/2) encloses the most area.
// `gap` is symmetric_area - split_area; the check holds iff gap >= -tol.
// Throws DomainError unless l is in [pi, sqrt(2) pi] and both arc lengths are
// realizable, i.e. lie in (pi/2, 3 pi/2).
struct SplitLensCheck {
  double total_length = 0.0;
  double length1 = 0.0;
  double length2 = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double symmetric_area = 0.0;
  double split_area = 0.0;
  double gap = 0.0;
  bool holds = false;
};
SplitLensCheck lens_is_extremal_check(double l, double l1, double tol = 1e-6);

}  // namespace sphereratio
