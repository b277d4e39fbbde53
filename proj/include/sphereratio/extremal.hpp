#pragma once

#include "sphereratio/lens.hpp"
#include "sphereratio/polycurve.hpp"
#include "sphereratio/quadrature.hpp"

namespace sphereratio {

/// The m-fold extremal family built from the optimal lens: the boundary runs
/// 0 -> 1 along the real segment, m times around the {1, inf} lens, and back
/// 1 -> 0, folding over the segment. Area and boundary length have closed
/// forms m (4 pi + a0) and pi + m l0; the isoperimetric ratio area/length
/// increases strictly in m with limit h0 = (4 pi + a0) / l0.
struct ExtremalFamily {
  int m = 1;
  double tau0 = 0.0;    // optimal lens parameter
  double theta0 = 0.0;  // asin(tau0)
  double l0 = 0.0;      // boundary length of one lens, 2 zeta0(tau0)
  double a0 = 0.0;      // area of one lens, 2 zeta1(tau0)
  double h0 = 0.0;      // sharp constant h(tau0)

  double area() const;    // m (4 pi + a0)
  double length() const;  // pi + m l0
  double ratio() const;   // area() / length()
  /// h0 - ratio(), evaluated in extended precision (the terms agree to
  /// order 1/m).
  double deficit() const;

  /// The boundary as a closed parametrized curve on the sphere.
  ParamCurve boundary() const;
  /// Normalized polygonal approximation of the boundary. The fold vertex at 0
  /// survives normalization because 0 is an omitted point.
  GeodesicPolygon boundary_polygon(double max_chord_angle = 1e-3) const;
};

/// Throws DomainError for m < 1.
ExtremalFamily extremal_family(int m);

/// Smallest m whose ratio exceeds the threshold. Throws DomainError when the
/// threshold is not below the limit h0.
int first_m_with_ratio_above(double threshold);

/// Location and value of the maximum of h, computed once at tolerance 1e-12.
const H0Result& sharp_constant();

}  // namespace sphereratio
