#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sphereratio/sphere.hpp"

namespace sphereratio {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;           // accumulated error estimate, <= requested tol
  std::int64_t evaluations = 0;
};

struct QuadratureOptions {
  double tol = 1e-8;
  std::int64_t budget = 10'000'000;  // max integrand evaluations
};

/// Spherical line element scale rho(z) = 2 / (1 + |z|^2).
double spherical_scale(const Complex& z);

/// rho(f) |f'| evaluated in the chart where it is numerically stable:
/// directly for |f| <= 1, through the reciprocal chart g = 1/f otherwise.
/// Both charts agree to ~1e-15 relative on the overlap |f| ~ 1.
double spherical_speed(const Complex& value, const Complex& derivative);

/// Piecewise-smooth curve on the sphere, parameter t in [0, 1].
struct ParamCurve {
  std::function<Vec3(double)> point;
  std::function<Vec3(double)> velocity;  // d(point)/dt, finite off breakpoints
  std::vector<double> breakpoints;       // interior t where smoothness may fail

  /// Curve given in the chart as t -> z(t) with derivative dz(t); the
  /// velocity is the pushforward under the stereographic projection.
  static ParamCurve from_chart(std::function<Complex(double)> z,
                               std::function<Complex(double)> dz,
                               std::vector<double> breakpoints = {});
  static ParamCurve geodesic(const GeodesicArc& arc);
  static ParamCurve circle(const SphericalCircle& c);
  /// Joins pieces end to end on equal parameter shares of [0, 1].
  static ParamCurve concat(std::vector<ParamCurve> pieces);
};

/// Rigid rotation of a curve (exact: embedding point and velocity rotated).
ParamCurve rotated(const ParamCurve& curve, const Rotation& rot);

/// Analytic map of the closed unit disk into the sphere. Values must stay
/// finite on the closed disk (maps with poles in the disk are out of scope);
/// maps without an explicit derivative must evaluate in a small neighborhood
/// of the closed disk so finite differences can reach outside it.
struct AnalyticMap {
  std::function<Complex(Complex)> value;
  std::function<Complex(Complex)> derivative;  // empty -> finite differences
  std::string label;
  std::vector<double> boundary_breakpoints;  // angles in [0, 2pi) where f' may be rough

  /// derivative(z), or the 4th-order central difference with step
  /// 1e-5 * (|z| + 1) when no derivative was supplied.
  Complex deriv(const Complex& z) const;

  static AnalyticMap polynomial(std::vector<Complex> coeffs,
                                std::string label = "polynomial");
  /// Post-composition with a rotation of the target sphere. Only valid while
  /// the rotated map stays finite on the closed disk.
  AnalyticMap rotated(const Rotation& rot, std::string new_label = "") const;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration over [a, b], split at the
/// given interior breakpoints. Deterministic refinement order. Coincident
/// endpoints integrate to zero and reversed endpoints negate the value.
/// Throws ToleranceNotMet when the budget is exhausted or the tolerance is
/// unreachable at machine-width intervals.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const std::vector<double>& breakpoints = {},
                           const QuadratureOptions& opt = {});

/// Adaptive tensor rule on [ax, bx] x [ay, by] with the same guarantees.
QuadratureResult integrate2d(const std::function<double(double, double)>& f,
                             double ax, double bx, double ay, double by,
                             const QuadratureOptions& opt = {});

/// Spherical length of a curve: integral of |velocity|.
QuadratureResult curve_length(const ParamCurve& c, const QuadratureOptions& opt = {});

/// Spherical length of the boundary image: integral over the unit circle of
/// rho(f) |f'| |dz|.
QuadratureResult map_boundary_length(const AnalyticMap& f,
                                     const QuadratureOptions& opt = {});

/// Spherical area with multiplicity: integral over the disk of (rho(f) |f'|)^2.
QuadratureResult map_area(const AnalyticMap& f, const QuadratureOptions& opt = {});

/// Same integral restricted to the annulus r0 <= |z| <= r1.
QuadratureResult map_area_annulus(const AnalyticMap& f, double r0, double r1,
                                  const QuadratureOptions& opt = {});

}  // namespace sphereratio
