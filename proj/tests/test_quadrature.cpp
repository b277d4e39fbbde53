#include <cmath>
#include <complex>

#include "doctest.h"
#include "sphereratio/quadrature.hpp"

using namespace sphereratio;

namespace {
bool close(double a, double b, double tol) { return std::abs(a - b) < tol; }

QuadratureOptions tol_opt(double tol) {
  QuadratureOptions opt;
  opt.tol = tol;
  return opt;
}

// Spherical length of the image of |z| = 1 under z -> c + r z: closed form
// for chart circles of radius r about c.
double circle_image_length(double r, double c_abs) {
  const double s = 1.0 + c_abs * c_abs + r * r;
  return 4.0 * kPi * r / std::sqrt(s * s - 4.0 * r * r * c_abs * c_abs);
}
}  // namespace

TEST_CASE("1d integration with honest error estimates") {
  const auto sin_res = integrate([](double x) { return std::sin(x); }, 0.0, kPi,
                                 {}, tol_opt(1e-12));
  CHECK(close(sin_res.value, 2.0, 1e-12));
  CHECK(sin_res.error <= 1e-12);
  CHECK(std::abs(sin_res.value - 2.0) <= sin_res.error + 1e-15);

  // Kinked integrand: |x - 0.3| over [0, 1] = 0.09/2 + 0.49/2.
  const auto kink = integrate([](double x) { return std::abs(x - 0.3); }, 0.0,
                              1.0, {0.3}, tol_opt(1e-12));
  CHECK(close(kink.value, 0.5 * (0.09 + 0.49), 1e-12));

  // Reversed orientation flips the sign.
  const auto rev = integrate([](double x) { return std::sin(x); }, kPi, 0.0, {},
                             tol_opt(1e-10));
  CHECK(close(rev.value, -2.0, 1e-9));
}

TEST_CASE("unreachable tolerance raises ToleranceNotMet") {
  // A jump at x = 1/3 never lands on an interval endpoint under bisection,
  // so the interval straddling it keeps an error estimate of order the
  // minimum interval width -- far above this tolerance.
  CHECK_THROWS_AS(
      integrate([](double x) { return x < 1.0 / 3.0 ? 0.0 : 1.0; }, 0.0, 1.0,
                {}, tol_opt(1e-17)),
      ToleranceNotMet);

  // A tiny budget is exhausted before an oscillatory integrand converges.
  // (The interval [0, 1] avoids the odd symmetry of sin(40x) about pi/2,
  // which a symmetric rule would integrate to zero in one pass.)
  QuadratureOptions starved;
  starved.tol = 1e-12;
  starved.budget = 60;
  CHECK_THROWS_AS(
      integrate([](double x) { return std::sin(40.0 * x); }, 0.0, 1.0, {},
                starved),
      ToleranceNotMet);
}

TEST_CASE("2d integration") {
  const auto res = integrate2d([](double x, double y) { return x * y; }, 0.0,
                               1.0, 0.0, 1.0, tol_opt(1e-12));
  CHECK(close(res.value, 0.25, 1e-12));
  const auto gauss = integrate2d(
      [](double x, double y) { return std::exp(-x * x - y * y); }, -2.0, 2.0,
      -2.0, 2.0, tol_opt(1e-10));
  const double erf2 = std::erf(2.0) * std::sqrt(kPi);
  CHECK(close(gauss.value, erf2 * erf2, 1e-9));
}

TEST_CASE("curve length of geodesics and circles") {
  const auto arc = GeodesicArc::shortest(ExtPoint(0.0), ExtPoint(1.0));
  const auto len = curve_length(ParamCurve::geodesic(arc), tol_opt(1e-10));
  CHECK(close(len.value, kPi / 2.0, 1e-10));

  const SphericalCircle circ{Vec3{0.0, 0.0, -1.0}, 0.8};
  const auto clen = curve_length(ParamCurve::circle(circ), tol_opt(1e-10));
  CHECK(close(clen.value, 2.0 * kPi * std::sin(0.8), 1e-9));
}

TEST_CASE("concat joins pieces and keeps breakpoints") {
  const auto a = ParamCurve::geodesic(GeodesicArc::shortest(ExtPoint(0.0), ExtPoint(1.0)));
  const auto b = ParamCurve::geodesic(
      GeodesicArc::shortest(ExtPoint(1.0), ExtPoint(Complex(0.0, 1.0))));
  const ParamCurve joined = ParamCurve::concat({a, b});
  CHECK(!joined.breakpoints.empty());
  CHECK(close(joined.point(0.5).norm(), 1.0, 1e-12));
  const auto len = curve_length(joined, tol_opt(1e-10));
  const double expected = kPi / 2.0 + spherical_distance(ExtPoint(1.0), ExtPoint(Complex(0.0, 1.0)));
  CHECK(close(len.value, expected, 1e-9));
}

TEST_CASE("from_chart matches geodesic speed") {
  // Chart segment [2, 4] on the real axis.
  const ParamCurve seg = ParamCurve::from_chart(
      [](double t) { return Complex(2.0 + 2.0 * t, 0.0); },
      [](double) { return Complex(2.0, 0.0); });
  const auto len = curve_length(seg, tol_opt(1e-11));
  const double expected = spherical_distance(ExtPoint(2.0), ExtPoint(4.0));
  CHECK(close(len.value, expected, 1e-10));
}

TEST_CASE("rotated curves preserve length") {
  const auto arc = ParamCurve::geodesic(
      GeodesicArc::shortest(ExtPoint(Complex(2.0, 1.0)), ExtPoint(Complex(-1.0, 0.5))));
  Rng rng(3);
  const Rotation rot = Rotation::random(rng);
  const auto l0 = curve_length(arc, tol_opt(1e-10));
  const auto l1 = curve_length(rotated(arc, rot), tol_opt(1e-10));
  CHECK(close(l0.value, l1.value, 1e-9));
}

TEST_CASE("spherical speed is chart independent") {
  // rho(f) |f'| at large |f| goes through the reciprocal chart; both sides
  // of |f| = 1 must agree with the direct formula 2 |f'| / (1 + |f|^2).
  const auto direct = [](const Complex& w, const Complex& d) {
    return 2.0 * std::abs(d) / (1.0 + std::norm(w));
  };
  for (const double mag : {0.999999, 1.0, 1.000001, 5.0, 2000.0}) {
    const Complex w(mag * 0.6, -mag * 0.8);
    const Complex d(1.0, 2.0);
    CHECK(close(spherical_speed(w, d), direct(w, d), 1e-12));
  }
  CHECK(close(spherical_scale(Complex(0.0, 0.0)), 2.0, 1e-15));
}

TEST_CASE("map boundary length closed forms") {
  // f(z) = c + r z sends the unit circle to a chart circle.
  struct Case {
    double r, c;
  };
  for (const Case cs : {Case{0.5, 3.0}, Case{1.05, 1.1}, Case{0.3, 0.0}}) {
    AnalyticMap f;
    f.label = "affine";
    f.value = [cs](Complex z) { return cs.c + cs.r * z; };
    f.derivative = [cs](Complex) { return Complex(cs.r, 0.0); };
    const auto len = map_boundary_length(f, tol_opt(1e-10));
    CHECK(close(len.value, circle_image_length(cs.r, cs.c), 1e-9));
  }
}

TEST_CASE("map area closed forms for centered caps") {
  for (double r : {0.3, 0.7, 1.0}) {
    const AnalyticMap f = AnalyticMap::polynomial({Complex(0.0, 0.0), Complex(r, 0.0)});
    const auto area = map_area(f, tol_opt(1e-10));
    CHECK(close(area.value, 4.0 * kPi * r * r / (1.0 + r * r), 1e-8));
    const auto len = map_boundary_length(f, tol_opt(1e-10));
    CHECK(close(len.value, 4.0 * kPi * r / (1.0 + r * r), 1e-9));
  }
}

TEST_CASE("annulus areas add up") {
  const AnalyticMap f = AnalyticMap::polynomial({Complex(0.0, 0.0), Complex(1.0, 0.0)});
  const auto inner = map_area_annulus(f, 0.0, 0.6, tol_opt(1e-10));
  const auto outer = map_area_annulus(f, 0.6, 1.0, tol_opt(1e-10));
  const auto total = map_area(f, tol_opt(1e-10));
  CHECK(close(inner.value + outer.value, total.value, 1e-8));
  CHECK(close(inner.value, 4.0 * kPi * 0.36 / 1.36, 1e-8));
}

TEST_CASE("finite difference derivative fallback") {
  AnalyticMap f;
  f.label = "sin-no-deriv";
  f.value = [](Complex z) { return std::sin(z) / 2.0 + 4.0; };
  const AnalyticMap g = [] {
    AnalyticMap m;
    m.label = "sin-deriv";
    m.value = [](Complex z) { return std::sin(z) / 2.0 + 4.0; };
    m.derivative = [](Complex z) { return std::cos(z) / 2.0; };
    return m;
  }();
  const auto lf = map_boundary_length(f, tol_opt(1e-8));
  const auto lg = map_boundary_length(g, tol_opt(1e-10));
  CHECK(close(lf.value, lg.value, 1e-7));
}

TEST_CASE("non finite maps are rejected") {
  AnalyticMap f;
  f.label = "nan-value";
  f.value = [](Complex) { return Complex(std::nan(""), 0.0); };
  f.derivative = [](Complex) { return Complex(1.0, 0.0); };
  CHECK_THROWS_AS(map_boundary_length(f, tol_opt(1e-8)), DomainError);

  AnalyticMap g;
  g.label = "bad-deriv";
  g.value = [](Complex z) { return z + 3.0; };
  g.derivative = [](Complex) {
    return Complex(std::nan(""), 0.0);
  };
  CHECK_THROWS_AS(map_boundary_length(g, tol_opt(1e-8)), NonFiniteDerivative);
}

TEST_CASE("polynomial maps evaluate by Horner") {
  const AnalyticMap f =
      AnalyticMap::polynomial({Complex(5.0, 0.0), Complex(0.0, 0.0), Complex(0.25, 0.0)},
                              "quad");
  const Complex z(0.3, -0.4);
  CHECK(std::abs(f.value(z) - (0.25 * z * z + 5.0)) < 1e-15);
  CHECK(std::abs(f.deriv(z) - 0.5 * z) < 1e-12);
  CHECK(f.label == "quad");
}
