#include <cmath>

#include "doctest.h"
#include "sphereratio/lens.hpp"
#include "sphereratio/quadrature.hpp"

using namespace sphereratio;

namespace {
bool close(double a, double b, double tol) { return std::abs(a - b) < tol; }

QuadratureOptions tol_opt(double tol) {
  QuadratureOptions opt;
  opt.tol = tol;
  return opt;
}
}  // namespace

TEST_CASE("zeta0 and zeta1 reference values") {
  CHECK(close(zeta0(0.0), kPi / 2.0, 1e-15));
  CHECK(close(zeta0(1.0), kPi / std::sqrt(2.0), 1e-14));
  CHECK(close(zeta0(std::sqrt(0.5)), 1.71006644021581879, 1e-14));
  CHECK(close(zeta0(0.3), 1.59087117834322022, 1e-14));
  CHECK(close(zeta0(0.95), 1.95484180831129197, 1e-14));
  CHECK(close(zeta1(0.0), 0.0, 1e-15));
  CHECK(close(zeta1(1.0), kPi - kPi / std::sqrt(2.0), 1e-14));
  CHECK(close(zeta1(std::sqrt(0.5)), 0.36159675063875139, 1e-14));
  CHECK(close(zeta1(0.3), 0.13212395452782895, 1e-14));
  CHECK(close(zeta1(0.95), 0.64937207711102315, 1e-14));
  CHECK_THROWS_AS(zeta0(-0.1), DomainError);
  CHECK_THROWS_AS(zeta0(1.1), DomainError);
  CHECK_THROWS_AS(zeta1(2.0), DomainError);
}

TEST_CASE("zeta0 is monotone and inverts") {
  double prev = zeta0(0.0);
  for (int i = 1; i <= 40; ++i) {
    const double tau = static_cast<double>(i) / 40.0;
    const double z = zeta0(tau);
    CHECK(z > prev);
    prev = z;
    CHECK(close(invert_zeta0(z), tau, 1e-11));
  }
  CHECK_THROWS_AS(invert_zeta0(1.0), DomainError);
  CHECK_THROWS_AS(invert_zeta0(3.0), DomainError);
}

TEST_CASE("h reference values and identity") {
  CHECK(close(h(0.0), 4.0, 1e-12));
  CHECK(close(h(1.0), 3.0 * std::sqrt(2.0) - 1.0, 1e-12));
  // One-sided slope at 0.
  const double slope = (h(1e-5) - h(0.0)) / 1e-5;
  CHECK(close(slope, 4.0 / kPi - 1.0, 1e-4));
  // h(tau) zeta0(tau) == 2 pi + zeta1(tau).
  for (int i = 0; i <= 1000; ++i) {
    const double tau = static_cast<double>(i) / 1000.0;
    CHECK(std::abs(h(tau) * zeta0(tau) - (2.0 * kPi + zeta1(tau))) < 1e-10);
  }
}

TEST_CASE("sharp constant location") {
  const H0Result res = find_h0(1e-10);
  CHECK(close(res.tau0, 0.24788309138028120, 1e-7));
  CHECK(close(res.h0, 4.03415979053563141, 1e-11));
  CHECK(close(res.h0, 4.03415979051, 1e-8));
  CHECK(res.iterations > 0);
  CHECK(res.bracket_width <= 1e-10);
  // The maximum dominates its neighborhood.
  CHECK(res.h0 >= h(res.tau0 - 1e-6));
  CHECK(res.h0 >= h(res.tau0 + 1e-6));
  CHECK_THROWS_AS(find_h0(0.0), DomainError);
  CHECK_THROWS_AS(find_h0(-1.0), DomainError);
}

TEST_CASE("arc parametrization endpoints and length") {
  const double tau = 0.6;
  const double theta = std::asin(tau);
  CHECK(std::abs(arc_param(tau, 0.0) - Complex(1.0, 0.0)) < 1e-14);
  CHECK(std::abs(arc_param(tau, theta)) < 1e-14);
  CHECK_THROWS_AS(arc_param(0.0, 0.0), DomainError);

  // Finite differences agree with the analytic derivative.
  const double t = 0.3 * theta;
  const Complex fd =
      (arc_param(tau, t + 1e-6) - arc_param(tau, t - 1e-6)) / Complex(2e-6, 0.0);
  CHECK(std::abs(fd - arc_param_deriv(tau, t)) < 1e-8);

  // Quadrature length of the arc equals zeta0.
  for (double tt : {0.15, 0.5, 0.85, 1.0}) {
    const auto len = curve_length(arc_curve(tt), tol_opt(1e-9));
    CHECK(close(len.value, zeta0(tt), 1e-8));
  }
}

TEST_CASE("lens from length") {
  const LensDomain lens = lens_from_length(1.2 * kPi);
  CHECK(close(lens.boundary_length, 1.2 * kPi, 1e-10));
  CHECK(close(lens.half_length, 0.6 * kPi, 1e-10));
  CHECK(close(lens.half_length, zeta0(lens.tau), 1e-12));
  CHECK(close(lens.area, 2.0 * zeta1(lens.tau), 1e-12));
  CHECK(close(lens.theta, std::asin(lens.tau), 1e-13));
  // (4 pi + area) / length == h(tau).
  CHECK(close((4.0 * kPi + lens.area) / lens.boundary_length, h(lens.tau), 1e-10));
  CHECK_THROWS_AS(lens_from_length(0.9 * kPi), DomainError);
  CHECK_THROWS_AS(lens_from_length(1.5 * kPi), DomainError);
}

TEST_CASE("lens boundary curve") {
  const LensDomain lens01 = lens_from_length(1.2 * kPi, AnchorPair::kZeroOne);
  const ParamCurve curve = lens_boundary(lens01);
  // Starts and ends at 0, passes through 1 at the seam.
  CHECK((curve.point(0.0) - stereo_project(ExtPoint(0.0))).norm() < 1e-9);
  CHECK((curve.point(1.0) - stereo_project(ExtPoint(0.0))).norm() < 1e-9);
  CHECK((curve.point(0.5) - stereo_project(ExtPoint(1.0))).norm() < 1e-9);
  const auto len = curve_length(curve, tol_opt(1e-9));
  CHECK(close(len.value, lens01.boundary_length, 1e-8));

  const LensDomain lens1i = lens_from_length(1.2 * kPi, AnchorPair::kOneInf);
  const ParamCurve curve1i = lens_boundary(lens1i);
  CHECK((curve1i.point(0.0) - stereo_project(ExtPoint(1.0))).norm() < 1e-9);
  CHECK((curve1i.point(0.5) - stereo_project(ExtPoint::infinity())).norm() < 1e-9);
  const auto len1i = curve_length(curve1i, tol_opt(1e-9));
  CHECK(close(len1i.value, lens1i.boundary_length, 1e-8));

  // Degenerate lens: the doubled segment.
  const LensDomain flat = lens_from_length(kPi, AnchorPair::kZeroOne);
  const auto flat_len = curve_length(lens_boundary(flat), tol_opt(1e-9));
  CHECK(close(flat_len.value, kPi, 1e-8));
}

TEST_CASE("anchor rotation maps 0 to 1 to infinity") {
  const Rotation& rot = anchor_rotation();
  CHECK(chordal(rot.apply_chart(ExtPoint(0.0)), ExtPoint(1.0)) < 1e-12);
  CHECK(chordal(rot.apply_chart(ExtPoint(1.0)), ExtPoint::infinity()) < 1e-12);
  CHECK(chordal(rot.apply_chart(ExtPoint::infinity()), ExtPoint(-1.0)) < 1e-12);
}
