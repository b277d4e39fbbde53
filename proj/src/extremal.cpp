#include "sphereratio/extremal.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace sphereratio {

const H0Result& sharp_constant() {
  static const H0Result res = find_h0(1e-12);
  return res;
}

ExtremalFamily extremal_family(int m) {
  if (m < 1) throw DomainError("extremal_family: m must be at least 1");
  const H0Result& s = sharp_constant();
  ExtremalFamily fam;
  fam.m = m;
  fam.tau0 = s.tau0;
  fam.theta0 = std::asin(s.tau0);
  fam.l0 = 2.0 * zeta0(s.tau0);
  fam.a0 = 2.0 * zeta1(s.tau0);
  fam.h0 = s.h0;
  return fam;
}

double ExtremalFamily::area() const { return m * (4.0 * kPi + a0); }

double ExtremalFamily::length() const { return kPi + m * l0; }

double ExtremalFamily::ratio() const { return area() / length(); }

double ExtremalFamily::deficit() const {
  const long double pi = std::numbers::pi_v<long double>;
  const long double mm = m;
  const long double a = mm * (4.0L * pi + static_cast<long double>(a0));
  const long double l = pi + mm * static_cast<long double>(l0);
  return static_cast<double>(static_cast<long double>(h0) - a / l);
}

ParamCurve ExtremalFamily::boundary() const {
  std::vector<ParamCurve> pieces;
  pieces.reserve(static_cast<std::size_t>(m) + 2);
  pieces.push_back(ParamCurve::geodesic(
      GeodesicArc::shortest(ExtPoint(0.0), ExtPoint(1.0))));
  const LensDomain lens = lens_from_length(l0, AnchorPair::kOneInf);
  const ParamCurve loop = lens_boundary(lens);
  for (int k = 0; k < m; ++k) pieces.push_back(loop);
  pieces.push_back(ParamCurve::geodesic(
      GeodesicArc::shortest(ExtPoint(1.0), ExtPoint(0.0))));
  return ParamCurve::concat(std::move(pieces));
}

GeodesicPolygon ExtremalFamily::boundary_polygon(double max_chord_angle) const {
  return normalize(approximate(boundary(), max_chord_angle, true));
}

int first_m_with_ratio_above(double threshold) {
  const H0Result& s = sharp_constant();
  if (!(threshold < s.h0)) {
    throw DomainError(
        "first_m_with_ratio_above: threshold is not below the limit h0");
  }
  const ExtremalFamily one = extremal_family(1);
  if (one.ratio() > threshold) return 1;
  // ratio(m) > t  <=>  m ((4 pi + a0) - t l0) > t pi; the coefficient is
  // positive because t < h0 = (4 pi + a0) / l0.
  const double coeff = (4.0 * kPi + one.a0) - threshold * one.l0;
  int m = static_cast<int>(std::floor(threshold * kPi / coeff)) + 1;
  if (m < 1) m = 1;
  while (m > 1 && extremal_family(m - 1).ratio() > threshold) --m;
  while (!(extremal_family(m).ratio() > threshold)) ++m;
  return m;
}

}  // namespace sphereratio
