#include "sphereratio/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>

namespace sphereratio {

namespace {

bool finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Gauss-Kronrod 7/15 node/weight table on [-1, 1] (positive half; the Gauss
// nodes are entries 1, 3, 5, 7).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkEval {
  double k15;
  double g7;
};

GkEval eval_gk(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double k15 = kWgk[7] * fc;
  double g7 = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double sum = f(c - x) + f(c + x);
    k15 += kWgk[j] * sum;
    if (j % 2 == 1) g7 += kWg[j / 2] * sum;
  }
  return {k15 * h, g7 * h};
}

void integrate_interval(const std::function<double(double)>& f, double a,
                        double b, double tol, double span,
                        const QuadratureOptions& opt, QuadratureResult& acc) {
  // Depth-first with an explicit stack; each interval is accepted when the
  // G7/K15 discrepancy fits its width-proportional share of the tolerance, so
  // the accumulated estimate is bounded by tol overall.
  std::vector<std::pair<double, double>> stack{{a, b}};
  while (!stack.empty()) {
    const auto [lo, hi] = stack.back();
    stack.pop_back();
    if (acc.evaluations + 15 > opt.budget) {
      throw ToleranceNotMet("integrate: evaluation budget exhausted");
    }
    const GkEval e = eval_gk(f, lo, hi);
    acc.evaluations += 15;
    const double width = hi - lo;
    const double local_tol = tol * (width / span);
    const double err = std::abs(e.k15 - e.g7);
    if (err <= local_tol || width <= 1e-14 * span) {
      acc.value += e.k15;
      acc.error += err;
      continue;
    }
    const double mid = 0.5 * (lo + hi);
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);  // processed first: left-to-right order
  }
}

}  // namespace

double spherical_scale(const Complex& z) {
  const double m = std::abs(z);
  if (m <= 1.0) return 2.0 / (1.0 + m * m);
  const double q = 1.0 / m;
  return 2.0 * q * q / (q * q + 1.0);
}

double spherical_speed(const Complex& value, const Complex& derivative) {
  const double m = std::abs(value);
  const double d = std::abs(derivative);
  if (m <= 1.0) return 2.0 * d / (1.0 + m * m);
  // reciprocal chart g = 1/f: 2|g'| / (1 + |g|^2) with |g'| = |f'| / |f|^2
  const double q = 1.0 / m;
  return 2.0 * (d * q) * q / (1.0 + q * q);
}

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const std::vector<double>& breakpoints,
                           const QuadratureOptions& opt) {
  if (!(opt.tol > 0.0)) throw DomainError("integrate: tolerance must be positive");
  if (a == b) return QuadratureResult{0.0, 0.0, 0};
  if (b < a) {
    QuadratureResult r = integrate(f, b, a, breakpoints, opt);
    r.value = -r.value;
    return r;
  }
  std::vector<double> cuts{a};
  for (double t : breakpoints) {
    if (t > a && t < b) cuts.push_back(t);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  QuadratureResult acc;
  const double span = b - a;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    integrate_interval(f, cuts[i], cuts[i + 1], opt.tol, span, opt, acc);
  }
  if (acc.error > opt.tol) {
    throw ToleranceNotMet("integrate: tolerance unreachable");
  }
  return acc;
}

QuadratureResult integrate2d(const std::function<double(double, double)>& f,
                             double ax, double bx, double ay, double by,
                             const QuadratureOptions& opt) {
  if (!(bx > ax) || !(by > ay)) throw DomainError("integrate2d: empty box");
  if (!(opt.tol > 0.0)) throw DomainError("integrate2d: tolerance must be positive");

  struct Cell {
    double ax, bx, ay, by;
  };
  const double total_area = (bx - ax) * (by - ay);
  QuadratureResult acc;
  std::vector<Cell> stack{{ax, bx, ay, by}};
  double grid[15][15];
  double nodes_x[15], nodes_y[15];

  while (!stack.empty()) {
    const Cell cell = stack.back();
    stack.pop_back();
    if (acc.evaluations + 225 > opt.budget) {
      throw ToleranceNotMet("integrate2d: evaluation budget exhausted");
    }
    const double cx = 0.5 * (cell.ax + cell.bx), hx = 0.5 * (cell.bx - cell.ax);
    const double cy = 0.5 * (cell.ay + cell.by), hy = 0.5 * (cell.by - cell.ay);
    // sorted 15-point layout: indices 0..6 negative side, 7 center, 8..14 mirror
    for (int i = 0; i < 7; ++i) {
      nodes_x[i] = cx - hx * kXgk[i];
      nodes_x[14 - i] = cx + hx * kXgk[i];
      nodes_y[i] = cy - hy * kXgk[i];
      nodes_y[14 - i] = cy + hy * kXgk[i];
    }
    nodes_x[7] = cx;
    nodes_y[7] = cy;
    for (int i = 0; i < 15; ++i) {
      for (int j = 0; j < 15; ++j) grid[i][j] = f(nodes_x[i], nodes_y[j]);
    }
    acc.evaluations += 225;

    auto wk = [](int i) { return kWgk[i < 8 ? i : 14 - i]; };
    // Gauss nodes sit at sorted indices 1,3,5,7,9,11,13 with weights kWg.
    auto wg = [](int i) {
      const int j = i < 8 ? i : 14 - i;  // 1,3,5,7
      return kWg[j / 2];
    };
    double kk = 0.0, gk = 0.0, kg = 0.0;
    for (int i = 0; i < 15; ++i) {
      for (int j = 0; j < 15; ++j) {
        const double v = grid[i][j];
        kk += wk(i) * wk(j) * v;
        if (i % 2 == 1) gk += wg(i) * wk(j) * v;
        if (j % 2 == 1) kg += wk(i) * wg(j) * v;
      }
    }
    kk *= hx * hy;
    gk *= hx * hy;
    kg *= hx * hy;

    const double err = std::abs(kk - gk) + std::abs(kk - kg);
    const double cell_area = (cell.bx - cell.ax) * (cell.by - cell.ay);
    const double local_tol = opt.tol * (cell_area / total_area);
    const bool too_small = (cell.bx - cell.ax) <= 1e-12 * (bx - ax) ||
                           (cell.by - cell.ay) <= 1e-12 * (by - ay);
    if (err <= local_tol || too_small) {
      acc.value += kk;
      acc.error += err;
      continue;
    }
    stack.push_back({cx, cell.bx, cy, cell.by});
    stack.push_back({cell.ax, cx, cy, cell.by});
    stack.push_back({cx, cell.bx, cell.ay, cy});
    stack.push_back({cell.ax, cx, cell.ay, cy});
  }
  if (acc.error > opt.tol) {
    throw ToleranceNotMet("integrate2d: tolerance unreachable");
  }
  return acc;
}

// ---- curves ----

ParamCurve ParamCurve::from_chart(std::function<Complex(double)> z,
                                  std::function<Complex(double)> dz,
                                  std::vector<double> breakpoints) {
  ParamCurve c;
  c.breakpoints = std::move(breakpoints);
  c.point = [z](double t) { return stereo_project(ExtPoint(z(t))); };
  c.velocity = [z = std::move(z), dz = std::move(dz)](double t) {
    const Complex w = z(t), dw = dz(t);
    const double x = w.real(), y = w.imag();
    const double u = 1.0 + x * x + y * y;
    const double u2 = u * u;
    // differential of the stereographic projection
    const Vec3 ddx{2.0 * (u - 2.0 * x * x) / u2, -4.0 * x * y / u2, 4.0 * x / u2};
    const Vec3 ddy{-4.0 * x * y / u2, 2.0 * (u - 2.0 * y * y) / u2, 4.0 * y / u2};
    return ddx * dw.real() + ddy * dw.imag();
  };
  return c;
}

ParamCurve ParamCurve::geodesic(const GeodesicArc& arc) {
  ParamCurve c;
  c.point = [arc](double t) { return arc.point_at(t); };
  c.velocity = [arc](double t) { return arc.velocity_at(t); };
  return c;
}

ParamCurve ParamCurve::circle(const SphericalCircle& circ) {
  const Vec3 c = circ.center.normalized();
  // deterministic basis perpendicular to the axis
  const Vec3 seed = std::abs(c.x) <= std::abs(c.y) && std::abs(c.x) <= std::abs(c.z)
                        ? Vec3{1, 0, 0}
                        : (std::abs(c.y) <= std::abs(c.z) ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
  const Vec3 u1 = cross(c, seed).normalized();
  const Vec3 u2 = cross(c, u1);
  const double cr = std::cos(circ.radius), sr = std::sin(circ.radius);
  ParamCurve out;
  out.point = [=](double t) {
    const double a = 2.0 * kPi * t;
    return c * cr + (u1 * std::cos(a) + u2 * std::sin(a)) * sr;
  };
  out.velocity = [=](double t) {
    const double a = 2.0 * kPi * t;
    return (u2 * std::cos(a) - u1 * std::sin(a)) * (2.0 * kPi * sr);
  };
  return out;
}

ParamCurve ParamCurve::concat(std::vector<ParamCurve> pieces) {
  if (pieces.empty()) throw DomainError("concat: no pieces");
  const double n = static_cast<double>(pieces.size());
  ParamCurve out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (k > 0) out.breakpoints.push_back(static_cast<double>(k) / n);
    for (double t : pieces[k].breakpoints) {
      out.breakpoints.push_back((static_cast<double>(k) + t) / n);
    }
  }
  std::sort(out.breakpoints.begin(), out.breakpoints.end());
  auto locate = [n](double t) {
    int k = static_cast<int>(t * n);
    k = std::clamp(k, 0, static_cast<int>(n) - 1);
    return std::make_pair(static_cast<std::size_t>(k), t * n - k);
  };
  auto shared = std::make_shared<std::vector<ParamCurve>>(std::move(pieces));
  out.point = [shared, locate](double t) {
    const auto [k, s] = locate(t);
    return (*shared)[k].point(s);
  };
  out.velocity = [shared, locate, n](double t) {
    const auto [k, s] = locate(t);
    return (*shared)[k].velocity(s) * n;
  };
  return out;
}

ParamCurve rotated(const ParamCurve& curve, const Rotation& rot) {
  ParamCurve out;
  out.breakpoints = curve.breakpoints;
  out.point = [point = curve.point, rot](double t) { return rot.apply(point(t)); };
  out.velocity = [vel = curve.velocity, rot](double t) { return rot.apply(vel(t)); };
  return out;
}

// ---- analytic maps ----

Complex AnalyticMap::deriv(const Complex& z) const {
  if (derivative) return derivative(z);
  const double h = 1e-5 * (std::abs(z) + 1.0);
  const Complex step(h, 0.0);
  return (-value(z + 2.0 * step) + 8.0 * value(z + step) - 8.0 * value(z - step) +
          value(z - 2.0 * step)) /
         (12.0 * h);
}

AnalyticMap AnalyticMap::polynomial(std::vector<Complex> coeffs, std::string label) {
  if (coeffs.empty()) coeffs.push_back(Complex(0.0, 0.0));
  std::vector<Complex> dcoeffs;
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    dcoeffs.push_back(static_cast<double>(k) * coeffs[k]);
  }
  AnalyticMap m;
  m.label = std::move(label);
  m.value = [coeffs](Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
  };
  m.derivative = [dcoeffs](Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = dcoeffs.size(); k-- > 0;) acc = acc * z + dcoeffs[k];
    return acc;
  };
  return m;
}

AnalyticMap AnalyticMap::rotated(const Rotation& rot, std::string new_label) const {
  const auto [a, b] = rot.mobius();
  const Complex c = -std::conj(b), d = std::conj(a);
  AnalyticMap out;
  out.label = new_label.empty() ? label + "+rotated" : std::move(new_label);
  out.boundary_breakpoints = boundary_breakpoints;
  auto val = value;
  AnalyticMap self = *this;
  out.value = [val, a = a, b = b, c = c, d = d](Complex z) {
    const Complex w = val(z);
    const Complex den = c * w + d;
    if (std::abs(den) < 1e-154) {
      throw DomainError("rotated map: value reaches infinity on the disk");
    }
    return (a * w + b) / den;
  };
  out.derivative = [self, c = c, d = d](Complex z) {
    // Moebius derivative is 1/(c w + d)^2 because ad - bc = |a|^2 + |b|^2 = 1.
    const Complex w = self.value(z);
    const Complex den = c * w + d;
    if (std::abs(den) < 1e-154) {
      throw DomainError("rotated map: value reaches infinity on the disk");
    }
    return self.deriv(z) / (den * den);
  };
  return out;
}

// ---- spherical functionals ----

QuadratureResult curve_length(const ParamCurve& c, const QuadratureOptions& opt) {
  return integrate([&](double t) { return c.velocity(t).norm(); }, 0.0, 1.0,
                   c.breakpoints, opt);
}

QuadratureResult map_boundary_length(const AnalyticMap& f,
                                     const QuadratureOptions& opt) {
  auto integrand = [&](double theta) {
    const Complex z(std::cos(theta), std::sin(theta));
    const Complex w = f.value(z);
    if (!finite(w)) {
      throw DomainError("map_boundary_length: map value not finite (label=" +
                        f.label + ")");
    }
    const Complex d = f.deriv(z);
    if (!finite(d)) {
      throw NonFiniteDerivative("map_boundary_length: derivative not finite (label=" +
                                f.label + ")");
    }
    return spherical_speed(w, d);  // |z'(theta)| == 1 on the unit circle
  };
  return integrate(integrand, 0.0, 2.0 * kPi, f.boundary_breakpoints, opt);
}

QuadratureResult map_area_annulus(const AnalyticMap& f, double r0, double r1,
                                  const QuadratureOptions& opt) {
  if (!(r0 >= 0.0) || !(r1 <= 1.0) || !(r1 > r0)) {
    throw DomainError("map_area_annulus: need 0 <= r0 < r1 <= 1");
  }
  auto integrand = [&](double theta, double r) {
    const Complex z(r * std::cos(theta), r * std::sin(theta));
    const Complex w = f.value(z);
    if (!finite(w)) {
      throw DomainError("map_area: map value not finite (label=" + f.label + ")");
    }
    const Complex d = f.deriv(z);
    if (!finite(d)) {
      throw NonFiniteDerivative("map_area: derivative not finite (label=" +
                                f.label + ")");
    }
    const double s = spherical_speed(w, d);
    return s * s * r;
  };
  // Split the angular range at declared breakpoints (radial seams).
  std::vector<double> cuts{0.0};
  for (double t : f.boundary_breakpoints) {
    if (t > 0.0 && t < 2.0 * kPi) cuts.push_back(t);
  }
  cuts.push_back(2.0 * kPi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  QuadratureResult acc;
  QuadratureOptions sub = opt;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    sub.tol = opt.tol * (cuts[i + 1] - cuts[i]) / (2.0 * kPi);
    sub.budget = opt.budget - acc.evaluations;
    const QuadratureResult part =
        integrate2d(integrand, cuts[i], cuts[i + 1], r0, r1, sub);
    acc.value += part.value;
    acc.error += part.error;
    acc.evaluations += part.evaluations;
  }
  return acc;
}

QuadratureResult map_area(const AnalyticMap& f, const QuadratureOptions& opt) {
  return map_area_annulus(f, 0.0, 1.0, opt);
}

}  // namespace sphereratio
