#include "sphereratio/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>

#include "sphereratio/errors.hpp"
#include "sphereratio/extremal.hpp"
#include "sphereratio/isoperimetric.hpp"
#include "sphereratio/lens.hpp"
#include "sphereratio/sphere.hpp"

namespace sphereratio {

namespace {

constexpr double kOmittedMarginTol = 1e-9;

double point_margin(const Complex& w) {
  const double aw = std::abs(w);
  double m = std::min(aw, std::abs(w - 1.0));
  if (aw > 1.0) m = std::min(m, 1.0 / aw);
  return m;
}

double halton(std::uint64_t i, std::uint64_t base) {
  double f = 1.0;
  double r = 0.0;
  while (i > 0) {
    f /= static_cast<double>(base);
    r += f * static_cast<double>(i % base);
    i /= base;
  }
  return r;
}

void require_tol(double tol, const char* who) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw DomainError(std::string(who) + ": tolerance must be positive");
  }
}

QuadratureOptions options_for(double tol) {
  QuadratureOptions opt;
  opt.tol = tol;
  return opt;
}

[[noreturn]] void throw_omitted(const AnalyticMap& f, const Complex& z,
                                double margin) {
  std::ostringstream os;
  os << "map '" << f.label << "' attains a value within " << kOmittedMarginTol
     << " of {0, 1, inf} near z = (" << z.real() << ", " << z.imag()
     << ") (margin " << margin << ")";
  throw OmittedValueViolation(os.str());
}

double sampled_margin(const AnalyticMap& f, bool throw_on_violation) {
  if (!f.value) throw DomainError("omitted_margin: map has no value function");
  double margin = std::numeric_limits<double>::infinity();
  auto visit = [&](const Complex& z) {
    const Complex w = f.value(z);
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
      throw DomainError("omitted_margin: map '" + f.label +
                        "' is not finite on the closed disk");
    }
    const double m = point_margin(w);
    if (throw_on_violation && m < kOmittedMarginTol) throw_omitted(f, z, m);
    margin = std::min(margin, m);
  };

  visit(Complex(0.0, 0.0));
  // Coarse polar grid including the boundary circle.
  for (int ir = 1; ir <= 16; ++ir) {
    const double r = static_cast<double>(ir) / 16.0;
    for (int ia = 0; ia < 64; ++ia) {
      const double t = 2.0 * kPi * static_cast<double>(ia) / 64.0;
      visit(Complex(r * std::cos(t), r * std::sin(t)));
    }
  }
  // 1e5 quasi-random interior points (Halton bases 2 and 3, area-uniform).
  for (std::uint64_t i = 1; i <= 100000; ++i) {
    const double r = std::sqrt(halton(i, 2));
    const double t = 2.0 * kPi * halton(i, 3);
    visit(Complex(r * std::cos(t), r * std::sin(t)));
  }
  // Fine boundary ring.
  for (int ia = 0; ia < 2048; ++ia) {
    const double t = 2.0 * kPi * static_cast<double>(ia) / 2048.0;
    visit(Complex(std::cos(t), std::sin(t)));
  }
  return margin;
}

void finish_primary(InequalityReport& rep) {
  rep.slack = rep.bound_value - rep.area;
  rep.holds = rep.slack > -rep.combined_error;
  rep.conclusive = std::abs(rep.slack) > rep.combined_error;
}

}  // namespace

nlohmann::json InequalityReport::to_json() const {
  nlohmann::json j{{"label", label},
                   {"bound_name", bound_name},
                   {"area", area},
                   {"length", length},
                   {"area_error", area_error},
                   {"length_error", length_error},
                   {"bound_value", bound_value},
                   {"slack", slack},
                   {"combined_error", combined_error},
                   {"holds", holds},
                   {"conclusive", conclusive}};
  if (sampling_margin >= 0.0) j["sampling_margin"] = sampling_margin;
  if (has_secondary) {
    j["secondary_name"] = secondary_name;
    j["secondary_slack"] = secondary_slack;
  }
  if (has_profile) {
    j["profile_bound"] = profile_bound;
    j["profile_slack"] = profile_slack;
  }
  return j;
}

double omitted_margin(const AnalyticMap& f) { return sampled_margin(f, false); }

InequalityReport check_main(const AnalyticMap& f, double tol) {
  require_tol(tol, "check_main");
  InequalityReport rep;
  rep.label = f.label;
  rep.bound_name = "h0_length";
  rep.sampling_margin = sampled_margin(f, true);

  const QuadratureOptions opt = options_for(tol);
  const QuadratureResult len = map_boundary_length(f, opt);
  const QuadratureResult area = map_area(f, opt);
  const double h0 = sharp_constant().h0;

  rep.length = len.value;
  rep.length_error = len.error;
  rep.area = area.value;
  rep.area_error = area.error;
  rep.bound_value = h0 * len.value;
  rep.combined_error = area.error + h0 * len.error;
  finish_primary(rep);
  return rep;
}

InequalityReport check_good(const AnalyticMap& f, double tol) {
  require_tol(tol, "check_good");
  InequalityReport rep;
  rep.label = f.label;
  rep.bound_name = "cap_area";
  rep.sampling_margin = sampled_margin(f, true);

  const QuadratureOptions opt = options_for(tol);
  const QuadratureResult len = map_boundary_length(f, opt);
  if (!(len.value + len.error < 2.0 * kPi)) {
    std::ostringstream os;
    os << "check_good: map '" << f.label << "' has boundary length "
       << len.value << " not provably below 2*pi";
    throw PreconditionFail(os.str());
  }
  const QuadratureResult area = map_area(f, opt);

  rep.length = len.value;
  rep.length_error = len.error;
  rep.area = area.value;
  rep.area_error = area.error;
  rep.bound_value = cap_area_bound(len.value);
  const double ratio = len.value / (2.0 * kPi);
  const double slope = ratio / std::sqrt(std::max(1e-300, 1.0 - ratio * ratio));
  rep.combined_error = area.error + slope * len.error;
  finish_primary(rep);

  constexpr double kSqrt2Pi = 4.442882938158366;  // sqrt(2) * pi
  if (len.value >= kSqrt2Pi) {
    rep.has_secondary = true;
    rep.secondary_name = "four_length";
    rep.secondary_slack = 4.0 * len.value - (4.0 * kPi + area.value);
  }
  return rep;
}

namespace {

InequalityReport good2_from_values(const std::string& label, double area,
                                   double area_error, double length,
                                   double length_error) {
  constexpr double kSqrt2Pi = 4.442882938158366;  // sqrt(2) * pi
  if (!(length + length_error < kSqrt2Pi + 1e-12)) {
    std::ostringstream os;
    os << "check_good2: map '" << label << "' has boundary length " << length
       << " not provably below sqrt(2)*pi";
    throw PreconditionFail(os.str());
  }
  InequalityReport rep;
  rep.label = label;
  rep.bound_name = "h0_length_minus_4pi";
  rep.length = length;
  rep.length_error = length_error;
  rep.area = area;
  rep.area_error = area_error;

  const double h0 = sharp_constant().h0;
  rep.bound_value = h0 * length - 4.0 * kPi;
  rep.combined_error = area_error + h0 * length_error;
  finish_primary(rep);

  if (length >= kPi) {
    const double half =
        std::clamp(length / 2.0, kPi / 2.0, kPi / std::numbers::sqrt2);
    const double tau = invert_zeta0(half);
    rep.has_profile = true;
    rep.profile_bound = 4.0 * std::asin(tau) - 2.0 * tau * zeta0(tau);
    rep.profile_slack = rep.profile_bound - area;
  }
  return rep;
}

}  // namespace

InequalityReport check_good2(const AnalyticMap& f, double tol) {
  require_tol(tol, "check_good2");
  if (!f.value) throw DomainError("check_good2: map has no value function");

  // Precondition: f takes [-1, 1] monotonically onto [0, 1] (sampled).
  constexpr int kSegmentSamples = 201;
  constexpr double kEndpointTol = 0.05;
  constexpr double kImagTol = 1e-6;
  double prev = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kSegmentSamples; ++i) {
    const double x = -1.0 + 2.0 * static_cast<double>(i) /
                                static_cast<double>(kSegmentSamples - 1);
    const Complex w = f.value(Complex(x, 0.0));
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) ||
        std::abs(w.imag()) > kImagTol || w.real() < prev - 1e-12) {
      std::ostringstream os;
      os << "check_good2: map '" << f.label
         << "' does not take [-1, 1] monotonically into the real segment near x = "
         << x;
      throw PreconditionFail(os.str());
    }
    prev = w.real();
    if (i == 0 && std::abs(w) > kEndpointTol) {
      throw PreconditionFail("check_good2: map '" + f.label +
                             "' does not send -1 close to 0");
    }
    if (i == kSegmentSamples - 1 && std::abs(w - 1.0) > kEndpointTol) {
      throw PreconditionFail("check_good2: map '" + f.label +
                             "' does not send 1 close to 1");
    }
  }

  const QuadratureOptions opt = options_for(tol);
  const QuadratureResult len = map_boundary_length(f, opt);
  const QuadratureResult area = map_area(f, opt);
  return good2_from_values(f.label, area.value, area.error, len.value,
                           len.error);
}

InequalityReport check_good2_values(const std::string& label, double area,
                                    double length, double area_error,
                                    double length_error) {
  if (!std::isfinite(area) || !std::isfinite(length) || area < 0.0 ||
      length <= 0.0 || area_error < 0.0 || length_error < 0.0) {
    throw DomainError("check_good2_values: invalid area/length data");
  }
  return good2_from_values(label, area, area_error, length, length_error);
}

InequalityReport check_nofat_ledger(const std::vector<NoFatComponent>& components,
                                    bool fat, const std::string& label) {
  if (components.empty()) {
    throw DomainError("check_nofat_ledger: at least one component required");
  }
  double total_area = 0.0;
  double total_boundary = 0.0;
  double min_ray_slack = std::numeric_limits<double>::infinity();
  for (const NoFatComponent& c : components) {
    if (!std::isfinite(c.area) || !std::isfinite(c.boundary_length) ||
        !std::isfinite(c.ray_length) || c.area < 0.0 ||
        c.boundary_length <= 0.0 || c.ray_length < 0.0) {
      throw DomainError("check_nofat_ledger: invalid component data");
    }
    total_area += c.area;
    total_boundary += c.boundary_length;
    min_ray_slack = std::min(min_ray_slack, c.boundary_length - c.ray_length);
  }

  InequalityReport rep;
  rep.label = label;
  rep.area = total_area;
  rep.length = total_boundary;
  if (fat) {
    rep.bound_name = "h0_length_minus_4pi";
    rep.bound_value = sharp_constant().h0 * total_boundary - 4.0 * kPi;
  } else {
    rep.bound_name = "double_length";
    rep.bound_value = 2.0 * total_boundary;
  }
  finish_primary(rep);
  rep.has_secondary = true;
  rep.secondary_name = "ray_comparison";
  rep.secondary_slack = min_ray_slack;
  rep.holds = rep.holds && min_ray_slack > 0.0;
  rep.conclusive = true;
  return rep;
}

namespace {

std::vector<AnalyticMap> make_builtins() {
  std::vector<AnalyticMap> maps;
  auto add = [&maps](const std::string& label,
                     std::function<Complex(Complex)> value,
                     std::function<Complex(Complex)> derivative) {
    AnalyticMap f;
    f.label = label;
    f.value = std::move(value);
    f.derivative = std::move(derivative);
    maps.push_back(std::move(f));
  };
  add("identity", [](const Complex& z) { return z; },
      [](const Complex&) { return Complex(1.0, 0.0); });
  add("shift3", [](const Complex& z) { return z + 3.0; },
      [](const Complex&) { return Complex(1.0, 0.0); });
  add("halfexp2", [](const Complex& z) { return 0.5 * std::exp(z) + 2.0; },
      [](const Complex& z) { return 0.5 * std::exp(z); });
  add("capshift3", [](const Complex& z) { return 0.5 * z + 3.0; },
      [](const Complex&) { return Complex(0.5, 0.0); });
  add("quad5", [](const Complex& z) { return 0.25 * z * z + 5.0; },
      [](const Complex& z) { return 0.5 * z; });
  add("sin4", [](const Complex& z) { return 0.5 * std::sin(z) + 4.0; },
      [](const Complex& z) { return 0.5 * std::cos(z); });
  add("wind3",
      [](const Complex& z) { return Complex(0.0, 3.0) + Complex(2.0, 1.0) * z * z * z; },
      [](const Complex& z) { return Complex(6.0, 3.0) * z * z; });
  add("halfdisk98", [](const Complex& z) { return 0.49 * z + 0.5; },
      [](const Complex&) { return Complex(0.49, 0.0); });
  add("eqcap", [](const Complex& z) { return 1.05 * z - 1.1; },
      [](const Complex&) { return Complex(1.05, 0.0); });
  return maps;
}

}  // namespace

const std::vector<AnalyticMap>& builtin_maps() {
  static const std::vector<AnalyticMap> maps = make_builtins();
  return maps;
}

const AnalyticMap* find_builtin(const std::string& name) {
  for (const AnalyticMap& f : builtin_maps()) {
    if (f.label == name) return &f;
  }
  return nullptr;
}

AnalyticMap map_from_spec(const nlohmann::json& spec) {
  try {
    if (!spec.is_object() || !spec.contains("kind")) {
      throw DomainError("map_from_spec: spec must be an object with a 'kind'");
    }
    const std::string kind = spec.at("kind").get<std::string>();
    if (kind == "builtin") {
      const std::string name = spec.at("name").get<std::string>();
      const AnalyticMap* f = find_builtin(name);
      if (f == nullptr) {
        throw DomainError("map_from_spec: unknown builtin map '" + name + "'");
      }
      return *f;
    }
    if (kind == "polynomial") {
      const nlohmann::json& raw = spec.at("coeffs");
      if (!raw.is_array() || raw.empty()) {
        throw DomainError("map_from_spec: 'coeffs' must be a non-empty array");
      }
      std::vector<Complex> coeffs;
      coeffs.reserve(raw.size());
      for (const nlohmann::json& c : raw) {
        if (c.is_number()) {
          coeffs.emplace_back(c.get<double>(), 0.0);
        } else if (c.is_array() && c.size() == 2 && c[0].is_number() &&
                   c[1].is_number()) {
          coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
        } else if (c.is_object() && c.contains("re") && c.contains("im")) {
          coeffs.emplace_back(c.at("re").get<double>(), c.at("im").get<double>());
        } else {
          throw DomainError(
              "map_from_spec: coefficients must be numbers, [re, im] pairs, or "
              "{re, im} objects");
        }
      }
      const std::string label =
          spec.contains("label") ? spec.at("label").get<std::string>()
                                 : std::string("polynomial");
      return AnalyticMap::polynomial(coeffs, label);
    }
    throw DomainError("map_from_spec: unknown kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("map_from_spec: malformed spec: ") + e.what());
  }
}

}  // namespace sphereratio
