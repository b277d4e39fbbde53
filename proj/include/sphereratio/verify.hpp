#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sphereratio/quadrature.hpp"

namespace sphereratio {

/// Outcome of one inequality check. The primary comparison is
///   area side  <=  bound_value,      slack = bound_value - area side,
/// and `holds` means the slack clears the combined quadrature error;
/// `conclusive` means the slack is larger in magnitude than that error, so
/// the verdict is not an artifact of quadrature uncertainty.
struct InequalityReport {
  std::string label;
  std::string bound_name;
  double area = 0.0;
  double length = 0.0;
  double area_error = 0.0;
  double length_error = 0.0;
  double bound_value = 0.0;
  double slack = 0.0;
  double combined_error = 0.0;
  bool holds = false;
  bool conclusive = false;
  /// Minimum sampled distance of the map's values to {0, 1, inf} (measured as
  /// min(|w|, |w-1|, 1/|w|)); negative when the check did not sample.
  double sampling_margin = -1.0;
  bool has_secondary = false;
  std::string secondary_name;
  double secondary_slack = 0.0;
  bool has_profile = false;
  double profile_bound = 0.0;  // lens profile bound on the area
  double profile_slack = 0.0;
  nlohmann::json to_json() const;
};

/// Minimum of min(|w|, |w-1|, 1/|w|) over a dense deterministic sample of the
/// closed disk (center, polar grid, 1e5 quasi-random interior points, and the
/// boundary circle).
double omitted_margin(const AnalyticMap& f);

/// Main bound A <= h0 L for maps omitting {0, 1, inf}. The omission
/// precondition is sampled; a sampled margin below 1e-9 raises
/// OmittedValueViolation.
InequalityReport check_main(const AnalyticMap& f, double tol = 1e-8);

/// Cap bound A <= 2 pi (1 - sqrt(1 - (L/2pi)^2)) for maps omitting {0,1,inf}
/// with short boundary; PreconditionFail unless the measured L is below 2 pi.
/// When L >= sqrt(2) pi the report also carries the companion bound
/// 4 pi + A < 4 L as a secondary slack.
InequalityReport check_good(const AnalyticMap& f, double tol = 1e-8);

/// Segment-pinned bound 4 pi + A <= h0 L for maps taking [-1, 1]
/// monotonically onto [0, 1] with boundary length below sqrt(2) pi (both
/// preconditions checked; PreconditionFail otherwise). When L >= pi the
/// report also carries the lens profile bound
///   A <= 4 arcsin(tau) - 2 tau zeta0(tau),  tau = zeta0^{-1}(L/2),
/// which is attained exactly on lens data. The profile is informational:
/// holds/conclusive follow the headline bound only, and a map pinning the
/// segment endpoints merely approximately can exceed the profile by an
/// amount of the order of the endpoint slack.
InequalityReport check_good2(const AnalyticMap& f, double tol = 1e-8);

/// check_good2 on externally supplied exact (area, length) data; no sampling
/// preconditions beyond the length bound.
InequalityReport check_good2_values(const std::string& label, double area,
                                    double length, double area_error = 0.0,
                                    double length_error = 0.0);

/// One component of a boundary ledger: its enclosed area, its boundary
/// length, and the portion of the boundary lying on the ray [0, +inf].
struct NoFatComponent {
  double area = 0.0;
  double boundary_length = 0.0;
  double ray_length = 0.0;
};

/// Ledger checks on per-component data: every component must have more
/// boundary off the ray than on it (secondary slack = the worst margin), and
/// the aggregate satisfies A < 2 L; with `fat` set, the stronger
/// A <= h0 L - 4 pi is asserted instead.
InequalityReport check_nofat_ledger(const std::vector<NoFatComponent>& components,
                                    bool fat, const std::string& label = "ledger");

/// Built-in test maps (the first entry, the identity, violates the omission
/// precondition by construction; all others avoid {0, 1, inf}).
const std::vector<AnalyticMap>& builtin_maps();
const AnalyticMap* find_builtin(const std::string& name);

/// Map described as JSON: {"kind":"builtin","name":...} or
/// {"kind":"polynomial","coeffs":[c0, c1, ...]} with real or [re, im]
/// coefficients. Throws DomainError on malformed specs.
AnalyticMap map_from_spec(const nlohmann::json& spec);

}  // namespace sphereratio
