#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphereratio/errors.hpp"
#include "sphereratio/extremal.hpp"
#include "sphereratio/isoperimetric.hpp"
#include "sphereratio/lens.hpp"
#include "sphereratio/polycurve.hpp"
#include "sphereratio/rng.hpp"
#include "sphereratio/sphere.hpp"
#include "sphereratio/verify.hpp"

namespace {

using namespace sphereratio;

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) row += ',';
    row += fields[i];
  }
  row += '\n';
  return row;
}

int write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return 2;
  }
  os << text;
  return os ? 0 : 2;
}

struct CommonOpts {
  std::string format;
  std::string output;
};

void add_common(CLI::App* sub, CommonOpts& opts, const std::string& default_format) {
  opts.format = default_format;
  sub->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--output", opts.output,
                  "Write output to this file instead of stdout");
}

int run_h0(double tol, const CommonOpts& opts) {
  const H0Result res = find_h0(tol);
  std::string text;
  if (opts.format == "json") {
    nlohmann::json j{
        {"tau0", res.tau0}, {"h0", res.h0}, {"iterations", res.iterations}};
    text = j.dump(2) + "\n";
  } else {
    text = csv_row({"tau0", "h0", "iterations"});
    text += csv_row({fmt(res.tau0), fmt(res.h0), std::to_string(res.iterations)});
  }
  return write_output(opts.output, text);
}

int run_h_table(int n, const CommonOpts& opts) {
  std::string text;
  nlohmann::json rows = nlohmann::json::array();
  if (opts.format == "csv") text = csv_row({"tau", "zeta0", "zeta1", "h"});
  for (int i = 0; i < n; ++i) {
    const double tau = static_cast<double>(i) / static_cast<double>(n - 1);
    const double z0 = zeta0(tau);
    const double z1 = zeta1(tau);
    const double ht = h(tau);
    if (opts.format == "csv") {
      text += csv_row({fmt(tau), fmt(z0), fmt(z1), fmt(ht)});
    } else {
      rows.push_back(nlohmann::json{
          {"tau", tau}, {"zeta0", z0}, {"zeta1", z1}, {"h", ht}});
    }
  }
  if (opts.format == "json") text = rows.dump(2) + "\n";
  return write_output(opts.output, text);
}

int run_extremal(const std::vector<long long>& ms, const CommonOpts& opts) {
  std::string text;
  nlohmann::json rows = nlohmann::json::array();
  if (opts.format == "csv") {
    text = csv_row({"m", "area", "length", "ratio", "deficit"});
  }
  for (long long m : ms) {
    const ExtremalFamily fam = extremal_family(static_cast<int>(m));
    if (opts.format == "csv") {
      text += csv_row({std::to_string(m), fmt(fam.area()), fmt(fam.length()),
                       fmt(fam.ratio()), fmt(fam.deficit())});
    } else {
      rows.push_back(nlohmann::json{{"m", m},
                                    {"area", fam.area()},
                                    {"length", fam.length()},
                                    {"ratio", fam.ratio()},
                                    {"deficit", fam.deficit()}});
    }
  }
  if (opts.format == "json") text = rows.dump(2) + "\n";
  return write_output(opts.output, text);
}

std::string report_text(const InequalityReport& rep, const std::string& format) {
  if (format == "json") return rep.to_json().dump(2) + "\n";
  std::string text = csv_row(
      {"label", "bound_name", "area", "length", "area_error", "length_error",
       "bound_value", "slack", "combined_error", "holds", "conclusive",
       "sampling_margin", "secondary_name", "secondary_slack", "profile_bound",
       "profile_slack"});
  text += csv_row(
      {rep.label, rep.bound_name, fmt(rep.area), fmt(rep.length),
       fmt(rep.area_error), fmt(rep.length_error), fmt(rep.bound_value),
       fmt(rep.slack), fmt(rep.combined_error), rep.holds ? "true" : "false",
       rep.conclusive ? "true" : "false",
       rep.sampling_margin >= 0.0 ? fmt(rep.sampling_margin) : std::string(),
       rep.has_secondary ? rep.secondary_name : std::string(),
       rep.has_secondary ? fmt(rep.secondary_slack) : std::string(),
       rep.has_profile ? fmt(rep.profile_bound) : std::string(),
       rep.has_profile ? fmt(rep.profile_slack) : std::string()});
  return text;
}

int run_verify(const std::string& map_name, const std::string& spec_path,
               const std::string& which, double tol, const CommonOpts& opts) {
  AnalyticMap map;
  if (!map_name.empty()) {
    const AnalyticMap* f = find_builtin(map_name);
    if (f == nullptr) {
      std::cerr << "error: unknown map '" << map_name << "'\n";
      return 2;
    }
    map = *f;
  } else {
    std::ifstream is(spec_path);
    if (!is) {
      std::cerr << "error: cannot read map spec file '" << spec_path << "'\n";
      return 2;
    }
    nlohmann::json spec;
    try {
      is >> spec;
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "error: malformed map spec: " << e.what() << "\n";
      return 2;
    }
    map = map_from_spec(spec);
  }

  InequalityReport rep;
  try {
    if (which == "main") {
      rep = check_main(map, tol);
    } else if (which == "good") {
      rep = check_good(map, tol);
    } else {
      rep = check_good2(map, tol);
    }
  } catch (const OmittedValueViolation& e) {
    nlohmann::json j{{"label", map.label},
                     {"error", "OmittedValueViolation"},
                     {"message", e.what()}};
    const int rc = write_output(opts.output, j.dump(2) + "\n");
    return rc == 0 ? 1 : rc;
  } catch (const PreconditionFail& e) {
    nlohmann::json j{{"label", map.label},
                     {"error", "PreconditionFail"},
                     {"message", e.what()}};
    const int rc = write_output(opts.output, j.dump(2) + "\n");
    return rc == 0 ? 1 : rc;
  }

  const int rc = write_output(opts.output, report_text(rep, opts.format));
  if (rc != 0) return rc;
  return (rep.holds && rep.conclusive) ? 0 : 1;
}

int run_rado(std::uint64_t seed, long long count, const CommonOpts& opts) {
  Rng rng(seed);
  const double budget = 2.0 * kPi - 0.01;
  double min_margin = std::numeric_limits<double>::infinity();
  long long positive = 0;
  for (long long i = 0; i < count; ++i) {
    const GeodesicPolygon poly = random_closed_polygon(rng, budget);
    const std::vector<Vec3> points = sample_edge_points(poly, 0.01);
    const EnclosingCap cap = smallest_enclosing_cap(points, seed);
    min_margin = std::min(min_margin, cap.margin);
    if (cap.margin > 0.0) ++positive;
  }
  const bool all_positive = positive == count;
  std::string text;
  if (opts.format == "json") {
    nlohmann::json j{{"seed", seed},
                     {"count", count},
                     {"min_margin", min_margin},
                     {"all_positive", all_positive}};
    text = j.dump(2) + "\n";
  } else {
    text = csv_row({"seed", "count", "min_margin", "all_positive"});
    text += csv_row({std::to_string(seed), std::to_string(count),
                     fmt(min_margin), all_positive ? "true" : "false"});
  }
  const int rc = write_output(opts.output, text);
  if (rc != 0) return rc;
  return all_positive ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical length-area toolkit for analytic disk maps"};
  app.require_subcommand(1);

  double h0_tol = 1e-8;
  CommonOpts h0_opts;
  CLI::App* h0_cmd = app.add_subcommand(
      "h0", "Locate the sharp length-area constant by scalar maximization");
  h0_cmd->add_option("--tol", h0_tol, "Bracket tolerance for the maximizer")
      ->check(CLI::PositiveNumber)
      ->envname("RATIO_TOL")
      ->capture_default_str();
  add_common(h0_cmd, h0_opts, "json");

  int table_n = 21;
  CommonOpts table_opts;
  CLI::App* table_cmd = app.add_subcommand(
      "h-table", "Tabulate zeta0, zeta1 and the ratio function h on [0, 1]");
  table_cmd->add_option("--n", table_n, "Number of grid rows (endpoints included)")
      ->check(CLI::Range(2, 100000000))
      ->capture_default_str();
  add_common(table_cmd, table_opts, "csv");

  std::vector<long long> extremal_ms{1, 10, 100, 10000};
  CommonOpts extremal_opts;
  CLI::App* extremal_cmd = app.add_subcommand(
      "extremal", "Area, length, ratio and deficit of the m-fold extremal family");
  extremal_cmd
      ->add_option("--m", extremal_ms, "Comma-separated list of fold counts")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(extremal_cmd, extremal_opts, "csv");

  std::string verify_map;
  std::string verify_spec;
  std::string verify_which = "main";
  double verify_tol = 1e-8;
  CommonOpts verify_opts;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check a length-area inequality for one analytic map");
  CLI::Option* map_opt =
      verify_cmd->add_option("--map", verify_map, "Name of a built-in map");
  CLI::Option* spec_opt =
      verify_cmd->add_option("--spec", verify_spec, "Path to a JSON map spec");
  map_opt->excludes(spec_opt);
  verify_cmd->add_option("--which", verify_which, "Which inequality to check")
      ->check(CLI::IsMember({"main", "good", "good2"}))
      ->capture_default_str();
  verify_cmd->add_option("--tol", verify_tol, "Quadrature tolerance")
      ->check(CLI::PositiveNumber)
      ->envname("RATIO_TOL")
      ->capture_default_str();
  add_common(verify_cmd, verify_opts, "json");

  std::uint64_t rado_seed = 0;
  long long rado_count = 100;
  CommonOpts rado_opts;
  CLI::App* rado_cmd = app.add_subcommand(
      "rado", "Hemisphere margins of seeded random short closed polygons");
  rado_cmd->add_option("--seed", rado_seed, "Random seed")->capture_default_str();
  rado_cmd->add_option("--count", rado_count, "Number of polygons")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(rado_cmd, rado_opts, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (h0_cmd->parsed()) return run_h0(h0_tol, h0_opts);
    if (table_cmd->parsed()) return run_h_table(table_n, table_opts);
    if (extremal_cmd->parsed()) return run_extremal(extremal_ms, extremal_opts);
    if (verify_cmd->parsed()) {
      if (verify_map.empty() == verify_spec.empty()) {
        std::cerr << "error: verify needs exactly one of --map or --spec\n";
        return 2;
      }
      return run_verify(verify_map, verify_spec, verify_which, verify_tol,
                        verify_opts);
    }
    if (rado_cmd->parsed()) return run_rado(rado_seed, rado_count, rado_opts);
  } catch (const ToleranceNotMet& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand selected\n";
  return 2;
}
