#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cntbuckle/runner.hpp"

namespace {

using namespace cntbuckle;

void parse_mesh(const std::string& mesh, int& n_strips, int& m_sections) {
  const auto x = mesh.find('x');
  if (x == std::string::npos) {
    throw ConfigError("--mesh must look like <strips>x<sections>, e.g. 8x12");
  }
  try {
    n_strips = std::stoi(mesh.substr(0, x));
    m_sections = std::stoi(mesh.substr(x + 1));
  } catch (const std::exception&) {
    throw ConfigError("--mesh must look like <strips>x<sections>, e.g. 8x12");
  }
  if (n_strips < 2 || m_sections < 3) {
    throw ConfigError("--mesh needs at least 2 strips and 3 sections");
  }
}

void print_row(const ResultRow& row) {
  std::printf("%-22s bc=%s  a/b=%.4g  v_cn=%.4g  sigma_cr=%.8g GPa  lambda=%.6f  (%s ref, %.1f ms)\n",
              row.case_id.c_str(), row.bc_code.c_str(), row.length_a / row.plate_width_b,
              row.v_cn, row.sigma_cr, row.lambda, row.norm_ref.c_str(), row.runtime_ms);
}

int cmd_homogenize(const std::string& config_path) {
  const RunConfig cfg = load_run_config(config_path);
  const Homogenized hom = homogenize(cfg);
  std::printf("v_cn   = %.6g\n", cfg.cnt ? cfg.v_cn : 0.0);
  std::printf("E_eff  = %.10g GPa\n", hom.eff.E);
  std::printf("nu_eff = %.10g\n", hom.eff.nu);
  std::printf("K_eff  = %.10g GPa\n", hom.moduli.K);
  std::printf("G_eff  = %.10g GPa\n", hom.moduli.G);
  std::printf("Q (GPa): [[%.10g, %.10g, 0], [%.10g, %.10g, 0], [0, 0, %.10g]]\n", hom.q.q11,
              hom.q.q12, hom.q.q12, hom.q.q22, hom.q.q66);
  return 0;
}

int cmd_buckle(const std::string& config_path, const std::string& csv, const std::string& mesh) {
  RunConfig cfg = load_run_config(config_path);
  if (!csv.empty()) cfg.csv_path = csv;
  if (!mesh.empty()) parse_mesh(mesh, cfg.n_strips, cfg.m_sections);
  const ResultRow row = run_buckle(cfg, "buckle");
  print_row(row);
  if (!cfg.csv_path.empty()) {
    std::ofstream out(cfg.csv_path);
    if (!out) throw ConfigError("cannot open CSV output '" + cfg.csv_path + "'");
    write_csv({row}, out);
  }
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& axis,
              const std::vector<std::string>& values, const std::string& csv,
              const std::string& svg, const std::string& mesh) {
  SweepSpec spec;
  if (is_sweep_file(config_path)) {
    spec = load_sweep_spec(config_path);
  } else {
    if (axis.empty() || values.empty()) {
      throw ConfigError("plain run config given: sweep needs --axis and --values");
    }
    spec.base = load_run_config(config_path);
  }
  if (!axis.empty()) {
    spec.axis = sweep_axis_from_string(axis);
    spec.values.clear();
    spec.bc_values.clear();
  }
  if (!values.empty()) {
    spec.values.clear();
    spec.bc_values.clear();
    for (const auto& v : values) {
      if (spec.axis == SweepAxis::BcCode) {
        spec.bc_values.push_back(v);
      } else {
        try {
          spec.values.push_back(std::stod(v));
        } catch (const std::exception&) {
          throw ConfigError("--values entry '" + v + "' is not a number");
        }
      }
    }
  }
  if (spec.values.empty() && spec.bc_values.empty()) {
    throw ConfigError("sweep has no values");
  }
  if (!mesh.empty()) parse_mesh(mesh, spec.base.n_strips, spec.base.m_sections);

  const std::string csv_path = !csv.empty() ? csv : spec.base.csv_path;
  const std::string svg_path = !svg.empty() ? svg : spec.base.svg_path;
  const auto rows = run_sweep(spec, csv_path, svg_path);
  for (const auto& row : rows) print_row(row);
  if (!csv_path.empty()) std::printf("wrote %s\n", csv_path.c_str());
  if (!svg_path.empty()) std::printf("wrote %s\n", svg_path.c_str());
  return 0;
}

int cmd_validate(double tolerance, const std::string& mesh) {
  int n_strips = 8;
  int m_sections = 12;
  if (!mesh.empty()) parse_mesh(mesh, n_strips, m_sections);
  const ValidationReport report = validate_benchmarks(tolerance, n_strips, m_sections);
  std::printf("benchmark validation (mesh %dx%d):\n", n_strips, m_sections);
  for (const auto& e : report.entries) {
    std::printf("  %-4s  reference=%-7.6g computed=%-9.6g delta=%+.3f%%  tol=%.3g%%  %s\n",
                e.bc_code.c_str(), e.reference, e.computed,
                100.0 * (e.computed - e.reference) / e.reference, 100.0 * e.tolerance,
                e.pass ? "PASS" : "FAIL");
  }
  std::printf("%s\n", report.all_pass ? "all benchmarks passed" : "benchmark validation FAILED");
  return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical buckling loads of thin CNT-reinforced plates (spline finite strips)"};
  app.require_subcommand(1);

  std::string config_path;
  std::string csv;
  std::string svg;
  std::string mesh;
  std::string axis;
  std::vector<std::string> values;
  double tolerance = 0.0;

  auto* hom = app.add_subcommand("homogenize", "Print effective elastic constants for a config");
  hom->add_option("config", config_path, "JSON run config")->required();

  auto* buckle = app.add_subcommand("buckle", "Critical load for a single configuration");
  buckle->add_option("config", config_path, "JSON run config")->required();
  buckle->add_option("--csv", csv, "write the result row to this CSV file");
  buckle->add_option("--mesh", mesh, "override mesh, <strips>x<sections>");

  auto* sweep = app.add_subcommand("sweep", "Parametric sweep to CSV (and optional SVG chart)");
  sweep->add_option("config", config_path, "JSON sweep spec, or run config with --axis/--values")
      ->required();
  sweep->add_option("--axis", axis, "v_cn | aspect_ratio | bc_code | b_over_h");
  sweep->add_option("--values", values, "comma separated sweep values")->delimiter(',');
  sweep->add_option("--csv", csv, "CSV output path");
  sweep->add_option("--svg", svg, "SVG chart output path");
  sweep->add_option("--mesh", mesh, "override mesh, <strips>x<sections>");

  auto* validate = app.add_subcommand("validate", "Run the built-in square-plate benchmarks");
  validate->add_option("--tolerance", tolerance, "relative tolerance overriding the defaults");
  validate->add_option("--mesh", mesh, "override mesh, <strips>x<sections>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(hom)) return cmd_homogenize(config_path);
    if (app.got_subcommand(buckle)) return cmd_buckle(config_path, csv, mesh);
    if (app.got_subcommand(sweep)) return cmd_sweep(config_path, axis, values, csv, svg, mesh);
    return cmd_validate(tolerance, mesh);
  } catch (const cntbuckle::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
