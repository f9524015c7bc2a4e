#include "cntbuckle/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "cntbuckle/svg.hpp"

namespace cntbuckle {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string short_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Job {
  std::string case_id;
  RunConfig cfg;
};

}  // namespace

const char* const kCsvHeader =
    "case_id,length_a,plate_width_b,thickness,n_strips,m_sections,bc_code,v_cn,"
    "E_eff,nu_eff,sigma_cr,lambda,norm_ref,runtime_ms";

Homogenized homogenize(const RunConfig& cfg) {
  try {
    if (cfg.cnt) {
      const CompositeSpec spec(cfg.matrix, *cfg.cnt, cfg.v_cn);
      const auto [moduli, inter] = mori_tanaka_random(spec);
      (void)inter;
      const IsotropicElastic eff = effective_E_nu(moduli);
      return {eff, moduli, reduced_stiffness(eff, moduli.G)};
    }
    const BulkShear moduli = to_bulk_shear(cfg.matrix);
    return {cfg.matrix, moduli, reduced_stiffness(cfg.matrix, moduli.G)};
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("cnt/matrix: ") + e.what());
  }
}

std::string csv_row(const ResultRow& r) {
  std::string s;
  s += r.case_id;
  s += ',' + num(r.length_a) + ',' + num(r.plate_width_b) + ',' + num(r.thickness);
  s += ',' + std::to_string(r.n_strips) + ',' + std::to_string(r.m_sections);
  s += ',' + r.bc_code + ',' + num(r.v_cn);
  s += ',' + num(r.E_eff) + ',' + num(r.nu_eff);
  s += ',' + num(r.sigma_cr) + ',' + num(r.lambda) + ',' + r.norm_ref;
  char rt[32];
  std::snprintf(rt, sizeof(rt), "%.3f", r.runtime_ms);
  s += ',';
  s += rt;
  return s;
}

void write_csv(const std::vector<ResultRow>& rows, std::ostream& os) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) os << csv_row(r) << '\n';
}

ResultRow run_buckle(const RunConfig& cfg, const std::string& case_id) {
  const auto t0 = std::chrono::steady_clock::now();

  const Homogenized hom = homogenize(cfg);
  const IsotropicElastic& ref =
      cfg.normalization == NormRef::Matrix ? cfg.matrix : hom.eff;

  BucklingResult res;
  try {
    const PlateModel model(cfg.length_a, cfg.plate_width_b, cfg.thickness, hom.q,
                           cfg.n_strips, cfg.m_sections, cfg.bc_code, cfg.load);
    res = smallest_critical_load(assemble_global(model));
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("geometry/mesh: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("bc_code: ") + e.what());
  }
  res.lambda =
      normalized_factor(res.sigma_cr, ref.E, ref.nu, cfg.plate_width_b, cfg.thickness);

  const auto t1 = std::chrono::steady_clock::now();

  ResultRow row;
  row.case_id = case_id;
  row.length_a = cfg.length_a;
  row.plate_width_b = cfg.plate_width_b;
  row.thickness = cfg.thickness;
  row.n_strips = cfg.n_strips;
  row.m_sections = cfg.m_sections;
  row.bc_code = cfg.bc_code;
  row.v_cn = cfg.cnt ? cfg.v_cn : 0.0;
  row.E_eff = hom.eff.E;
  row.nu_eff = hom.eff.nu;
  row.sigma_cr = res.sigma_cr;
  row.lambda = res.lambda;
  row.norm_ref = to_string(cfg.normalization);
  row.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return row;
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec, const std::string& csv_path,
                                 const std::string& svg_path) {
  if (!svg_path.empty() && spec.axis == SweepAxis::BcCode) {
    throw ConfigError("svg output requires a numeric sweep axis");
  }

  std::vector<Job> jobs;
  switch (spec.axis) {
    case SweepAxis::VCn: {
      if (!spec.base.cnt) throw ConfigError("sweep over v_cn requires a cnt block");
      for (double v : spec.values) {
        Job j{"v_cn=" + short_num(v), spec.base};
        j.cfg.v_cn = v;
        jobs.push_back(std::move(j));
      }
      break;
    }
    case SweepAxis::AspectRatio: {
      std::vector<double> curves = spec.curves_v_cn;
      if (curves.empty()) {
        curves.push_back(spec.base.cnt ? spec.base.v_cn : 0.0);
      } else if (!spec.base.cnt) {
        throw ConfigError("'curves_v_cn' requires a cnt block in the base config");
      }
      for (double v : curves) {
        for (double r : spec.values) {
          Job j{"a_over_b=" + short_num(r), spec.base};
          if (spec.base.cnt) j.cfg.v_cn = v;
          j.cfg.length_a = r * spec.base.plate_width_b;
          jobs.push_back(std::move(j));
        }
      }
      break;
    }
    case SweepAxis::BcCode: {
      for (const auto& code : spec.bc_values) {
        Job j{"bc=" + code, spec.base};
        j.cfg.bc_code = code;
        jobs.push_back(std::move(j));
      }
      break;
    }
    case SweepAxis::BOverH: {
      for (double v : spec.values) {
        if (!(v > 0.0)) throw ConfigError("b_over_h values must be positive");
        Job j{"b_over_h=" + short_num(v), spec.base};
        j.cfg.thickness = spec.base.plate_width_b / v;
        jobs.push_back(std::move(j));
      }
      break;
    }
  }

  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv) throw ConfigError("cannot open CSV output '" + csv_path + "'");
    csv << kCsvHeader << '\n' << std::flush;
  }

  std::vector<ResultRow> rows;
  for (const auto& job : jobs) {
    try {
      ResultRow row = run_buckle(job.cfg, job.case_id);
      rows.push_back(row);
      if (csv.is_open()) csv << csv_row(row) << '\n' << std::flush;
    } catch (const std::exception& e) {
      if (csv.is_open()) csv << "# error " << job.case_id << ": " << e.what() << '\n' << std::flush;
      throw;
    }
  }

  if (!svg_path.empty()) {
    std::vector<SvgSeries> series;
    if (spec.axis == SweepAxis::AspectRatio) {
      std::map<double, SvgSeries> by_vcn;
      std::vector<double> order;
      for (const auto& r : rows) {
        if (by_vcn.find(r.v_cn) == by_vcn.end()) {
          by_vcn[r.v_cn] = SvgSeries{"v_cn=" + short_num(r.v_cn), {}};
          order.push_back(r.v_cn);
        }
        by_vcn[r.v_cn].points.push_back({r.length_a / r.plate_width_b, r.lambda});
      }
      for (double v : order) series.push_back(by_vcn[v]);
    } else {
      SvgSeries s{"lambda", {}};
      for (size_t i = 0; i < rows.size(); ++i) {
        s.points.push_back({spec.values[i], rows[i].lambda});
      }
      series.push_back(s);
    }
    write_line_chart_file(svg_path, "Critical buckling factor", to_string(spec.axis),
                          "lambda", series);
  }
  return rows;
}

ValidationReport validate_benchmarks(double tolerance, int n_strips, int m_sections) {
  struct Case {
    const char* code;
    double ref;
    double tol;
  };
  static const Case kCases[] = {
      {"SSSS", 4.000, 0.005},
      {"SCSC", 7.721, 0.01},
      {"SCSS", 5.979, 0.01},
      {"CCCC", 10.072, 0.01},
  };

  RunConfig cfg;
  cfg.length_a = 1.0;
  cfg.plate_width_b = 1.0;
  cfg.thickness = 0.01;
  cfg.matrix = IsotropicElastic(2.1, 0.34);
  cfg.n_strips = n_strips;
  cfg.m_sections = m_sections;
  cfg.load = LoadState(0.0, 1.0, 0.0);
  cfg.normalization = NormRef::Effective;

  ValidationReport report;
  report.all_pass = true;
  for (const Case& c : kCases) {
    cfg.bc_code = c.code;
    const ResultRow row = run_buckle(cfg, std::string("validate_") + c.code);
    BenchmarkEntry e;
    e.bc_code = c.code;
    e.reference = c.ref;
    e.computed = row.lambda;
    e.rel_err = std::abs(row.lambda - c.ref) / c.ref;
    e.tolerance = tolerance > 0.0 ? tolerance : c.tol;
    e.pass = e.rel_err <= e.tolerance;
    report.all_pass = report.all_pass && e.pass;
    report.entries.push_back(e);
  }
  return report;
}

}  // namespace cntbuckle
