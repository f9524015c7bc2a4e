#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cntbuckle/buckling.hpp"
#include "cntbuckle/config.hpp"

namespace cntbuckle {

struct Homogenized {
  IsotropicElastic eff;
  BulkShear moduli;
  ReducedStiffness q;
};

// Effective constants and plane-stress stiffness for a run's material block.
Homogenized homogenize(const RunConfig& cfg);

struct ResultRow {
  std::string case_id;
  double length_a = 0.0;
  double plate_width_b = 0.0;
  double thickness = 0.0;
  int n_strips = 0;
  int m_sections = 0;
  std::string bc_code;
  double v_cn = 0.0;
  double E_eff = 0.0;
  double nu_eff = 0.0;
  double sigma_cr = 0.0;
  double lambda = 0.0;
  std::string norm_ref;
  double runtime_ms = 0.0;
};

extern const char* const kCsvHeader;

std::string csv_row(const ResultRow& row);
void write_csv(const std::vector<ResultRow>& rows, std::ostream& os);

// Full pipeline for one configuration: homogenize, assemble, solve, normalize.
ResultRow run_buckle(const RunConfig& cfg, const std::string& case_id);

// One row per sweep value (per curve for multi-curve aspect sweeps). Rows are
// streamed to csv_path as they finish; a failing row flushes the partial
// table with a trailing "# error" marker line and rethrows. The SVG (numeric
// axes only) is written after a fully successful sweep.
std::vector<ResultRow> run_sweep(const SweepSpec& spec, const std::string& csv_path,
                                 const std::string& svg_path);

struct BenchmarkEntry {
  std::string bc_code;
  double reference = 0.0;
  double computed = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<BenchmarkEntry> entries;
  bool all_pass = false;
};

// Reference buckling coefficients for a bare-matrix square plate (E=2.1 GPa,
// nu=0.34, b/h=100, uniaxial compression): SSSS 4.000 (0.5%), SCSC 7.721,
// SCSS 5.979, CCCC 10.072 (1% each). tolerance > 0 overrides all four.
ValidationReport validate_benchmarks(double tolerance = 0.0, int n_strips = 8,
                                     int m_sections = 12);

}  // namespace cntbuckle
