#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cntbuckle/assembly.hpp"
#include "cntbuckle/micromech.hpp"

namespace cntbuckle {

// Bad or missing configuration input; the CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class NormRef { Matrix, Effective };

std::string to_string(NormRef ref);

struct RunConfig {
  double length_a = 0.0;
  double plate_width_b = 0.0;
  double thickness = 0.0;
  IsotropicElastic matrix{1.0, 0.0};
  std::optional<HillModuli> cnt;
  double v_cn = 0.0;
  int n_strips = 8;
  int m_sections = 12;
  std::string bc_code = "SSSS";
  LoadState load{0.0, 1.0, 0.0};
  NormRef normalization = NormRef::Effective;
  std::string csv_path;   // empty = no file output
  std::string svg_path;
  std::string notes;
};

enum class SweepAxis { VCn, AspectRatio, BcCode, BOverH };

std::string to_string(SweepAxis axis);
SweepAxis sweep_axis_from_string(const std::string& s);

struct SweepSpec {
  SweepAxis axis = SweepAxis::AspectRatio;
  std::vector<double> values;           // numeric axes
  std::vector<std::string> bc_values;   // bc_code axis
  std::vector<double> curves_v_cn;      // aspect_ratio axis only; empty = base v_cn
  RunConfig base;
};

RunConfig parse_run_config(const std::string& json_text);
SweepSpec parse_sweep_spec(const std::string& json_text);

RunConfig load_run_config(const std::string& path);
SweepSpec load_sweep_spec(const std::string& path);

// True when the file holds a sweep specification (axis/values/base) rather
// than a single run.
bool is_sweep_file(const std::string& path);

}  // namespace cntbuckle
