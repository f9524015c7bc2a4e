#include "cntbuckle/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace cntbuckle {

namespace {

using nlohmann::json;

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

void check_keys(const json& j, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) throw ConfigError("unknown key '" + join(path, key) + "'");
  }
}

const json& require(const json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError("missing key '" + join(path, key) + "'");
  return *it;
}

double get_num(const json& j, const std::string& path, const char* key) {
  const json& v = require(j, path, key);
  if (!v.is_number()) throw ConfigError("'" + join(path, key) + "' must be a number");
  return v.get<double>();
}

int get_int(const json& j, const std::string& path, const char* key) {
  const json& v = require(j, path, key);
  if (!v.is_number_integer()) {
    throw ConfigError("'" + join(path, key) + "' must be an integer");
  }
  return v.get<int>();
}

std::string get_str(const json& j, const std::string& path, const char* key) {
  const json& v = require(j, path, key);
  if (!v.is_string()) throw ConfigError("'" + join(path, key) + "' must be a string");
  return v.get<std::string>();
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

RunConfig run_config_from_json(const json& j, const std::string& path) {
  check_keys(j, path,
             {"notes", "geometry", "matrix", "cnt", "mesh", "bc_code", "load",
              "normalization", "output"});
  RunConfig cfg;

  if (j.contains("notes")) cfg.notes = get_str(j, path, "notes");

  const std::string gp = path.empty() ? "geometry" : path + ".geometry";
  const json& geo = require(j, path, "geometry");
  check_keys(geo, gp, {"length_a", "plate_width_b", "thickness"});
  cfg.length_a = get_num(geo, gp, "length_a");
  cfg.plate_width_b = get_num(geo, gp, "plate_width_b");
  cfg.thickness = get_num(geo, gp, "thickness");
  if (!(cfg.length_a > 0.0) || !(cfg.plate_width_b > 0.0) || !(cfg.thickness > 0.0)) {
    throw ConfigError("'" + gp + "': dimensions must be positive");
  }
  if (cfg.thickness / cfg.plate_width_b > 1.0 / 20.0 + 1e-12) {
    throw ConfigError("'" + gp + ".thickness': thickness/plate_width_b must not exceed 1/20");
  }

  const std::string mp = path.empty() ? "matrix" : path + ".matrix";
  const json& mat = require(j, path, "matrix");
  check_keys(mat, mp, {"E", "nu"});
  try {
    cfg.matrix = IsotropicElastic(get_num(mat, mp, "E"), get_num(mat, mp, "nu"));
  } catch (const std::domain_error& e) {
    throw ConfigError("'" + mp + "': " + e.what());
  }

  if (j.contains("cnt")) {
    const std::string cp = path.empty() ? "cnt" : path + ".cnt";
    const json& cnt = j.at("cnt");
    check_keys(cnt, cp, {"k", "l", "m", "n", "p", "v_cn"});
    try {
      cfg.cnt = HillModuli(get_num(cnt, cp, "k"), get_num(cnt, cp, "l"), get_num(cnt, cp, "m"),
                           get_num(cnt, cp, "n"), get_num(cnt, cp, "p"));
      cfg.v_cn = get_num(cnt, cp, "v_cn");
      CompositeSpec probe(cfg.matrix, *cfg.cnt, cfg.v_cn);
      (void)probe;
    } catch (const std::domain_error& e) {
      throw ConfigError("'" + cp + "': " + e.what());
    }
  }

  if (j.contains("mesh")) {
    const std::string sp = path.empty() ? "mesh" : path + ".mesh";
    const json& mesh = j.at("mesh");
    check_keys(mesh, sp, {"n_strips", "m_sections"});
    cfg.n_strips = get_int(mesh, sp, "n_strips");
    cfg.m_sections = get_int(mesh, sp, "m_sections");
    if (cfg.n_strips < 2) throw ConfigError("'" + sp + ".n_strips' must be at least 2");
    if (cfg.m_sections < 3) throw ConfigError("'" + sp + ".m_sections' must be at least 3");
  }

  cfg.bc_code = get_str(j, path, "bc_code");
  if (cfg.bc_code.size() != 4 || cfg.bc_code.find_first_not_of("SCF") != std::string::npos) {
    throw ConfigError("'" + (path.empty() ? std::string("bc_code") : path + ".bc_code") +
                      "' must be 4 letters over {S, C, F}");
  }

  if (j.contains("load")) {
    const std::string lp = path.empty() ? "load" : path + ".load";
    const json& load = j.at("load");
    check_keys(load, lp, {"sx0", "sy0", "sxy0"});
    try {
      cfg.load = LoadState(get_num(load, lp, "sx0"), get_num(load, lp, "sy0"),
                           get_num(load, lp, "sxy0"));
    } catch (const std::domain_error& e) {
      throw ConfigError("'" + lp + "': " + e.what());
    }
  }

  if (j.contains("normalization")) {
    const std::string n = get_str(j, path, "normalization");
    if (n == "matrix") {
      cfg.normalization = NormRef::Matrix;
    } else if (n == "effective") {
      cfg.normalization = NormRef::Effective;
    } else {
      throw ConfigError("'" + (path.empty() ? std::string("normalization")
                                            : path + ".normalization") +
                        "' must be \"matrix\" or \"effective\"");
    }
  }

  if (j.contains("output")) {
    const std::string op = path.empty() ? "output" : path + ".output";
    const json& out = j.at("output");
    check_keys(out, op, {"csv", "svg"});
    if (out.contains("csv")) cfg.csv_path = get_str(out, op, "csv");
    if (out.contains("svg")) cfg.svg_path = get_str(out, op, "svg");
  }

  return cfg;
}

SweepSpec sweep_spec_from_json(const json& j) {
  check_keys(j, "", {"notes", "axis", "values", "curves_v_cn", "base"});
  SweepSpec spec;
  spec.axis = sweep_axis_from_string(get_str(j, "", "axis"));

  const json& values = require(j, "", "values");
  if (!values.is_array() || values.empty()) {
    throw ConfigError("'values' must be a nonempty array");
  }
  for (const json& v : values) {
    if (spec.axis == SweepAxis::BcCode) {
      if (!v.is_string()) throw ConfigError("'values' entries must be strings for axis bc_code");
      spec.bc_values.push_back(v.get<std::string>());
    } else {
      if (!v.is_number()) throw ConfigError("'values' entries must be numbers");
      spec.values.push_back(v.get<double>());
    }
  }

  if (j.contains("curves_v_cn")) {
    if (spec.axis != SweepAxis::AspectRatio) {
      throw ConfigError("'curves_v_cn' applies only to axis aspect_ratio");
    }
    const json& curves = j.at("curves_v_cn");
    if (!curves.is_array() || curves.empty()) {
      throw ConfigError("'curves_v_cn' must be a nonempty array");
    }
    for (const json& v : curves) {
      if (!v.is_number()) throw ConfigError("'curves_v_cn' entries must be numbers");
      spec.curves_v_cn.push_back(v.get<double>());
    }
  }

  spec.base = run_config_from_json(require(j, "", "base"), "base");
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string to_string(NormRef ref) {
  return ref == NormRef::Matrix ? "matrix" : "effective";
}

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::VCn: return "v_cn";
    case SweepAxis::AspectRatio: return "aspect_ratio";
    case SweepAxis::BcCode: return "bc_code";
    default: return "b_over_h";
  }
}

SweepAxis sweep_axis_from_string(const std::string& s) {
  if (s == "v_cn") return SweepAxis::VCn;
  if (s == "aspect_ratio") return SweepAxis::AspectRatio;
  if (s == "bc_code") return SweepAxis::BcCode;
  if (s == "b_over_h") return SweepAxis::BOverH;
  throw ConfigError("'axis' must be one of v_cn, aspect_ratio, bc_code, b_over_h");
}

RunConfig parse_run_config(const std::string& json_text) {
  return run_config_from_json(parse_text(json_text), "");
}

SweepSpec parse_sweep_spec(const std::string& json_text) {
  return sweep_spec_from_json(parse_text(json_text));
}

RunConfig load_run_config(const std::string& path) {
  return parse_run_config(read_file(path));
}

SweepSpec load_sweep_spec(const std::string& path) {
  return parse_sweep_spec(read_file(path));
}

bool is_sweep_file(const std::string& path) {
  const json j = parse_text(read_file(path));
  return j.contains("axis") || j.contains("base");
}

}  // namespace cntbuckle
