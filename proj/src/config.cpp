#include "msdiff/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "msdiff/errors.hpp"

namespace msdiff {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

void reject_unknown(const json& obj, const std::string& path,
                    const std::set<std::string>& known) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!known.contains(it.key())) {
      fail(path.empty() ? it.key() : path + "." + it.key(), "unknown field");
    }
  }
}

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

bool get_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<double> get_numbers(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(get_number(j[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

/// Scalar (broadcast to every entry) or a k x k nested array.
DenseMatrix get_matrix(const json& j, std::size_t k, const std::string& path) {
  if (j.is_number()) return uniform_matrix(k, j.get<double>());
  if (!j.is_array() || j.size() != k) {
    fail(path, "expected a number or a " + std::to_string(k) + "x" + std::to_string(k) +
                   " array");
  }
  DenseMatrix m(k);
  for (std::size_t r = 0; r < k; ++r) {
    const auto row = get_numbers(j[r], path + "[" + std::to_string(r) + "]");
    if (row.size() != k) fail(path + "[" + std::to_string(r) + "]", "wrong row length");
    for (std::size_t c = 0; c < k; ++c) m(r, c) = row[c];
  }
  return m;
}

void parse_mixture(const json& j, PhysicalMixture& mix) {
  const std::string path = "mixture";
  if (!j.is_object()) fail(path, "expected an object");
  reject_unknown(j, path,
                 {"species", "masses_amu", "binary_diffusivities_cm2s",
                  "intra_cross_section_norms", "gamma", "kappa", "temperature", "n_ref"});
  if (j.contains("masses_amu")) mix.masses_amu = get_numbers(j["masses_amu"], path + ".masses_amu");
  const std::size_t s = mix.masses_amu.size();
  if (j.contains("species")) {
    mix.species_names.clear();
    const auto& names = j["species"];
    if (!names.is_array()) fail(path + ".species", "expected an array of labels");
    for (std::size_t k = 0; k < names.size(); ++k) {
      mix.species_names.push_back(
          get_string(names[k], path + ".species[" + std::to_string(k) + "]"));
    }
  } else if (mix.species_names.size() != s) {
    mix.species_names.clear();
  }
  if (j.contains("binary_diffusivities_cm2s")) {
    mix.binary_diffusivities_cm2s =
        get_matrix(j["binary_diffusivities_cm2s"], s, path + ".binary_diffusivities_cm2s");
  }
  if (j.contains("intra_cross_section_norms")) {
    const auto& v = j["intra_cross_section_norms"];
    if (v.is_number()) {
      mix.intra_cross_section_norms.assign(s, v.get<double>());
    } else {
      mix.intra_cross_section_norms = get_numbers(v, path + ".intra_cross_section_norms");
    }
  }
  if (j.contains("gamma")) mix.gamma = get_matrix(j["gamma"], s, path + ".gamma");
  if (j.contains("kappa")) mix.kappa = get_number(j["kappa"], path + ".kappa");
  if (j.contains("temperature")) mix.temperature = get_number(j["temperature"], path + ".temperature");
  if (j.contains("n_ref")) mix.n_ref = get_number(j["n_ref"], path + ".n_ref");
}

InterfaceValue parse_interface(const json& j, const std::string& path) {
  const auto v = get_string(j, path);
  if (v == "average") return InterfaceValue::kAverage;
  if (v == "left") return InterfaceValue::kLeft;
  fail(path, "expected \"average\" or \"left\"");
}

InitialCondition parse_initial_condition(const json& j, const SimConfig& cfg) {
  const std::string path = "initial_condition";
  if (j.is_string()) {
    if (get_string(j, path) != "duncan-toor") fail(path, "unknown preset");
    return InitialCondition::duncan_toor(cfg.x_min, cfg.x_max);
  }
  if (!j.is_object()) fail(path, "expected a preset name or an object");
  reject_unknown(j, path, {"preset", "uniform", "segments", "interface_value"});
  InitialCondition ic;
  int forms = 0;
  if (j.contains("preset")) {
    ++forms;
    if (get_string(j["preset"], path + ".preset") != "duncan-toor") {
      fail(path + ".preset", "unknown preset");
    }
    ic = InitialCondition::duncan_toor(cfg.x_min, cfg.x_max);
  }
  if (j.contains("uniform")) {
    ++forms;
    const auto values = get_numbers(j["uniform"], path + ".uniform");
    ic = InitialCondition::uniform(values, cfg.x_min, cfg.x_max);
  }
  if (j.contains("segments")) {
    ++forms;
    const auto& all = j["segments"];
    if (!all.is_array()) fail(path + ".segments", "expected one array per species");
    for (std::size_t i = 0; i < all.size(); ++i) {
      const std::string sp = path + ".segments[" + std::to_string(i) + "]";
      if (!all[i].is_array()) fail(sp, "expected an array of segments");
      std::vector<Segment> segs;
      for (std::size_t k = 0; k < all[i].size(); ++k) {
        const std::string sk = sp + "[" + std::to_string(k) + "]";
        const auto& seg = all[i][k];
        if (!seg.is_object()) fail(sk, "expected {from, to, value}");
        reject_unknown(seg, sk, {"from", "to", "value"});
        for (const char* key : {"from", "to", "value"}) {
          if (!seg.contains(key)) fail(sk + "." + key, "missing");
        }
        segs.push_back({get_number(seg["from"], sk + ".from"), get_number(seg["to"], sk + ".to"),
                        get_number(seg["value"], sk + ".value")});
      }
      ic.species_segments.push_back(std::move(segs));
    }
  }
  if (forms != 1) fail(path, "exactly one of preset, uniform, segments is required");
  if (j.contains("interface_value")) {
    ic.interface_value = parse_interface(j["interface_value"], path + ".interface_value");
  }
  return ic;
}

}  // namespace

SimConfig preset_config(std::string_view name) {
  if (name != "duncan-toor") throw ConfigError("preset: unknown preset '" + std::string(name) + "'");
  SimConfig cfg;
  cfg.model = Model::kHoms;
  cfg.mixture = duncan_toor_mixture();
  cfg.x_min = 0.0;
  cfg.x_max = 1.0;
  cfg.dx = 0.05;
  cfg.dt = 2e-4;
  cfg.t_end = 2.0;
  cfg.snapshot_times = {0.0, 0.005, 0.01, 0.02, 0.0362, 0.08, 0.16, 0.32, 0.64, 1.28, 2.0};
  cfg.initial_condition = InitialCondition::duncan_toor(cfg.x_min, cfg.x_max);
  cfg.gamma_list = {0.1, 0.2, 0.3};
  cfg.compare_time = 0.0362;
  return cfg;
}

SimConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  reject_unknown(doc, "",
                 {"preset", "model", "mixture", "grid", "dt", "t_end", "snapshot_times",
                  "initial_condition", "gamma_override", "neglect_self_diffusion",
                  "initial_deviator", "singular_tol", "positivity_tol", "strict_cfl",
                  "output_dir", "gamma_list", "compare_time"});

  SimConfig cfg;
  bool has_ic = false;
  if (doc.contains("preset")) {
    cfg = preset_config(get_string(doc["preset"], "preset"));
    has_ic = true;
  }
  if (doc.contains("model")) {
    const auto m = get_string(doc["model"], "model");
    if (m == "ms") {
      cfg.model = Model::kMs;
    } else if (m == "homs") {
      cfg.model = Model::kHoms;
    } else {
      fail("model", "expected \"ms\" or \"homs\"");
    }
  }
  if (doc.contains("mixture")) parse_mixture(doc["mixture"], cfg.mixture);
  if (doc.contains("grid")) {
    const auto& g = doc["grid"];
    if (!g.is_object()) fail("grid", "expected an object");
    reject_unknown(g, "grid", {"x_min", "x_max", "dx"});
    if (g.contains("x_min")) cfg.x_min = get_number(g["x_min"], "grid.x_min");
    if (g.contains("x_max")) cfg.x_max = get_number(g["x_max"], "grid.x_max");
    if (g.contains("dx")) cfg.dx = get_number(g["dx"], "grid.dx");
  }
  if (doc.contains("dt")) cfg.dt = get_number(doc["dt"], "dt");
  if (doc.contains("t_end")) cfg.t_end = get_number(doc["t_end"], "t_end");
  if (doc.contains("snapshot_times")) {
    cfg.snapshot_times = get_numbers(doc["snapshot_times"], "snapshot_times");
  }
  if (doc.contains("initial_condition")) {
    cfg.initial_condition = parse_initial_condition(doc["initial_condition"], cfg);
    has_ic = true;
  } else if (has_ic && doc.contains("grid")) {
    cfg.initial_condition = InitialCondition::duncan_toor(cfg.x_min, cfg.x_max);
  }
  if (!has_ic) fail("initial_condition", "required when no preset is given");
  if (doc.contains("gamma_override")) {
    cfg.gamma_override =
        get_matrix(doc["gamma_override"], cfg.mixture.species_count(), "gamma_override");
  }
  if (doc.contains("neglect_self_diffusion")) {
    cfg.neglect_self_diffusion = get_bool(doc["neglect_self_diffusion"], "neglect_self_diffusion");
  }
  if (doc.contains("initial_deviator")) {
    const auto v = get_string(doc["initial_deviator"], "initial_deviator");
    if (v == "algebraic") {
      cfg.initial_deviator = InitialDeviator::kAlgebraic;
    } else if (v == "zero") {
      cfg.initial_deviator = InitialDeviator::kZero;
    } else {
      fail("initial_deviator", "expected \"algebraic\" or \"zero\"");
    }
  }
  if (doc.contains("singular_tol")) cfg.singular_tol = get_number(doc["singular_tol"], "singular_tol");
  if (doc.contains("positivity_tol")) {
    cfg.positivity_tol = get_number(doc["positivity_tol"], "positivity_tol");
  }
  if (doc.contains("strict_cfl")) cfg.strict_cfl = get_bool(doc["strict_cfl"], "strict_cfl");
  if (doc.contains("output_dir")) cfg.output_dir = get_string(doc["output_dir"], "output_dir");
  if (doc.contains("gamma_list")) cfg.gamma_list = get_numbers(doc["gamma_list"], "gamma_list");
  if (doc.contains("compare_time")) cfg.compare_time = get_number(doc["compare_time"], "compare_time");

  cfg.validate();
  return cfg;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace msdiff
