#include "tebeam/config.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tebeam {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const char* where, std::initializer_list<const char*> keys) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : keys) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError(std::string("unknown key '") + item.key() + "' in " + where);
    }
  }
}

double get_number(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  return obj[key].get<double>();
}

int get_int(const json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number_integer()) {
    throw ConfigError(std::string("'") + key + "' must be an integer");
  }
  return obj[key].get<int>();
}

FieldSpec parse_field(const json& obj, const char* where, const FieldSpec& fallback) {
  if (obj.is_null()) return fallback;
  if (!obj.is_object()) throw ConfigError(std::string(where) + " must be an object");
  reject_unknown(obj, where, {"preset", "coeffs"});
  FieldSpec f;
  f.preset = obj.contains("preset") ? obj["preset"].get<std::string>() : fallback.preset;
  if (obj.contains("coeffs")) {
    if (!obj["coeffs"].is_array()) throw ConfigError(std::string(where) + ".coeffs must be an array");
    for (const auto& c : obj["coeffs"]) {
      if (!c.is_number()) throw ConfigError(std::string(where) + ".coeffs must hold numbers");
      f.coeffs.push_back(c.get<double>());
    }
  } else {
    f.coeffs = fallback.coeffs;
  }
  return f;
}

json field_to_json(const FieldSpec& f) {
  return json{{"preset", f.preset}, {"coeffs", f.coeffs}};
}

}  // namespace

RunConfig RunConfig::defaults() {
  RunConfig cfg;
  cfg.initial.displacement = {"poly-clamped", {1.0, 1.0}};
  cfg.initial.velocity = {"zero", {}};
  cfg.initial.temperature = {"sine-bump", {1.0}};
  return cfg;
}

RunConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be a JSON object");
  reject_unknown(root, "config",
                 {"params", "mesh", "bc_mode", "initial", "time", "scan", "output_dir"});

  RunConfig cfg = RunConfig::defaults();

  if (root.contains("params")) {
    const json& p = root["params"];
    if (!p.is_object()) throw ConfigError("'params' must be an object");
    reject_unknown(p, "params",
                   {"rho1", "rho2", "alpha1", "alpha2", "beta1", "beta2", "rho0", "kappa", "gamma",
                    "L0", "L"});
    cfg.params.rho1 = get_number(p, "rho1", cfg.params.rho1);
    cfg.params.rho2 = get_number(p, "rho2", cfg.params.rho2);
    cfg.params.alpha1 = get_number(p, "alpha1", cfg.params.alpha1);
    cfg.params.alpha2 = get_number(p, "alpha2", cfg.params.alpha2);
    cfg.params.beta1 = get_number(p, "beta1", cfg.params.beta1);
    cfg.params.beta2 = get_number(p, "beta2", cfg.params.beta2);
    cfg.params.rho0 = get_number(p, "rho0", cfg.params.rho0);
    cfg.params.kappa = get_number(p, "kappa", cfg.params.kappa);
    cfg.params.gamma = get_number(p, "gamma", cfg.params.gamma);
    cfg.params.L0 = get_number(p, "L0", cfg.params.L0);
    cfg.params.L = get_number(p, "L", cfg.params.L);
  }

  if (root.contains("mesh")) {
    const json& m = root["mesh"];
    if (!m.is_object()) throw ConfigError("'mesh' must be an object");
    reject_unknown(m, "mesh", {"n1", "n2"});
    cfg.n1 = get_int(m, "n1", cfg.n1);
    cfg.n2 = get_int(m, "n2", cfg.n2);
  }

  if (root.contains("bc_mode")) {
    const std::string mode = root["bc_mode"].get<std::string>();
    if (mode == "clamped") {
      cfg.bc = BcMode::Clamped;
    } else if (mode == "pinned") {
      cfg.bc = BcMode::Pinned;
    } else {
      throw ConfigError("bc_mode must be 'clamped' or 'pinned'");
    }
  }

  if (root.contains("initial")) {
    const json& ini = root["initial"];
    if (!ini.is_object()) throw ConfigError("'initial' must be an object");
    reject_unknown(ini, "initial", {"displacement", "velocity", "temperature"});
    if (ini.contains("displacement")) {
      cfg.initial.displacement =
          parse_field(ini["displacement"], "initial.displacement", cfg.initial.displacement);
    }
    if (ini.contains("velocity")) {
      cfg.initial.velocity = parse_field(ini["velocity"], "initial.velocity", cfg.initial.velocity);
    }
    if (ini.contains("temperature")) {
      cfg.initial.temperature =
          parse_field(ini["temperature"], "initial.temperature", cfg.initial.temperature);
    }
  }

  if (root.contains("time")) {
    const json& t = root["time"];
    if (!t.is_object()) throw ConfigError("'time' must be an object");
    reject_unknown(t, "time", {"dt", "T", "sample_every"});
    cfg.time.dt = get_number(t, "dt", cfg.time.dt);
    cfg.time.horizon = get_number(t, "T", cfg.time.horizon);
    cfg.time.sample_every = get_int(t, "sample_every", cfg.time.sample_every);
  }

  if (root.contains("scan")) {
    const json& s = root["scan"];
    if (!s.is_object()) throw ConfigError("'scan' must be an object");
    reject_unknown(s, "scan", {"lambda_min", "lambda_max", "points", "ell"});
    cfg.scan.lambda_min = get_number(s, "lambda_min", cfg.scan.lambda_min);
    cfg.scan.lambda_max = get_number(s, "lambda_max", cfg.scan.lambda_max);
    cfg.scan.points = get_int(s, "points", cfg.scan.points);
    if (s.contains("ell")) {
      const int ell = get_int(s, "ell", 1);
      if (ell != 1 && ell != 2) throw ConfigError("scan.ell must be 1 or 2");
      cfg.scan.ell = ell;
    }
  }

  if (root.contains("output_dir")) {
    if (!root["output_dir"].is_string()) throw ConfigError("'output_dir' must be a string");
    cfg.output_dir = root["output_dir"].get<std::string>();
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string to_canonical_json(const RunConfig& cfg) {
  json root;
  root["params"] = {{"rho1", cfg.params.rho1},     {"rho2", cfg.params.rho2},
                    {"alpha1", cfg.params.alpha1}, {"alpha2", cfg.params.alpha2},
                    {"beta1", cfg.params.beta1},   {"beta2", cfg.params.beta2},
                    {"rho0", cfg.params.rho0},     {"kappa", cfg.params.kappa},
                    {"gamma", cfg.params.gamma},   {"L0", cfg.params.L0},
                    {"L", cfg.params.L}};
  root["mesh"] = {{"n1", cfg.n1}, {"n2", cfg.n2}};
  root["bc_mode"] = cfg.bc == BcMode::Clamped ? "clamped" : "pinned";
  root["initial"] = {{"displacement", field_to_json(cfg.initial.displacement)},
                     {"velocity", field_to_json(cfg.initial.velocity)},
                     {"temperature", field_to_json(cfg.initial.temperature)}};
  root["time"] = {{"dt", cfg.time.dt}, {"T", cfg.time.horizon},
                  {"sample_every", cfg.time.sample_every}};
  root["scan"] = {{"lambda_min", cfg.scan.lambda_min},
                  {"lambda_max", cfg.scan.lambda_max},
                  {"points", cfg.scan.points}};
  if (cfg.scan.ell) root["scan"]["ell"] = *cfg.scan.ell;
  root["output_dir"] = cfg.output_dir;
  return root.dump();  // nlohmann objects iterate in sorted key order
}

std::string config_hash(const RunConfig& cfg) {
  const std::string canon = to_canonical_json(cfg);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : canon) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace tebeam
