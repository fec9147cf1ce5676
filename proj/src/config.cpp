#include "heatflux/config.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "heatflux/errors.hpp"
#include "heatflux/materials.hpp"

namespace heatflux {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (v.empty()) throw ConfigError("config: empty value for " + key);
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end != v.c_str() + v.size())
    throw ConfigError("config: malformed number for " + key + ": '" + v + "'");
  return x;
}

struct KeySlot {
  bool required = false;
  bool seen = false;
  double* number = nullptr;
  std::string* text = nullptr;
};

using Section = std::map<std::string, KeySlot>;

Section particle_section(DrudeLorentzParams& m, double& radius) {
  return {
      {"eps_inf", {true, false, &m.eps_inf, nullptr}},
      {"omega0_rad_s", {true, false, &m.omega0, nullptr}},
      {"omegap_rad_s", {true, false, &m.omegap, nullptr}},
      {"gamma_rad_s", {true, false, &m.gamma, nullptr}},
      {"radius_m", {true, false, &radius, nullptr}},
  };
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
  DrudeLorentzParams m1, m2;
  double r1 = 0.0, r2 = 0.0;
  RunConfig cfg;

  std::map<std::string, Section> sections;
  sections["particle1"] = particle_section(m1, r1);
  sections["particle2"] = particle_section(m2, r2);
  sections["pair"] = {
      {"distance_m", {true, false, &cfg.pair.d, nullptr}},
      {"temperature_K", {true, false, &cfg.pair.T1, nullptr}},
  };
  sections["quadrature"] = {
      {"rel_tol", {false, false, &cfg.quad.rel_tol, nullptr}},
      {"omega_max", {false, false, &cfg.quad.omega_max, nullptr}},
  };
  sections["output"] = {
      {"path", {false, false, nullptr, &cfg.output.path}},
      {"format", {false, false, nullptr, &cfg.output.format}},
  };

  std::istringstream in(text);
  std::string line;
  Section* current = nullptr;
  std::string current_name;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": malformed section header");
      current_name = trim(t.substr(1, t.size() - 2));
      auto it = sections.find(current_name);
      if (it == sections.end())
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": unknown section [" + current_name + "]");
      current = &it->second;
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key = value");
    if (current == nullptr)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": key outside any section");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    auto it = current->find(key);
    if (it == current->end())
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": unknown key '" + key + "' in [" + current_name + "]");
    KeySlot& slot = it->second;
    if (slot.seen)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": duplicate key '" + key + "'");
    slot.seen = true;
    if (slot.number != nullptr)
      *slot.number = parse_double(key, value);
    else
      *slot.text = value;
  }

  for (const auto& [sname, section] : sections)
    for (const auto& [key, slot] : section)
      if (slot.required && !slot.seen)
        throw ConfigError("config: missing required key '" + key + "' in [" +
                          sname + "]");

  cfg.pair.particle1 = Particle::make(m1, r1);
  cfg.pair.particle2 = Particle::make(m2, r2);
  validate_pair(cfg.pair);
  if (!(cfg.quad.rel_tol > 0.0) || cfg.quad.rel_tol > 1e-2)
    throw ConfigError("config: rel_tol must be in (0, 1e-2]");
  if (cfg.quad.omega_max < 0.0)
    throw ConfigError("config: omega_max must be >= 0");
  if (cfg.output.format != "csv" && cfg.output.format != "json")
    throw ConfigError("config: format must be csv or json");
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::vector<std::string> preset_names() {
  return {"sic-300k-nearfield", "sic-300k-farfield", "sic-30k-nearfield",
          "sic-30k-farfield"};
}

RunConfig preset_config(const std::string& name) {
  DrudeLorentzParams sic;
  sic.eps_inf = 6.7;
  sic.omega0 = 1.49e14;
  sic.omegap = 2.71e14;
  sic.gamma = 8.93e11;
  const double radius = 5e-9;

  RunConfig cfg;
  cfg.pair.particle1 = Particle::make(sic, radius);
  cfg.pair.particle2 = Particle::make(sic, radius);
  if (name == "sic-300k-nearfield") {
    cfg.pair.T1 = 300.0;
    cfg.pair.d = 1e-7;
  } else if (name == "sic-300k-farfield") {
    cfg.pair.T1 = 300.0;
    cfg.pair.d = 1e-3;
  } else if (name == "sic-30k-nearfield") {
    cfg.pair.T1 = 30.0;
    cfg.pair.d = 1e-7;
  } else if (name == "sic-30k-farfield") {
    cfg.pair.T1 = 30.0;
    cfg.pair.d = 1e-3;
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  validate_pair(cfg.pair);
  return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
  std::string out;
  const auto particle = [&](const char* name, const Particle& p) {
    out += std::string("[") + name + "]\n";
    out += "eps_inf = " + format_double(p.material.eps_inf) + "\n";
    out += "omega0_rad_s = " + format_double(p.material.omega0) + "\n";
    out += "omegap_rad_s = " + format_double(p.material.omegap) + "\n";
    out += "gamma_rad_s = " + format_double(p.material.gamma) + "\n";
    out += "radius_m = " + format_double(p.radius) + "\n";
  };
  particle("particle1", cfg.pair.particle1);
  particle("particle2", cfg.pair.particle2);
  out += "[pair]\n";
  out += "distance_m = " + format_double(cfg.pair.d) + "\n";
  out += "temperature_K = " + format_double(cfg.pair.T1) + "\n";
  out += "[quadrature]\n";
  out += "rel_tol = " + format_double(cfg.quad.rel_tol) + "\n";
  out += "omega_max = " + format_double(cfg.quad.omega_max) + "\n";
  out += "[output]\n";
  out += "path = " + cfg.output.path + "\n";
  out += "format = " + cfg.output.format + "\n";
  return out;
}

std::uint64_t config_hash(const RunConfig& cfg) {
  // The hash identifies the calculation so that data files can be matched to
  // the configuration that produced them. Output destination and format are
  // not part of that identity: the same sweep written to csv and json, or to
  // two different paths, must carry the same stamp.
  RunConfig keyed = cfg;
  keyed.output = OutputOptions{};
  const std::string s = serialize_config(keyed);
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace heatflux
