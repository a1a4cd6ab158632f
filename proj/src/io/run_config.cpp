// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#include "phmor/io/run_config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "phmor/version.hpp"

namespace phmor::io {

using nlohmann::json;

namespace {

cd parse_complex(const json &j, const char *what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw ConfigError(std::string(what) +
                      ": complex values are [re, im] pairs");
  }
  return cd(j[0].get<double>(), j[1].get<double>());
}

std::vector<double> parse_broadcast(const json &j, std::size_t n,
                                    const char *what) {
  std::vector<double> out;
  if (j.is_number()) {
    out.assign(n, j.get<double>());
  } else if (j.is_array()) {
    out = j.get<std::vector<double>>();
    if (out.size() != n) {
      throw ConfigError(std::string(what) + ": expected " +
                        std::to_string(n) + " entries");
    }
  } else {
    throw ConfigError(std::string(what) + ": expected number or array");
  }
  return out;
}

GeneratorSpec parse_generator(const json &j) {
  GeneratorSpec g;
  g.type = j.at("type").get<std::string>();
  g.name = j.value("name", std::string("system"));
  if (g.type == "msd_chain") {
    g.n_masses = j.at("n_masses").get<std::size_t>();
    g.masses = parse_broadcast(j.value("masses", json(1.0)), g.n_masses,
                               "generator.masses");
    g.springs = parse_broadcast(j.value("springs", json(1.0)), g.n_masses,
                                "generator.springs");
    g.dampers = parse_broadcast(j.value("dampers", json(0.0)), g.n_masses,
                                "generator.dampers");
    if (j.contains("forced")) {
      g.forced = j.at("forced").get<std::vector<std::size_t>>();
    }
  } else if (g.type == "random") {
    g.n = j.at("n").get<std::size_t>();
    g.p = j.value("p", std::size_t{1});
    g.seed = j.value("seed", std::uint64_t{0});
  } else {
    throw ConfigError("generator.type must be msd_chain or random");
  }
  return g;
}

// 64-bit FNV-1a; stable across platforms and runs.
std::string fnv1a_hex(const std::string &s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::filesystem::path RunConfig::resolve(const std::string &rel) const {
  std::filesystem::path p(rel);
  return p.is_absolute() ? p : base_dir / p;
}

std::filesystem::path RunConfig::resolved_output_dir() const {
  return resolve(output_dir);
}

InterpolationSet RunConfig::interpolation_set(std::size_t p) const {
  if (points.empty()) {
    throw ConfigError("config: 'points' is required for this command");
  }
  if (!directions) {
    return InterpolationSet::canonical(points, p);
  }
  for (const Vec &u : *directions) {
    if (u.size() != p) {
      throw ConfigError(
          "config: each direction must have one entry per input channel (p = " +
          std::to_string(p) + ")");
    }
  }
  return InterpolationSet(points, *directions);
}

RunConfig load_run_config(const std::filesystem::path &path) {
  std::ifstream is(path);
  if (!is) {
    throw ConfigError("config: cannot open " + path.string());
  }
  json j;
  try {
    is >> j;
  } catch (const json::parse_error &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }

  RunConfig cfg;
  cfg.base_dir = std::filesystem::absolute(path).parent_path();

  if (j.contains("system")) {
    cfg.system = j.at("system").get<std::string>();
  }
  if (j.contains("points")) {
    for (const json &pj : j.at("points")) {
      cfg.points.push_back(parse_complex(pj, "points"));
    }
  }
  if (j.contains("directions")) {
    const json &dj = j.at("directions");
    if (dj.is_string()) {
      if (dj.get<std::string>() != "canonical") {
        throw ConfigError(
            "config: directions must be \"canonical\" or a list of vectors");
      }
    } else {
      std::vector<Vec> dirs;
      for (const json &uj : dj) {
        Vec u;
        for (const json &cj : uj) {
          u.push_back(parse_complex(cj, "directions"));
        }
        dirs.push_back(std::move(u));
      }
      cfg.directions = std::move(dirs);
    }
  }
  cfg.method = j.value("method", std::string("dissipative"));
  method_from_name(cfg.method);  // validates

  if (j.contains("sweep")) {
    const json &sj = j.at("sweep");
    cfg.sweep.omega_min = sj.value("omega_min", cfg.sweep.omega_min);
    cfg.sweep.omega_max = sj.value("omega_max", cfg.sweep.omega_max);
    cfg.sweep.points_per_decade =
        sj.value("points_per_decade", cfg.sweep.points_per_decade);
    if (!(cfg.sweep.omega_min > 0.0) ||
        !(cfg.sweep.omega_max > cfg.sweep.omega_min)) {
      throw ConfigError("config: sweep needs 0 < omega_min < omega_max");
    }
  }
  if (j.contains("simulate")) {
    const json &sj = j.at("simulate");
    cfg.simulate.dt = sj.value("dt", cfg.simulate.dt);
    cfg.simulate.steps = sj.value("steps", cfg.simulate.steps);
    if (!(cfg.simulate.dt > 0.0)) {
      throw ConfigError("config: simulate.dt must be positive");
    }
    if (sj.contains("input")) {
      const json &ij = sj.at("input");
      cfg.simulate.input_type = ij.value("type", cfg.simulate.input_type);
      cfg.simulate.amplitude = ij.value("amplitude", cfg.simulate.amplitude);
      cfg.simulate.omega = ij.value("omega", cfg.simulate.omega);
      cfg.simulate.t_on = ij.value("t_on", cfg.simulate.t_on);
      if (cfg.simulate.input_type != "zero" &&
          cfg.simulate.input_type != "step" &&
          cfg.simulate.input_type != "sine") {
        throw ConfigError("config: simulate.input.type must be zero, step "
                          "or sine");
      }
    }
    if (sj.contains("x0")) {
      for (const json &xj : sj.at("x0")) {
        cfg.simulate.x0.push_back(parse_complex(xj, "simulate.x0"));
      }
    }
  }
  if (j.contains("tolerances")) {
    const json &tj = j.at("tolerances");
    cfg.tolerances.tau_struct = tj.value("tau_struct", 0.0);
    cfg.tolerances.tau_symp = tj.value("tau_symp", cfg.tolerances.tau_symp);
    cfg.tolerances.interpolation =
        tj.value("interpolation", cfg.tolerances.interpolation);
    if (cfg.tolerances.tau_struct < 0.0 || cfg.tolerances.tau_symp <= 0.0 ||
        cfg.tolerances.interpolation <= 0.0) {
      throw ConfigError("config: tolerances must be positive");
    }
  }
  cfg.output_dir = j.value("output_dir", cfg.output_dir);
  if (j.contains("reduced")) {
    cfg.reduced = j.at("reduced").get<std::string>();
  }
  if (j.contains("generator")) {
    cfg.generator = parse_generator(j.at("generator"));
  }

  // Semantic hash: everything except output_dir. nlohmann objects serialize
  // with sorted keys, so key order in the file does not matter.
  json semantic = j;
  semantic.erase("output_dir");
  cfg.hash = fnv1a_hex(semantic.dump());
  return cfg;
}

void validate_parity(const RunConfig &cfg, std::size_t p) {
  if (cfg.method == "baseline") {
    return;
  }
  std::size_t m = cfg.points.size();
  if ((p + m) % 2 != 0) {
    std::ostringstream os;
    os << "config: p + M = " << p << " + " << m
       << " is odd; the symplectic reductions need an even total. Add or "
          "remove one interpolation point.";
    throw ConfigError(os.str());
  }
}

void write_manifest(const std::filesystem::path &output_dir,
                    const std::string &command, const RunConfig &cfg,
                    const std::vector<std::string> &outputs) {
  json j{{"tool", "phmor"},
         {"version", std::string(kVersion)},
         {"command", command},
         {"config_hash", cfg.hash},
         {"outputs", outputs}};
  std::ofstream os(output_dir / "manifest.json");
  if (!os) {
    throw ConfigError("manifest: cannot write into " + output_dir.string());
  }
  os << j.dump(2) << "\n";
}

}  // namespace phmor::io
