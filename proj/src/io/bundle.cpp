// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#include "phmor/io/bundle.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "phmor/io/matrix_market.hpp"

namespace phmor::io {

using nlohmann::json;

namespace {

void write_json_file(const std::filesystem::path &path, const json &j) {
  std::ofstream os(path);
  if (!os) {
    throw ConfigError("bundle: cannot write " + path.string());
  }
  os << j.dump(2) << "\n";
}

json read_json_file(const std::filesystem::path &path) {
  std::ifstream is(path);
  if (!is) {
    throw ConfigError("bundle: cannot open " + path.string());
  }
  json j;
  try {
    is >> j;
  } catch (const json::parse_error &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return j;
}

void save_matrix(const std::filesystem::path &dir, const std::string &file,
                 const Mat &m, json &names, const std::string &key) {
  write_matrix_market(dir / file, m);
  names[key] = file;
}

}  // namespace

void save_ph_bundle(const std::filesystem::path &dir, const std::string &name,
                    const PHSystem &sys) {
  std::filesystem::create_directories(dir);
  json matrices;
  save_matrix(dir, "J.mtx", sys.j(), matrices, "J");
  save_matrix(dir, "R.mtx", sys.r(), matrices, "R");
  save_matrix(dir, "H.mtx", sys.h(), matrices, "H");
  save_matrix(dir, "B.mtx", sys.b(), matrices, "B");
  bool real = is_real(sys.j()) && is_real(sys.r()) && is_real(sys.h()) &&
              is_real(sys.b());
  json meta{{"name", name},
            {"kind", "ph"},
            {"n", sys.half_dim()},
            {"p", sys.inputs()},
            {"field", real ? "real" : "complex"},
            {"matrices", matrices}};
  write_json_file(dir / "bundle.json", meta);
}

void save_reduced_bundle(const std::filesystem::path &dir,
                         const std::string &name, const ReductionResult &res) {
  if (res.reduced_ph) {
    save_ph_bundle(dir, name, *res.reduced_ph);
    return;
  }
  if (!res.reduced_ss) {
    throw InvalidParameter("save_reduced_bundle: empty reduction result");
  }
  std::filesystem::create_directories(dir);
  const StateSpace &ss = *res.reduced_ss;
  json matrices;
  save_matrix(dir, "A.mtx", ss.a, matrices, "A");
  save_matrix(dir, "B.mtx", ss.b, matrices, "B");
  save_matrix(dir, "C.mtx", ss.c, matrices, "C");
  json meta{{"name", name},
            {"kind", "state_space"},
            {"dim", ss.dim()},
            {"p", ss.inputs()},
            {"field", "complex"},
            {"matrices", matrices}};
  if (res.cand_j && res.cand_r && res.cand_h) {
    json cand;
    save_matrix(dir, "cand_J.mtx", *res.cand_j, cand, "J");
    save_matrix(dir, "cand_R.mtx", *res.cand_r, cand, "R");
    save_matrix(dir, "cand_H.mtx", *res.cand_h, cand, "H");
    meta["ph_candidate"] = cand;
    meta["output_consistency"] = res.output_consistency;
  }
  write_json_file(dir / "bundle.json", meta);
}

LoadedBundle load_bundle(const std::filesystem::path &path) {
  std::filesystem::path meta_path = path;
  if (std::filesystem::is_directory(path)) {
    meta_path = path / "bundle.json";
  }
  json meta = read_json_file(meta_path);
  std::filesystem::path dir = meta_path.parent_path();

  LoadedBundle out;
  out.name = meta.value("name", "");
  out.kind = meta.value("kind", "ph");
  out.field = meta.value("field", "complex");
  const json &matrices = meta.at("matrices");

  auto load = [&](const json &names, const char *key) {
    return read_matrix_market(dir / names.at(key).get<std::string>());
  };

  if (out.kind == "ph") {
    Mat j = load(matrices, "J");
    Mat r = load(matrices, "R");
    Mat h = load(matrices, "H");
    Mat b = load(matrices, "B");
    if (meta.contains("n") &&
        meta.at("n").get<std::size_t>() * 2 != j.rows()) {
      throw ConfigError("bundle: metadata n does not match matrix dimension");
    }
    if (meta.contains("p") &&
        meta.at("p").get<std::size_t>() != b.cols()) {
      throw ConfigError("bundle: metadata p does not match B");
    }
    out.ph.emplace(std::move(j), std::move(r), std::move(h), std::move(b));
  } else if (out.kind == "state_space") {
    StateSpace ss;
    ss.a = load(matrices, "A");
    ss.b = load(matrices, "B");
    ss.c = load(matrices, "C");
    ss.d = Mat(ss.c.rows(), ss.b.cols());
    out.ss = std::move(ss);
    if (meta.contains("ph_candidate")) {
      const json &cand = meta.at("ph_candidate");
      out.cand_j = load(cand, "J");
      out.cand_r = load(cand, "R");
      out.cand_h = load(cand, "H");
    }
  } else {
    throw ConfigError("bundle: unknown kind '" + out.kind + "'");
  }
  return out;
}

std::string reduction_result_json(const ReductionResult &res) {
  json residuals = json::array();
  for (const PointResidual &r : res.residuals) {
    residuals.push_back(json{{"point", {r.point.real(), r.point.imag()}},
                             {"absolute", r.absolute},
                             {"relative", r.relative}});
  }
  json j{{"method", std::string(method_name(res.method))},
         {"reduced_dim", res.reduced_dim()},
         {"degraded", res.degraded},
         {"interpolation_tolerance", res.interpolation_tolerance},
         {"residuals", residuals},
         {"diagnostics",
          json{{"h_min", res.diag.h_min},
               {"r_min", res.diag.r_min},
               {"skew_residual", res.diag.skew_residual},
               {"pencil_rcond", res.diag.pencil_rcond},
               {"basis_residual", res.diag.basis_residual}}}};
  if (res.projector) {
    j["certificates"] =
        json{{"symplectic_residual", res.projector->cert.symplectic_residual},
             {"left_inverse_residual",
              res.projector->cert.left_inverse_residual},
             {"range_residual_max", res.projector->cert.range_residual_max},
             {"pencil_rcond", res.projector->cert.pencil_rcond}};
  }
  if (res.method == ReductionMethod::baseline && res.cand_h) {
    j["output_consistency"] = res.output_consistency;
  }
  return j.dump(2);
}

}  // namespace phmor::io
