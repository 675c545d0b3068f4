// Copyright 2026 The symgauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symgauss/commands.hpp"

#include <cstdio>

#include "symgauss/kernels.hpp"
#include "symgauss/model_space.hpp"
#include "symgauss/rcop.hpp"
#include "symgauss/regularity.hpp"
#include "symgauss/rng.hpp"

namespace symgauss::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotConverged:
    case ErrorKind::DegenerateW:
      return kExitConvergence;
    case ErrorKind::InternalInconsistency:
      return kExitInconsistent;
    case ErrorKind::SamplingExhausted:
    case ErrorKind::SingularProjection:
      return kExitFailure;
    default:
      return kExitValidation;
  }
}

ModelInput ModelInput::load(const std::string& path) { return from_text(path, read_file(path)); }

ModelInput ModelInput::from_text(std::string path, std::string_view text) {
  return {std::move(path), fnv1a64_hex(text), parse_model(text)};
}

DataInput DataInput::load(const std::string& path) { return from_text(path, read_file(path)); }

DataInput DataInput::from_text(std::string path, std::string text) {
  std::string digest = fnv1a64_hex(text);
  return {std::move(path), std::move(digest), std::move(text)};
}

namespace {

Json base_report(std::string_view command, const ModelInput& model, const DataInput* data = nullptr) {
  Json r;
  r["tool"] = kToolName;
  r["version"] = kToolVersion;
  r["command"] = command;
  Json inputs;
  inputs["model"] = {{"path", model.path}, {"fnv1a64", model.digest}};
  if (data) inputs["data"] = {{"path", data->path}, {"fnv1a64", data->digest}};
  r["inputs"] = std::move(inputs);
  return r;
}

std::string edge_classes_string(const ColoredGraph& g) {
  return format_partition(g.edge_coloring(), g.graph().edge_labels());
}

std::string class_label(const ColoredGraph& g, ClassKind kind, int id) {
  const Partition& part = kind == ClassKind::Vertex ? g.vertex_coloring() : g.edge_coloring();
  const auto labels = kind == ClassKind::Vertex ? g.graph().vertices() : g.graph().edge_labels();
  std::string out = "{";
  const auto& block = part.block(static_cast<std::size_t>(id));
  for (std::size_t i = 0; i < block.size(); ++i) out += (i ? "," : "") + labels[static_cast<std::size_t>(block[i])];
  return out + "}";
}

Json coloring_json(const ColoredGraph& g) {
  return {{"vertex_classes", format_partition(g.vertex_coloring(), g.graph().vertices())},
          {"edge_classes", edge_classes_string(g)}};
}

Json witness_json(const Witness& w, const ColoredGraph& g, const Partition& tested) {
  Json j;
  const auto& v = g.graph().vertices();
  switch (w.kind) {
    case Witness::Kind::EdgeEndpoints:
      j["kind"] = "edge_endpoints";
      j["edge_class"] = class_label(g, ClassKind::Edge, w.edge_class);
      j["edges"] = {g.graph().edge_label(w.first), g.graph().edge_label(w.second)};
      break;
    case Witness::Kind::NeighborCount:
      j["kind"] = "neighbor_count";
      j["edge_class"] = class_label(g, ClassKind::Edge, w.edge_class);
      j["vertices"] = {v[w.first], v[w.second]};
      {
        std::string block = "{";
        const auto& members = tested.block(static_cast<std::size_t>(w.target_block));
        for (std::size_t i = 0; i < members.size(); ++i) block += (i ? "," : "") + v[members[i]];
        j["target_block"] = block + "}";
      }
      j["counts"] = {w.first_count, w.second_count};
      break;
    case Witness::Kind::NotFiner:
      j["kind"] = "not_finer";
      j["vertices"] = {v[w.first], v[w.second]};
      break;
  }
  j["description"] = describe(w, g, tested);
  return j;
}

Json witnesses_json(const std::vector<Witness>& ws, const ColoredGraph& g, const Partition& tested) {
  Json arr = Json::array();
  for (const auto& w : ws) arr.push_back(witness_json(w, g, tested));
  return arr;
}

Json vector_json(const Vector& v, const std::vector<std::string>& labels) {
  Json j;
  for (Eigen::Index i = 0; i < v.size(); ++i) j[labels[static_cast<std::size_t>(i)]] = v(i);
  return j;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json fit_json(const ModelFit& fit, const ColoredGraph& g) {
  const auto& vertices = g.graph().vertices();
  Json j;
  j["mean_partition"] = format_partition(fit.mean_partition, vertices);
  j["mean_dim"] = fit.mean_dim;
  j["mle_equals_ls"] = mean_mle_equals_ls(g, fit.mean_partition).holds;
  j["method"] = to_string(fit.method);
  j["mu_hat"] = vector_json(fit.mu_hat, vertices);
  Json vt = Json::array();
  for (std::size_t i = 0; i < fit.theta_hat.vertex_theta.size(); ++i)
    vt.push_back({{"class", class_label(g, ClassKind::Vertex, static_cast<int>(i))}, {"value", fit.theta_hat.vertex_theta[i]}});
  Json et = Json::array();
  for (std::size_t i = 0; i < fit.theta_hat.edge_theta.size(); ++i)
    et.push_back({{"class", class_label(g, ClassKind::Edge, static_cast<int>(i))}, {"value", fit.theta_hat.edge_theta[i]}});
  j["theta_hat"] = {{"vertex_classes", std::move(vt)}, {"edge_classes", std::move(et)}};
  j["k_hat"] = matrix_json(fit.k_hat.k);
  j["loglik"] = fit.loglik;
  j["n"] = fit.n;
  j["iterations"] = fit.iterations;
  j["converged"] = fit.converged;
  j["score_norm"] = fit.score_norm;
  return j;
}

Partition mean_or(const std::optional<std::string>& flag, const ModelSpec& spec, const ColoredGraph& g,
                  std::string_view fallback) {
  if (flag) return resolve_partition(*flag, g);
  if (spec.mean_partition) {
    try {
      return make_partition(g.graph().vertices(), *spec.mean_partition);
    } catch (const Error& e) {
      throw Error(ErrorKind::ValidationError, std::string("[mean_partition]: ") + e.what());
    }
  }
  if (fallback.empty()) throw Error(ErrorKind::ValidationError, "no mean partition: pass --mean or add [mean_partition]");
  return resolve_partition(fallback, g);
}

Json loglik_note() { return "log-likelihoods omit the -(n p / 2) log(2 pi) constant"; }

}  // namespace

CommandOutput cmd_check(const ModelInput& model, const std::optional<std::string>& mean) {
  const ColoredGraph g = build_colored_graph(model.spec);
  const Partition m = mean_or(mean, model.spec, g, "");
  const auto regular = regularity_report(g);
  const auto verdict = mean_mle_equals_ls(g, m);
  Json r = base_report("check", model);
  if (mean) r["args"] = {{"mean", *mean}};
  Json res = coloring_json(g);
  res["mean_partition"] = format_partition(m, g.graph().vertices());
  res["edge_regular"] = regular.edge_regular;
  res["vertex_regular"] = regular.vertex_regular;
  res["coloring_witnesses"] = witnesses_json(regular.witnesses, g, g.vertex_coloring());
  res["mean_finer_than_vertex_coloring"] = verdict.finer_ok;
  res["mean_vertex_regular"] = verdict.vertex_regular_ok;
  res["mle_equals_ls"] = verdict.holds;
  res["mean_witnesses"] = witnesses_json(verdict.witnesses, g, m);
  r["result"] = std::move(res);
  return {std::move(r), kExitOk};
}

CommandOutput cmd_refine(const ModelInput& model) {
  const ColoredGraph g = build_colored_graph(model.spec);
  const Partition refined = coarsest_regular_refinement(g);
  Json r = base_report("refine", model);
  Json res = coloring_json(g);
  res["refinement"] = format_partition(refined, g.graph().vertices());
  res["refinement_blocks"] = refined.num_blocks();
  res["equals_vertex_coloring"] = refined == g.vertex_coloring();
  if (g.num_vertices() <= kDefaultEnumerationLimit) {
    const auto valid = enumerate_valid_partitions(g);
    res["enumeration"] = "exhaustive";
    res["valid_partition_count"] = valid.size();
  } else {
    res["enumeration"] = "skipped";
  }
  r["result"] = std::move(res);
  return {std::move(r), kExitOk};
}

CommandOutput cmd_orbits(const ModelInput& model) {
  if (!model.spec.generators) throw Error(ErrorKind::ValidationError, "the model has no [generators] section");
  const ColoredGraph g = build_colored_graph(model.spec);
  Json r = base_report("orbits", model);
  Json res;
  Json gens = Json::array();
  for (const auto& sigma : *model.spec.generators) gens.push_back(sigma.to_cycle_string(model.spec.vertices));
  res["generators"] = std::move(gens);
  res.update(coloring_json(g));
  const auto regular = regularity_report(g);
  res["edge_regular"] = regular.edge_regular;
  res["vertex_regular"] = regular.vertex_regular;
  res["coloring_witnesses"] = witnesses_json(regular.witnesses, g, g.vertex_coloring());
  r["result"] = std::move(res);
  // An orbit coloring that fails either check is a defect in this tool.
  const int code = regular.edge_regular && regular.vertex_regular ? kExitOk : kExitInconsistent;
  return {std::move(r), code};
}

CommandOutput cmd_fit(const ModelInput& model, const DataInput& data, const std::optional<std::string>& mean,
                      const FitOptions& opts) {
  const ColoredGraph g = build_colored_graph(model.spec);
  const Partition m = mean_or(mean, model.spec, g, "singletons");
  const Dataset d = parse_csv(data.text, g.graph().vertices());
  const ModelFit fit = fit_model(d, g, m, opts);
  Json r = base_report("fit", model, &data);
  if (mean) r["args"] = {{"mean", *mean}};
  r["note"] = loglik_note();
  Json res = coloring_json(g);
  res.update(fit_json(fit, g));
  r["result"] = std::move(res);
  return {std::move(r), fit.converged ? kExitOk : kExitConvergence};
}

CommandOutput cmd_lrt(const ModelInput& model, const DataInput& data, const std::optional<std::string>& null_mean,
                      const std::optional<std::string>& alt_mean, const FitOptions& opts) {
  const ColoredGraph g = build_colored_graph(model.spec);
  const Partition null_m = mean_or(null_mean, model.spec, g, "classes");
  const Partition alt_m = resolve_partition(alt_mean.value_or("singletons"), g);
  const Dataset d = parse_csv(data.text, g.graph().vertices());
  const ModelFit null_fit = fit_model(d, g, null_m, opts);
  const ModelFit alt_fit = fit_model(d, g, alt_m, opts);
  const LrtResult lrt = lr_test(null_fit, alt_fit);
  Json r = base_report("lrt", model, &data);
  Json args;
  if (null_mean) args["null"] = *null_mean;
  if (alt_mean) args["alt"] = *alt_mean;
  if (!args.empty()) r["args"] = std::move(args);
  r["note"] = loglik_note();
  Json res = coloring_json(g);
  res["null"] = fit_json(null_fit, g);
  res["alt"] = fit_json(alt_fit, g);
  res["lrt"] = {{"statistic", lrt.statistic},
                {"df", lrt.df},
                {"p_value", lrt.p_value},
                {"reference", "asymptotic chi-square"}};
  r["result"] = std::move(res);
  const bool converged = null_fit.converged && alt_fit.converged;
  return {std::move(r), converged ? kExitOk : kExitConvergence};
}

CommandOutput cmd_oracle(const ModelInput& model, const std::optional<std::string>& mean, int samples,
                         std::uint64_t seed) {
  const ColoredGraph g = build_colored_graph(model.spec);
  const Partition m = mean_or(mean, model.spec, g, "");
  const auto check = kruskal_invariance_check(g, m, samples, seed);
  const auto verdict = mean_mle_equals_ls(g, m);
  Json r = base_report("oracle", model);
  Json args = {{"samples", samples}, {"seed", seed}};
  if (mean) args["mean"] = *mean;
  r["args"] = std::move(args);
  r["rng"] = {{"algorithm", kRngAlgorithm}, {"seed", seed}};
  Json res;
  res["mean_partition"] = format_partition(m, g.graph().vertices());
  res["sampled_rcon"] = check.sampled_rcon;
  res["sampled_rcor"] = check.sampled_rcor;
  res["sampled_verdict"] = check.sampled();
  res["generator_verdict"] = check.generators;
  res["combinatorial_verdict"] = verdict.holds;
  const bool consistent = check.sampled() == check.generators && check.generators == verdict.holds;
  res["consistent"] = consistent;
  r["result"] = std::move(res);
  if (!consistent) {
    r["error"] = {{"kind", to_string(ErrorKind::InternalInconsistency)},
                  {"message", "numerical and combinatorial verdicts disagree"}};
    return {std::move(r), kExitInconsistent};
  }
  return {std::move(r), kExitOk};
}

CommandOutput guarded(std::string_view command, const std::function<CommandOutput()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    Json r;
    r["tool"] = kToolName;
    r["version"] = kToolVersion;
    r["command"] = command;
    r["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    return {std::move(r), exit_code_for(e.kind())};
  }
}

std::string render_structured(const Json& report) { return report.dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool all_scalars(const Json& arr) {
  for (const auto& x : arr)
    if (x.is_structured()) return false;
  return true;
}

void render(const Json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Json& val = it.value();
    const std::string head = v.is_object() ? pad + it.key() + ":" : pad + "-";
    if (!val.is_structured()) {
      out += head + " " + scalar_text(val) + "\n";
    } else if (val.is_array() && all_scalars(val)) {
      std::string line;
      for (const auto& x : val) line += (line.empty() ? "" : ", ") + scalar_text(x);
      out += head + " [" + line + "]\n";
    } else if (val.empty()) {
      out += head + (val.is_array() ? " []" : " {}") + "\n";
    } else {
      out += head + "\n";
      render(val, indent + 2, out);
    }
  }
}

}  // namespace

std::string render_human(const Json& report) {
  std::string out;
  render(report, 0, out);
  return out;
}

}  // namespace symgauss::cli
