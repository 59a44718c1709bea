// Copyright 2026 The mdsteer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mdsteer/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "mdsteer/adversary.hpp"
#include "mdsteer/error.hpp"
#include "mdsteer/inequality.hpp"
#include "mdsteer/io.hpp"
#include "mdsteer/oracle.hpp"
#include "mdsteer/optimizer.hpp"
#include "mdsteer/steering.hpp"

namespace mdsteer {
namespace {

struct RunConfig {
  std::string input;
  std::string output;
  std::string format;
  std::optional<double> p;
  double p_min = 0.0;
  double p_max = 0.5;
  int steps = 11;
  std::string kind = "local";
  double delta = std::numbers::pi / 6;
  double gamma = 0.0;
  std::int64_t samples = 100000;
  std::uint64_t seed = 42;
  int restarts = 20;
  int grid = 12;
  bool full_sphere = false;
  bool orthogonal_bob = false;
  double theta = 0.0;
  double phi = 0.0;
  double bias_delta = 0.0;
};

/// Writes to --out when given, otherwise to stdout.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_text_file(cfg.output, text);
  }
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  Behavior behavior = behavior_from_json(read_json_file(cfg.input));
  behavior.validate();
  const double p = cfg.p.value_or(0.5);
  const CorrelatorVector c = correlators(behavior);
  const double value = md_operator(c, p);
  const double bound = local_bound(p);
  const NoSignallingReport ns = no_signalling_check(behavior);
  if (cfg.format == "csv") {
    emit(cfg, out,
         "p,I,bound,delta,chsh,no_signalling_deviation,no_signalling_pass\n" +
             format_number(p) + ',' + format_number(value) + ',' + format_number(bound) + ',' +
             format_number(value - bound) + ',' + format_number(chsh_value(c)) + ',' +
             format_number(ns.max_deviation) + ',' + (ns.pass ? "true" : "false") + "\n");
  } else {
    emit(cfg, out,
         json_text(Json{{"p", p},
                        {"I", value},
                        {"bound", bound},
                        {"delta", value - bound},
                        {"chsh", chsh_value(c)},
                        {"correlators", {c(0), c(1), c(2), c(3)}},
                        {"noSignalling", {{"maxDeviation", ns.max_deviation}, {"pass", ns.pass}}}}));
  }
  return kExitOk;
}

int cmd_curve(const RunConfig& cfg, std::ostream& out) {
  const CurveKind kind = parse_curve_kind(cfg.kind);
  const std::vector<double> grid =
      cfg.p ? std::vector<double>{*cfg.p} : linear_grid(cfg.p_min, cfg.p_max, cfg.steps);
  CurveParams params;
  params.delta = cfg.delta;
  params.gamma = cfg.gamma;
  params.optimizer.seed = cfg.seed;
  params.optimizer.restarts = cfg.restarts;
  params.optimizer.grid_density = cfg.grid;
  params.optimizer.full_sphere = cfg.full_sphere;
  params.optimizer.orthogonal_bob = cfg.orthogonal_bob;
  const auto points = curve(kind, grid, params);
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (const auto& pt : points) {
      Json row{{"p", pt.p}, {"value", pt.value}};
      if (pt.delta) row["delta"] = *pt.delta;
      if (pt.rate) row["r"] = *pt.rate;
      if (pt.argmax) row["theta"] = pt.argmax->theta;
      rows.push_back(row);
    }
    emit(cfg, out, json_text(Json{{"kind", curve_kind_name(kind)}, {"points", rows}}));
  } else {
    std::ostringstream os;
    write_curve_csv(os, kind, points);
    emit(cfg, out, os.str());
  }
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const SweepReport report = bound_sweep(cfg.p.value_or(0.5), cfg.samples, cfg.seed);
  emit(cfg, out, json_text(sweep_report_to_json(report)));
  return report.pass ? kExitOk : kExitViolation;
}

int cmd_adversary(const RunConfig& cfg, std::ostream& out) {
  const ConstraintReport report = constraint_report(BiasModel{cfg.theta, cfg.phi, cfg.bias_delta});
  if (cfg.format == "csv") {
    const auto& m = report.marginals;
    emit(cfg, out,
         "p_lambda1,p_lambda2,p_x1_lambda1,p_x1_lambda2,p_x1,p_x2,max_l,independent\n" +
             format_number(m.p_lambda(0)) + ',' + format_number(m.p_lambda(1)) + ',' +
             format_number(m.p_x_given_lambda(0, 0)) + ',' +
             format_number(m.p_x_given_lambda(1, 0)) + ',' + format_number(m.p_x1) + ',' +
             format_number(m.p_x2) + ',' + format_number(report.max_l) + ',' +
             (report.measurement_independent ? "true" : "false") + "\n");
  } else {
    emit(cfg, out, json_text(constraint_report_to_json(report)));
  }
  return kExitOk;
}

int cmd_model(const RunConfig& cfg, std::ostream& out) {
  const MdLhsModel model = model_from_json(read_json_file(cfg.input));
  const std::array<Direction, 2> bob{Direction::planar(0.0),
                                     Direction::planar(std::numbers::pi / 2)};
  const Assemblage assemblage = assemblage_from_mdlhs(model);
  assemblage.validate();
  const double residual = mdlhv_decomposition_check(model, bob);
  emit(cfg, out,
       json_text(Json{{"lambdas", model.lambda_count()},
                      {"residual", residual},
                      {"assemblageValid", true},
                      {"pass", residual <= 1e-12}}));
  return residual <= 1e-12 ? kExitOk : kExitDomain;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Measurement-dependent steering analysis", "mdsteer"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate a behavior file against the local bound");
  eval->add_option("--in", cfg.input, "Behavior JSON")->required();
  eval->add_option("--p", cfg.p, "Measurement dependence parameter")->default_str("0.5");
  eval->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
  eval->add_option("--out", cfg.output);

  auto* curve_cmd = app.add_subcommand("curve", "Emit figure data for a curve kind");
  curve_cmd->add_option("--kind", cfg.kind)
      ->check(CLI::IsMember({"local", "prbox", "quantum", "tilted", "randomness"}))
      ->capture_default_str();
  curve_cmd->add_option("--p", cfg.p, "Single p instead of a grid");
  curve_cmd->add_option("--p-min", cfg.p_min)->capture_default_str();
  curve_cmd->add_option("--p-max", cfg.p_max)->capture_default_str();
  curve_cmd->add_option("--steps", cfg.steps)->check(CLI::PositiveNumber)->capture_default_str();
  curve_cmd->add_option("--delta", cfg.delta, "Tilt angle for kind=tilted")->capture_default_str();
  curve_cmd->add_option("--gamma", cfg.gamma, "Angle for kind=randomness")->capture_default_str();
  curve_cmd->add_option("--seed", cfg.seed)->capture_default_str();
  curve_cmd->add_option("--restarts", cfg.restarts)->check(CLI::PositiveNumber)->capture_default_str();
  curve_cmd->add_option("--grid", cfg.grid)->check(CLI::PositiveNumber)->capture_default_str();
  curve_cmd->add_flag("--full-sphere", cfg.full_sphere);
  curve_cmd->add_flag("--orthogonal-bob", cfg.orthogonal_bob);
  curve_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
  curve_cmd->add_option("--out", cfg.output);

  auto* oracle = app.add_subcommand("oracle", "Sample hidden-variable strategies against the bound");
  oracle->add_option("--p", cfg.p)->default_str("0.5");
  oracle->add_option("--samples", cfg.samples)->check(CLI::PositiveNumber)->capture_default_str();
  oracle->add_option("--seed", cfg.seed)->capture_default_str();
  oracle->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));
  oracle->add_option("--out", cfg.output);

  auto* adversary = app.add_subcommand("adversary", "Report a two-value setting bias model");
  adversary->add_option("--theta", cfg.theta)->required();
  adversary->add_option("--phi", cfg.phi)->required();
  adversary->add_option("--delta", cfg.bias_delta)->required();
  adversary->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
  adversary->add_option("--out", cfg.output);

  auto* model = app.add_subcommand("model", "Check the hidden-variable decomposition of a model");
  model->add_option("--in", cfg.input, "MdLhsModel JSON")->required();
  model->add_option("--out", cfg.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitIo;
  }

  try {
    if (*eval) return cmd_eval(cfg, out);
    if (*curve_cmd) return cmd_curve(cfg, out);
    if (*oracle) return cmd_oracle(cfg, out);
    if (*adversary) return cmd_adversary(cfg, out);
    if (*model) return cmd_model(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitDomain;
  } catch (const DomainError& e) {
    err << "out of domain: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitIo;
}

}  // namespace mdsteer
