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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "symgauss/commands.hpp"

namespace cli = symgauss::cli;

int main(int argc, char** argv) {
  CLI::App app{"Graphical Gaussian models with symmetry constraints: mean estimability, fitting and tests"};
  app.require_subcommand(1);

  std::string model_path;
  std::string data_path;
  std::optional<std::string> mean;
  std::optional<std::string> null_mean;
  std::optional<std::string> alt_mean;
  int samples = 20;
  std::uint64_t seed = 1;
  std::string format = "human";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "structured"}));
  };
  auto add_model = [&](CLI::App* sub) { sub->add_option("--model", model_path, "Model file")->required(); };

  auto* check = app.add_subcommand("check", "Decide whether the MLE of the restricted mean is least squares");
  add_model(check);
  check->add_option("--mean", mean, "Mean partition, e.g. {B1,B2}{L1,L2}, 'singletons' or 'classes'");
  add_format(check);

  auto* refine = app.add_subcommand("refine", "Coarsest mean partition with a least-squares MLE");
  add_model(refine);
  add_format(refine);

  auto* orbits = app.add_subcommand("orbits", "Coloring generated by permutation symmetry");
  add_model(orbits);
  add_format(orbits);

  auto* fit = app.add_subcommand("fit", "Fit mean and concentration matrix");
  add_model(fit);
  fit->add_option("--data", data_path, "CSV data file")->required();
  fit->add_option("--mean", mean, "Mean partition (default: model file, else singletons)");
  add_format(fit);

  auto* lrt = app.add_subcommand("lrt", "Likelihood-ratio test between nested mean partitions");
  add_model(lrt);
  lrt->add_option("--data", data_path, "CSV data file")->required();
  lrt->add_option("--null", null_mean, "Null mean partition (default: model file, else classes)");
  lrt->add_option("--alt", alt_mean, "Alternative mean partition (default: singletons)");
  add_format(lrt);

  auto* oracle = app.add_subcommand("oracle", "Compare sampled, generator and combinatorial verdicts");
  add_model(oracle);
  oracle->add_option("--mean", mean, "Mean partition");
  oracle->add_option("--samples", samples, "Samples per concentration space")->check(CLI::PositiveNumber);
  oracle->add_option("--seed", seed, "Random seed");
  add_format(oracle);

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  const cli::CommandOutput out = cli::guarded(command, [&]() -> cli::CommandOutput {
    const auto model = cli::ModelInput::load(model_path);
    if (command == "check") return cli::cmd_check(model, mean);
    if (command == "refine") return cli::cmd_refine(model);
    if (command == "orbits") return cli::cmd_orbits(model);
    if (command == "fit") return cli::cmd_fit(model, cli::DataInput::load(data_path), mean);
    if (command == "lrt") return cli::cmd_lrt(model, cli::DataInput::load(data_path), null_mean, alt_mean);
    return cli::cmd_oracle(model, mean, samples, seed);
  });

  std::cout << (format == "structured" ? cli::render_structured(out.report) : cli::render_human(out.report));
  if (out.exit_code != cli::kExitOk && out.report.contains("error")) {
    std::cerr << out.report["error"]["message"].get<std::string>() << "\n";
  }
  return out.exit_code;
}
