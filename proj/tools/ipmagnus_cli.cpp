// Copyright 2026 The ipmagnus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "ipmagnus.hpp"

namespace {

using namespace ipm;

int run_command(const std::string& which, const std::string& config_path, const std::string& out_dir,
                const std::string& format, const std::vector<std::uint64_t>& seeds) {
  ExperimentConfig config = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
  config.experiment = which;
  if (!seeds.empty()) config.seeds = seeds;
  const ExperimentReport report = run_experiment(config);
  for (const auto& path : emit(report, format, out_dir, which)) std::cerr << "wrote " << path.string() << "\n";
  for (const auto& f : report.fits) {
    std::cerr << f.study << " " << f.label << " slope=" << f.slope << " r2=" << f.r2 << "\n";
  }
  for (const auto& f : report.failures) {
    std::cerr << "FAILED " << f.algorithm << " alpha=" << f.alpha << " seed=" << f.seed << ": " << f.message << "\n";
  }
  return report.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interaction-picture Magnus compiler and exact-evolution checks"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run an experiment and write its report");
  std::string which, config_path, out_dir = "results", format = "csv";
  std::vector<std::uint64_t> seeds;
  run->add_option("experiment", which, "fig1 or scaling")->required()->check(CLI::IsMember({"fig1", "scaling"}));
  run->add_option("--config", config_path, "JSON config; missing keys take defaults")->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--seeds", seeds, "Override the seed list")->delimiter(',');

  auto* config_cmd = app.add_subcommand("config", "Print the default config for an experiment");
  std::string config_which = "fig1";
  config_cmd->add_option("experiment", config_which)->check(CLI::IsMember({"fig1", "scaling"}));

  std::string model_name = "xy";
  std::size_t n = 12;
  std::uint64_t seed = 0;
  auto* model = app.add_subcommand("model", "Emit a model instance as JSON");
  model->add_option("name", model_name, "xy or ising")->check(CLI::IsMember({"xy", "ising"}));
  model->add_option("-n,--n", n, "Number of sites");
  model->add_option("--seed", seed, "Coefficient seed");

  double alpha = 0.1, h = 1.0, t = 3.0;
  int q = 1, p = 1, radius = -1;
  std::string algorithm = "magnus";
  double interval = 1.0;
  auto* plan = app.add_subcommand("plan", "Dump the Magnus generator of one step as JSON");
  auto* circuit = app.add_subcommand("circuit", "Print the compiled circuit and its gate count");
  for (auto* sub : {plan, circuit}) {
    sub->add_option("--model", model_name, "xy or ising")->check(CLI::IsMember({"xy", "ising"}));
    sub->add_option("-n,--n", n, "Number of sites");
    sub->add_option("--seed", seed, "Coefficient seed");
    sub->add_option("--alpha", alpha, "Perturbation strength");
    sub->add_option("-q,--q", q, "Magnus truncation order");
    sub->add_option("-R,--radius", radius, "Light-cone radius (-1 chooses it)");
  }
  plan->add_option("--step", h, "Step length");
  circuit->add_option("--t", t, "Total time");
  circuit->add_option("--algorithm", algorithm, "magnus, pf1 or pf2")->check(CLI::IsMember({"magnus", "pf1", "pf2"}));
  circuit->add_option("--interval", interval, "Step length; must divide t");
  circuit->add_option("-p,--p", p, "Product-formula order");

  CLI11_PARSE(app, argc, argv);

  try {
    auto instance = [&] { return build_model(model_name == "xy" ? "xy_disordered" : "ising_perturbed", n, seed); };
    auto pick_radius = [&](const ModelInstance& m, double horizon) {
      const std::size_t diameter = m.a.lattice().diameter();
      if (radius >= 0) return std::min<std::size_t>(static_cast<std::size_t>(radius), diameter);
      return choose_radius(interaction_range(m.a), n, horizon, 2.0, q, diameter);
    };

    if (*run) return run_command(which, config_path, out_dir, format, seeds);

    if (*config_cmd) {
      ExperimentConfig c;
      c.experiment = config_which;
      std::cout << json(c).dump(2) << "\n";
      return 0;
    }

    if (*model) {
      const ModelInstance m = instance();
      const json doc{{"model", model_name},
                     {"seed", seed},
                     {"rng", CounterRng::kName},
                     {"a", hamiltonian_to_json(m.a)},
                     {"b", hamiltonian_to_json(m.b)}};
      std::cout << doc.dump(2) << "\n";
      return 0;
    }

    if (*plan) {
      const ModelInstance m = instance();
      const std::size_t r = pick_radius(m, h);
      const MagnusPlan pl = build_plan(m.a, m.b, alpha, h, q, r);
      const json doc{{"q", pl.q},
                     {"R", pl.radius},
                     {"step", pl.step},
                     {"alpha", pl.alpha},
                     {"quad_K", pl.quad.first.order()},
                     {"diagnostics",
                      {{"term_count", pl.diagnostics.term_count},
                       {"max_support", pl.diagnostics.max_support},
                       {"l1_norm", pl.diagnostics.l1_norm},
                       {"convergence_warning", pl.diagnostics.convergence_warning}}},
                     {"omega", pauli_sum_to_json(pl.omega)}};
      std::cout << doc.dump(2) << "\n";
      return 0;
    }

    if (*circuit) {
      const ModelInstance m = instance();
      const std::size_t r = steps_for(t, interval);
      CircuitIR ir(n);
      if (algorithm == "magnus") {
        const MagnusPlan pl = build_plan(m.a, m.b, alpha, interval, q, pick_radius(m, t));
        ir = compile_step(pl, m.a, p).repeat(r);
      } else {
        ir = suzuki(n, split_terms(m.a, m.b, alpha), interval, algorithm == "pf2" ? 2 : p).repeat(r);
      }
      const bool fast = interaction_range(m.a) == 0;
      const GateCount g = expand_elementary(fast ? ir : pretrotterize_frames(ir, 1, p), fast);
      std::cout << ir.to_text();
      std::cerr << "rotations=" << g.rotations << " two_qubit=" << g.two_qubit << " single_qubit=" << g.single_qubit
                << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
