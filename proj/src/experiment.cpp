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

#include "ipmagnus/experiment.hpp"

#include <fstream>
#include <sstream>

#include "ipmagnus/lightcone.hpp"
#include "ipmagnus/magnus.hpp"
#include "ipmagnus/oracle.hpp"
#include "ipmagnus/simulate.hpp"

namespace ipm {

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (n == 0 || lo <= 0 || hi < lo) throw DomainError("log_grid needs 0 < lo <= hi and n >= 1");
  if (n == 1) return {lo};
  std::vector<double> out;
  const double a = std::log10(lo), b = std::log10(hi);
  for (std::size_t k = 0; k < n; ++k) out.push_back(std::pow(10.0, a + (b - a) * static_cast<double>(k) / (n - 1)));
  out.front() = lo;
  out.back() = hi;
  return out;
}

void to_json(json& j, const AlgorithmSpec& a) {
  j = json{{"name", a.name}, {"interval", a.interval}, {"q", a.q},           {"p", a.p},
           {"radius", a.radius}, {"theta", a.theta}, {"quad_K", a.quad_k}, {"quad_K2", a.quad_k2},
           {"frame_steps", a.frame_steps}};
}

void from_json(const json& j, AlgorithmSpec& a) {
  AlgorithmSpec d;
  a.name = j.at("name").get<std::string>();
  if (a.name == "pf2") d.p = 2;
  a.interval = j.value("interval", d.interval);
  a.q = j.value("q", d.q);
  a.p = j.value("p", d.p);
  a.radius = j.value("radius", d.radius);
  a.theta = j.value("theta", d.theta);
  a.quad_k = j.value("quad_K", d.quad_k);
  a.quad_k2 = j.value("quad_K2", d.quad_k2);
  a.frame_steps = j.value("frame_steps", d.frame_steps);
}

void to_json(json& j, const ScalingConfig& s) {
  j = json{{"ns", s.ns},
           {"alpha_dh", s.alpha_dh},
           {"h", s.h},
           {"qs", s.qs},
           {"decay_model", s.decay_model},
           {"decay_n", s.decay_n},
           {"decay_t", s.decay_t},
           {"decay_alpha", s.decay_alpha},
           {"decay_q", s.decay_q},
           {"stage_n", s.stage_n},
           {"stage_h", s.stage_h},
           {"stage_alphas", s.stage_alphas},
           {"stage_ps", s.stage_ps},
           {"stage_q", s.stage_q},
           {"order_n", s.order_n},
           {"order_h", s.order_h},
           {"order_alphas", s.order_alphas},
           {"order_qs", s.order_qs}};
}

void from_json(const json& j, ScalingConfig& s) {
  const ScalingConfig d;
  s.ns = j.value("ns", d.ns);
  s.alpha_dh = j.value("alpha_dh", d.alpha_dh);
  s.h = j.value("h", d.h);
  s.qs = j.value("qs", d.qs);
  s.decay_model = j.value("decay_model", d.decay_model);
  s.decay_n = j.value("decay_n", d.decay_n);
  s.decay_t = j.value("decay_t", d.decay_t);
  s.decay_alpha = j.value("decay_alpha", d.decay_alpha);
  s.decay_q = j.value("decay_q", d.decay_q);
  s.stage_n = j.value("stage_n", d.stage_n);
  s.stage_h = j.value("stage_h", d.stage_h);
  s.stage_alphas = j.value("stage_alphas", d.stage_alphas);
  s.stage_ps = j.value("stage_ps", d.stage_ps);
  s.stage_q = j.value("stage_q", d.stage_q);
  s.order_n = j.value("order_n", d.order_n);
  s.order_h = j.value("order_h", d.order_h);
  s.order_alphas = j.value("order_alphas", d.order_alphas);
  s.order_qs = j.value("order_qs", d.order_qs);
}

void to_json(json& j, const ExperimentConfig& c) {
  j = json{{"experiment", c.experiment}, {"model", c.model},           {"n", c.n},
           {"t", c.t},                   {"seeds", c.seeds},           {"alphas", c.alphas},
           {"algorithms", c.algorithms}, {"spectral_tol", c.spectral_tol}, {"scaling", c.scaling}};
}

void from_json(const json& j, ExperimentConfig& c) {
  const ExperimentConfig d;
  c.experiment = j.value("experiment", d.experiment);
  c.model = j.value("model", d.model);
  c.n = j.value("n", d.n);
  c.t = j.value("t", d.t);
  c.seeds = j.value("seeds", d.seeds);
  if (j.contains("alphas")) {
    c.alphas = j.at("alphas").get<std::vector<double>>();
  } else if (j.contains("alpha_grid")) {
    const json& g = j.at("alpha_grid");
    c.alphas = log_grid(g.at("min").get<double>(), g.at("max").get<double>(), g.at("points").get<std::size_t>());
  } else {
    c.alphas = d.alphas;
  }
  c.algorithms = j.value("algorithms", d.algorithms);
  c.spectral_tol = j.value("spectral_tol", d.spectral_tol);
  c.scaling = j.value("scaling", d.scaling);
}

void to_json(json& j, const ReportRow& r) {
  auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
  j = json{{"algorithm", r.algorithm},
           {"alpha", r.alpha},
           {"seed", r.seed},
           {"spectral_error", r.spectral_error},
           {"gate_rotations", r.gates.rotations},
           {"gate_two_qubit", r.gates.two_qubit},
           {"gate_single_qubit", r.gates.single_qubit},
           {"r", r.r},
           {"q", opt(r.q)},
           {"p", opt(r.p)},
           {"R", opt(r.radius)},
           {"quad_K", opt(r.quad_k)}};
}

void from_json(const json& j, ReportRow& r) {
  auto opt = [&j]<typename T>(const char* key, std::optional<T>& out) {
    out = j.contains(key) && !j.at(key).is_null() ? std::optional<T>(j.at(key).get<T>()) : std::nullopt;
  };
  r.algorithm = j.at("algorithm").get<std::string>();
  r.alpha = j.at("alpha").get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.spectral_error = j.at("spectral_error").get<double>();
  r.gates = {j.at("gate_rotations").get<std::size_t>(), j.at("gate_two_qubit").get<std::size_t>(),
             j.value("gate_single_qubit", std::size_t{0})};
  r.r = j.at("r").get<std::size_t>();
  opt("q", r.q);
  opt("p", r.p);
  opt("R", r.radius);
  opt("quad_K", r.quad_k);
}

void to_json(json& j, const FitRecord& f) {
  j = json{{"study", f.study}, {"label", f.label}, {"slope", f.slope},
           {"intercept", f.intercept}, {"r2", f.r2}, {"points", f.points}};
}

void from_json(const json& j, FitRecord& f) {
  f.study = j.at("study").get<std::string>();
  f.label = j.at("label").get<std::string>();
  f.slope = j.at("slope").get<double>();
  f.intercept = j.at("intercept").get<double>();
  f.r2 = j.at("r2").get<double>();
  f.points = j.at("points").get<std::size_t>();
}

void to_json(json& j, const RowFailure& f) {
  j = json{{"algorithm", f.algorithm}, {"alpha", f.alpha}, {"seed", f.seed}, {"message", f.message}};
}

void from_json(const json& j, RowFailure& f) {
  f.algorithm = j.at("algorithm").get<std::string>();
  f.alpha = j.at("alpha").get<double>();
  f.seed = j.at("seed").get<std::uint64_t>();
  f.message = j.at("message").get<std::string>();
}

void to_json(json& j, const ExperimentReport& r) {
  j = json{{"schema_version", r.schema_version},
           {"provenance", r.provenance},
           {"rows", r.rows},
           {"fits", r.fits},
           {"failures", r.failures}};
}

void from_json(const json& j, ExperimentReport& r) {
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kSchemaVersion) {
    throw DomainError("unsupported report schema_version " + std::to_string(r.schema_version));
  }
  r.provenance = j.value("provenance", json::object());
  r.rows = j.at("rows").get<std::vector<ReportRow>>();
  r.fits = j.value("fits", std::vector<FitRecord>{});
  r.failures = j.value("failures", std::vector<RowFailure>{});
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config " + path.string());
  return json::parse(in).get<ExperimentConfig>();
}

std::string config_hash(const ExperimentConfig& c) {
  const std::string text = json(c).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ModelInstance build_model(const std::string& name, std::size_t n, std::uint64_t seed) {
  if (name == "xy_disordered") return build_xy_disordered(n, seed);
  if (name == "ising_perturbed") return build_ising_perturbed(n, seed);
  throw DomainError("unknown model '" + name + "'");
}

std::size_t steps_for(double t, double interval) {
  if (!(interval > 0)) throw DomainError("algorithm interval must be positive");
  const double r = t / interval;
  const double rounded = std::round(r);
  if (rounded < 1 || std::abs(r - rounded) > 1e-9 * std::max(1.0, r)) {
    throw DomainError("interval " + PauliSum::format_double(interval) + " does not divide t = " +
                      PauliSum::format_double(t));
  }
  return static_cast<std::size_t>(rounded);
}

namespace detail {

json base_provenance(const ExperimentConfig& c) {
  return json{{"config_hash", config_hash(c)},
              {"config", c},
              {"versions",
               {{"ipmagnus", kVersion},
                {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                              std::to_string(EIGEN_MINOR_VERSION)},
                {"json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                             std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                             std::to_string(NLOHMANN_JSON_VERSION_PATCH)}}},
              {"rng", CounterRng::kName},
              {"boundary", to_string(Boundary::open)},
              {"radius_policy",
               {{"slope_first", RadiusPolicy{}.slope_first}, {"slope_general", RadiusPolicy{}.slope_general}}},
              {"spectral_norm", "dense SVD for dim <= 1024, Lanczos on D^dagger D above (rel tol " +
                                    PauliSum::format_double(c.spectral_tol) + ")"},
              {"orderings",
               {{"pf", "A terms in declaration order, then alpha B terms"},
                {"magnus", "Omega terms in canonical (z_mask, x_mask) order"}}}};
}

void fit_alpha_slopes(ExperimentReport& report, const std::string& study) {
  std::vector<std::pair<std::string, std::uint64_t>> keys;
  for (const auto& row : report.rows) {
    const auto key = std::make_pair(row.algorithm, row.seed);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
  }
  for (const auto& [alg, seed] : keys) {
    std::vector<double> x, y;
    for (const auto& row : report.rows) {
      if (row.algorithm == alg && row.seed == seed && row.alpha > 0 && row.spectral_error > 0) {
        x.push_back(row.alpha);
        y.push_back(row.spectral_error);
      }
    }
    if (x.size() < 2) continue;
    const LineFit f = fit_loglog(x, y);
    report.fits.push_back({study, alg + "_seed" + std::to_string(seed), f.slope, f.intercept, f.r2, f.points});
  }
}

}  // namespace detail

ExperimentReport run_fig1(const ExperimentConfig& config) {
  if (config.n > 14) throw OversizedError("run_fig1 needs n <= 14");
  for (double a : config.alphas) {
    if (!(a >= 0)) throw DomainError("alpha grid must be non-negative");
  }
  ExperimentReport report;
  report.provenance = detail::base_provenance(config);

  struct Keyed {
    std::size_t alg, alpha, seed, sub;
    ReportRow row;
  };
  std::vector<Keyed> cells;
  json quadrature = json::object();
  json gate_table = json::object();

  for (std::size_t si = 0; si < config.seeds.size(); ++si) {
    const std::uint64_t seed = config.seeds[si];
    const ModelInstance inst = build_model(config.model, config.n, seed);
    auto a_ptr = std::make_shared<const LocalHamiltonian>(inst.a);
    const bool fast_forward = interaction_range(inst.a) == 0;

    std::vector<std::unique_ptr<MagnusBuilder>> builders(config.algorithms.size());
    for (std::size_t ai = 0; ai < config.alphas.size(); ++ai) {
      const double alpha = config.alphas[ai];
      std::optional<LinearMap> exact;
      for (std::size_t gi = 0; gi < config.algorithms.size(); ++gi) {
        const AlgorithmSpec& alg = config.algorithms[gi];
        try {
          if (!exact) exact = evolution_map(combine(inst.a, inst.b, alpha), config.t);
          const std::size_t r = steps_for(config.t, alg.interval);
          const double h = alg.interval;
          ReportRow row{alg.name, alpha, seed, 0.0, {}, r, std::nullopt, alg.p, std::nullopt, std::nullopt};
          if (alg.name == "magnus") {
            const std::size_t radius =
                alg.radius >= 0 ? std::min<std::size_t>(static_cast<std::size_t>(alg.radius), inst.a.lattice().diameter())
                                : choose_radius(interaction_range(inst.a), config.n, config.t, alg.theta, alg.q,
                                                inst.a.lattice().diameter());
            if (!builders[gi]) builders[gi] = std::make_unique<MagnusBuilder>(inst.a, inst.b, radius);
            MagnusQuadrature quad{QuadratureRule::gauss_legendre(alg.quad_k),
                                  QuadratureRule::gauss_legendre(alg.quad_k2),
                                  QuadratureRule::gauss_legendre(alg.quad_k2)};
            quadrature[alg.name] = {{"first", quad.first.describe()},
                                    {"outer", quad.outer.describe()},
                                    {"inner", quad.inner.describe()}};
            const MagnusPlan plan = build_plan(*builders[gi], inst.b, alpha, h, alg.q, quad);
            const CircuitIR step = compile_step(plan.omega, a_ptr, h, alg.p);
            const CircuitIR circuit = step.repeat(r);
            row.q = alg.q;
            row.radius = radius;
            row.quad_k = alg.quad_k;
            row.gates = expand_elementary(fast_forward ? circuit : pretrotterize_frames(circuit, alg.frame_steps, alg.p),
                                          fast_forward);
            row.spectral_error = spectral_distance(circuit_map(circuit), *exact, config.spectral_tol);
            cells.push_back({gi, ai, si, 0, row});

            // Same generator, exponentiated exactly.
            CircuitIR frame(config.n);
            frame.append(FrameOp{a_ptr, h, "A"});
            LinearMap exact_step = circuit_map(frame);
            if (!plan.omega.empty()) {
              exact_step = compose(exact_step, evolution_map(scale(plan.omega, cplx(0.0, 1.0)), 1.0));
            }
            ReportRow exp_row = row;
            exp_row.algorithm = alg.name + "_exp";
            exp_row.p.reset();
            exp_row.gates = {};
            exp_row.spectral_error = spectral_distance(power(exact_step, r), *exact, config.spectral_tol);
            cells.push_back({gi, ai, si, 1, exp_row});
          } else if (alg.name == "pf1" || alg.name == "pf2") {
            const CircuitIR circuit = suzuki(config.n, split_terms(inst.a, inst.b, alpha), h, alg.p).repeat(r);
            row.gates = expand_elementary(circuit, true);
            row.spectral_error = spectral_distance(circuit_map(circuit), *exact, config.spectral_tol);
            cells.push_back({gi, ai, si, 0, row});
          } else {
            throw DomainError("unknown algorithm '" + alg.name + "'");
          }
        } catch (const std::exception& e) {
          report.failures.push_back({alg.name, alpha, seed, e.what()});
        }
      }
    }
  }

  std::sort(cells.begin(), cells.end(), [](const Keyed& x, const Keyed& y) {
    return std::tie(x.alg, x.sub, x.alpha, x.seed) < std::tie(y.alg, y.sub, y.alpha, y.seed);
  });
  for (auto& c : cells) report.rows.push_back(std::move(c.row));

  for (const auto& row : report.rows) {
    if (!gate_table.contains(row.algorithm) && row.gates.rotations > 0) {
      gate_table[row.algorithm] = {{"rotations", row.gates.rotations},
                                   {"two_qubit", row.gates.two_qubit},
                                   {"single_qubit", row.gates.single_qubit},
                                   {"alpha", row.alpha},
                                   {"seed", row.seed}};
    }
  }
  if (gate_table.contains("magnus")) {
    const double base = gate_table["magnus"]["rotations"].get<double>() + gate_table["magnus"]["two_qubit"].get<double>();
    for (auto& [name, entry] : gate_table.items()) {
      entry["cost_ratio_to_magnus"] =
          (entry["rotations"].get<double>() + entry["two_qubit"].get<double>()) / base;
    }
  }
  report.provenance["quadrature"] = quadrature;
  report.provenance["gate_counts"] = gate_table;
  detail::fit_alpha_slopes(report, "fig1_alpha");
  return report;
}

ExperimentReport run_scaling(const ExperimentConfig& config) {
  const ScalingConfig& s = config.scaling;
  ExperimentReport report;
  report.provenance = detail::base_provenance(config);
  const MagnusQuadrature quad;
  report.provenance["quadrature"] = {
      {"first", quad.first.describe()}, {"outer", quad.outer.describe()}, {"inner", quad.inner.describe()}};

  auto guarded = [&](const std::string& alg, double alpha, std::uint64_t seed, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      report.failures.push_back({alg, alpha, seed, e.what()});
    }
  };

  // (i) ||e^Omega - e^Omega_bar|| against n at fixed alpha d h, exact exponentials.
  for (std::uint64_t seed : config.seeds) {
    std::map<int, std::pair<std::vector<double>, std::vector<double>>> series;
    for (std::size_t n : s.ns) {
      const std::string label = "trunc_n" + std::to_string(n);
      guarded(label, 0.0, seed, [&] {
        if (n > 12) throw OversizedError("scaling study needs n <= 12");
        const ModelInstance inst = build_xy_disordered(n, seed);
        const double d = effective_degree(inst.b);
        const double alpha = s.alpha_dh / (d * s.h);
        const std::size_t radius = inst.a.lattice().diameter();
        const DenseOperator reference = exp_anti_hermitian(magnus_log_reference(inst.a, inst.b, alpha, s.h));
        const MagnusBuilder builder(inst.a, inst.b, radius);
        for (int q : s.qs) {
          const MagnusPlan plan = build_plan(builder, inst.b, alpha, s.h, q, quad);
          const double err = spectral_distance(exp_anti_hermitian(dense(plan.omega)), reference);
          report.rows.push_back({"trunc_q" + std::to_string(q) + "_n" + std::to_string(n), alpha, seed, err, {}, 1, q,
                                 std::nullopt, radius, quad.first.order()});
          series[q].first.push_back(static_cast<double>(n));
          series[q].second.push_back(err);
        }
      });
    }
    for (const auto& [q, xy] : series) {
      const auto& [xs, ys] = xy;
      if (xs.size() >= 2 && std::all_of(ys.begin(), ys.end(), [](double v) { return v > 0; })) {
        const LineFit f = fit_loglog(xs, ys);
        report.fits.push_back({"n_scaling", "trunc_q" + std::to_string(q) + "_seed" + std::to_string(seed), f.slope,
                               f.intercept, f.r2, f.points});
      }
    }
  }

  // (ii) ||Omega_bar - Omega_bar_loc(R)|| against R.
  for (std::uint64_t seed : config.seeds) {
    std::vector<double> xs, ys;
    const std::string label = "lightcone_q" + std::to_string(s.decay_q);
    guarded(label, s.decay_alpha, seed, [&] {
      const ModelInstance inst = build_model(s.decay_model, s.decay_n, seed);
      const std::size_t diameter = inst.a.lattice().diameter();
      const PauliSum full = build_plan(inst.a, inst.b, s.decay_alpha, s.decay_t, s.decay_q, diameter, quad).omega;
      for (std::size_t radius = 0; radius <= diameter; ++radius) {
        const PauliSum loc =
            radius == diameter ? full
                               : build_plan(inst.a, inst.b, s.decay_alpha, s.decay_t, s.decay_q, radius, quad).omega;
        const double err = measure_truncation_error(full, loc);
        report.rows.push_back(
            {label, s.decay_alpha, seed, err, {}, 1, s.decay_q, std::nullopt, radius, quad.first.order()});
        if (err > kLightConeFloor) {
          xs.push_back(static_cast<double>(radius));
          ys.push_back(err);
        }
      }
    });
    if (xs.size() >= 2) {
      const LineFit f = fit_exponential(xs, ys);
      report.fits.push_back({"lightcone", label + "_seed" + std::to_string(seed), f.slope, f.intercept, f.r2, f.points});
    }
  }

  // (iii) ||e^{-iAh} e^{Omega_bar} - compiled step|| against alpha.
  for (int p : s.stage_ps) {
    const std::string label = "stage_p" + std::to_string(p);
    for (std::uint64_t seed : config.seeds) {
      const ModelInstance inst = build_xy_disordered(s.stage_n, seed);
      auto a_ptr = std::make_shared<const LocalHamiltonian>(inst.a);
      const std::size_t radius = inst.a.lattice().diameter();
      std::unique_ptr<MagnusBuilder> builder;
      const DenseOperator frame = exact_evolution(dense(inst.a), s.stage_h);
      for (double alpha : s.stage_alphas) {
        guarded(label, alpha, seed, [&] {
          if (!builder) builder = std::make_unique<MagnusBuilder>(inst.a, inst.b, radius);
          const MagnusPlan plan = build_plan(*builder, inst.b, alpha, s.stage_h, s.stage_q, quad);
          const CircuitIR step = compile_step(plan.omega, a_ptr, s.stage_h, p);
          const DenseOperator target = frame * exp_anti_hermitian(dense(plan.omega));
          const double err = spectral_distance(circuit_unitary(step), target);
          report.rows.push_back({label, alpha, seed, err, expand_elementary(step, interaction_range(inst.a) == 0), 1,
                                 s.stage_q, p, radius, quad.first.order()});
        });
      }
    }
  }

  // (iv) ||e^Omega - e^Omega_bar|| for one step against alpha, per q.
  for (int q : s.order_qs) {
    const std::string label = "order_q" + std::to_string(q);
    for (std::uint64_t seed : config.seeds) {
      const ModelInstance inst = build_xy_disordered(s.order_n, seed);
      const std::size_t radius = inst.a.lattice().diameter();
      for (double alpha : s.order_alphas) {
        guarded(label, alpha, seed, [&] {
          const MagnusPlan plan = build_plan(inst.a, inst.b, alpha, s.order_h, q, radius, quad);
          const DenseOperator reference = exp_anti_hermitian(magnus_log_reference(inst.a, inst.b, alpha, s.order_h));
          const double err = spectral_distance(exp_anti_hermitian(dense(plan.omega)), reference);
          report.rows.push_back({label, alpha, seed, err, {}, 1, q, std::nullopt, radius, quad.first.order()});
        });
      }
    }
  }

  std::vector<ReportRow> stage_rows;
  for (const auto& row : report.rows) {
    if (row.algorithm.rfind("stage_", 0) == 0 || row.algorithm.rfind("order_", 0) == 0) stage_rows.push_back(row);
  }
  ExperimentReport tmp;
  tmp.rows = stage_rows;
  detail::fit_alpha_slopes(tmp, "alpha_order");
  report.fits.insert(report.fits.end(), tmp.fits.begin(), tmp.fits.end());
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  if (config.experiment == "fig1") return run_fig1(config);
  if (config.experiment == "scaling") return run_scaling(config);
  throw DomainError("unknown experiment '" + config.experiment + "'");
}

std::string to_csv(const ExperimentReport& report) {
  auto num = [](double v) { return PauliSum::format_double(v); };
  auto opt = [](const auto& o) { return o ? std::to_string(*o) : std::string(); };
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : report.rows) {
    out += r.algorithm + "," + num(r.alpha) + "," + std::to_string(r.seed) + "," + num(r.spectral_error) + "," +
           std::to_string(r.gates.rotations) + "," + std::to_string(r.gates.two_qubit) + "," + std::to_string(r.r) +
           "," + opt(r.q) + "," + opt(r.p) + "," + opt(r.radius) + "," + opt(r.quad_k) + "\n";
  }
  return out;
}

std::vector<std::filesystem::path> emit(const ExperimentReport& report, const std::string& format,
                                        const std::filesystem::path& dir, const std::string& stem) {
  std::filesystem::create_directories(dir);
  auto write = [](const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw Error("cannot write " + p.string());
    out << text;
    if (!out) throw Error("failed writing " + p.string());
  };
  std::vector<std::filesystem::path> written;
  if (format == "csv") {
    written.push_back(dir / (stem + ".csv"));
    write(written.back(), to_csv(report));
    json side{{"schema_version", report.schema_version},
              {"provenance", report.provenance},
              {"fits", report.fits},
              {"failures", report.failures}};
    written.push_back(dir / (stem + ".provenance.json"));
    write(written.back(), side.dump(2) + "\n");
  } else if (format == "json") {
    written.push_back(dir / (stem + ".json"));
    write(written.back(), to_json_text(report));
  } else {
    throw DomainError("unknown format '" + format + "'");
  }
  return written;
}

}  // namespace ipm
