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

#pragma once

// Experiment configuration, runners and report emission.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ipmagnus/circuit.hpp"
#include "ipmagnus/fit.hpp"
#include "ipmagnus/hamiltonian_io.hpp"
#include "ipmagnus/model.hpp"

namespace ipm {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

/// n log-spaced points in [lo, hi].
std::vector<double> log_grid(double lo, double hi, std::size_t n);

struct AlgorithmSpec {
  std::string name;        // magnus, pf1 or pf2
  double interval = 1.0;   // step length; must divide t
  int q = 1;               // Magnus truncation order
  int p = 1;               // product-formula order
  int radius = -1;         // light-cone radius, -1 picks it from the radius policy
  double theta = 2.0;      // radius policy constant
  std::size_t quad_k = 16;
  std::size_t quad_k2 = 12;
  std::size_t frame_steps = 1;  // pre-Trotterization steps for counting non-fast-forwardable frames
};

struct ScalingConfig {
  // (i) truncation error against n at fixed alpha*d*h
  std::vector<std::size_t> ns{4, 6, 8, 10};
  double alpha_dh = 1e-2;
  double h = 1.0;
  std::vector<int> qs{1};
  // (ii) light-cone decay against R
  std::string decay_model = "ising_perturbed";
  std::size_t decay_n = 8;
  double decay_t = 1.0;
  double decay_alpha = 0.05;
  int decay_q = 1;
  // (iii) compiled exp(Omega) error against alpha per product-formula order
  std::size_t stage_n = 6;
  double stage_h = 1.0;
  std::vector<double> stage_alphas = log_grid(1e-3, 1e-1, 8);
  std::vector<int> stage_ps{1, 2};
  int stage_q = 1;
  // (iv) Magnus step error against alpha per truncation order
  std::size_t order_n = 4;
  double order_h = 0.5;
  std::vector<double> order_alphas{0.04, 0.02};
  std::vector<int> order_qs{1, 2};
};

struct ExperimentConfig {
  std::string experiment = "fig1";
  std::string model = "xy_disordered";
  std::size_t n = 12;
  double t = 3.0;
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4};
  std::vector<double> alphas = log_grid(1e-3, 1e-1, 8);
  std::vector<AlgorithmSpec> algorithms{{"magnus", 1.0, 1, 1}, {"pf1", 0.5, 1, 1}, {"pf2", 0.75, 1, 2}};
  double spectral_tol = 1e-8;
  ScalingConfig scaling;
};

struct ReportRow {
  std::string algorithm;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  double spectral_error = 0.0;
  GateCount gates;
  std::size_t r = 1;
  std::optional<int> q;
  std::optional<int> p;
  std::optional<std::size_t> radius;
  std::optional<std::size_t> quad_k;
  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct FitRecord {
  std::string study;
  std::string label;
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::size_t points = 0;
  friend bool operator==(const FitRecord&, const FitRecord&) = default;
};

struct RowFailure {
  std::string algorithm;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::string message;
  friend bool operator==(const RowFailure&, const RowFailure&) = default;
};

struct ExperimentReport {
  int schema_version = kSchemaVersion;
  json provenance = json::object();
  std::vector<ReportRow> rows;
  std::vector<FitRecord> fits;
  std::vector<RowFailure> failures;

  bool ok() const { return failures.empty(); }
  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

// ---- JSON schema -----------------------------------------------------------

void to_json(json& j, const AlgorithmSpec& a);

void from_json(const json& j, AlgorithmSpec& a);

void to_json(json& j, const ScalingConfig& s);

void from_json(const json& j, ScalingConfig& s);

void to_json(json& j, const ExperimentConfig& c);

/// Missing keys take the defaults above. "alpha_grid": {"min", "max", "points"}
/// may replace an explicit "alphas" list.
void from_json(const json& j, ExperimentConfig& c);

void to_json(json& j, const ReportRow& r);

void from_json(const json& j, ReportRow& r);

void to_json(json& j, const FitRecord& f);

void from_json(const json& j, FitRecord& f);

void to_json(json& j, const RowFailure& f);

void from_json(const json& j, RowFailure& f);

void to_json(json& j, const ExperimentReport& r);

void from_json(const json& j, ExperimentReport& r);

ExperimentConfig load_config(const std::filesystem::path& path);

/// 64-bit FNV-1a of the canonical JSON dump, as hex.
std::string config_hash(const ExperimentConfig& c);

// ---- runners ---------------------------------------------------------------

ModelInstance build_model(const std::string& name, std::size_t n, std::uint64_t seed);

std::size_t steps_for(double t, double interval);

namespace detail {

json base_provenance(const ExperimentConfig& c);

/// Log-log fits of error against alpha, one per (algorithm, seed).
void fit_alpha_slopes(ExperimentReport& report, const std::string& study);

}  // namespace detail

/// Magnus, PF1 and PF2 errors against the exact evolution, swept over alpha.
ExperimentReport run_fig1(const ExperimentConfig& config);

/// Scaling studies: truncation error against n, light-cone decay against R,
/// compiled-stage error against alpha, and Magnus step error against alpha.
ExperimentReport run_scaling(const ExperimentConfig& config);

ExperimentReport run_experiment(const ExperimentConfig& config);

// ---- emission --------------------------------------------------------------

inline constexpr const char* kCsvHeader = "algorithm,alpha,seed,spectral_error,gate_rotations,gate_two_qubit,r,q,p,R,quad_K";

std::string to_csv(const ExperimentReport& report);

inline std::string to_json_text(const ExperimentReport& report) { return json(report).dump(2) + "\n"; }

inline ExperimentReport report_from_json(const std::string& text) { return json::parse(text).get<ExperimentReport>(); }

/// Writes <stem>.csv plus <stem>.provenance.json, or <stem>.json. Returns the paths written.
std::vector<std::filesystem::path> emit(const ExperimentReport& report, const std::string& format,
                                        const std::filesystem::path& dir, const std::string& stem);

}  // namespace ipm
