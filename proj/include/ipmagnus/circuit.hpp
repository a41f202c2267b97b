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

// Pauli-rotation circuits, Trotter-Suzuki product formulas and gate counting.
//
// A CircuitIR lists its ops in operator-product order: ops[0] is the leftmost
// factor and the last op acts on the state first.

#include <charconv>
#include <cmath>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "ipmagnus/dense.hpp"
#include "ipmagnus/errors.hpp"
#include "ipmagnus/magnus.hpp"
#include "ipmagnus/model.hpp"
#include "ipmagnus/pauli.hpp"

namespace ipm {

/// exp(-i angle P).
struct PauliRotation {
  PauliTerm term;
  double angle = 0.0;
};

/// exp(-i A duration) for a whole local Hamiltonian.
struct FrameOp {
  std::shared_ptr<const LocalHamiltonian> generator;
  double duration = 0.0;
  std::string ref = "A";
};

using CircuitOp = std::variant<PauliRotation, FrameOp>;

class CircuitIR {
 public:
  explicit CircuitIR(std::size_t n = 0) : n_(n) {}

  std::size_t num_qubits() const { return n_; }
  const std::vector<CircuitOp>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }

  CircuitIR& append(const PauliRotation& r) {
    check_same_size(n_, r.term.num_qubits());
    if (!std::isfinite(r.angle)) throw DomainError("rotation angle is not finite");
    if (r.angle != 0.0 && !r.term.is_identity()) ops_.emplace_back(r);
    return *this;
  }

  CircuitIR& append(const FrameOp& f) {
    if (!f.generator) throw DomainError("frame op without generator");
    check_same_size(n_, f.generator->num_qubits());
    if (!std::isfinite(f.duration)) throw DomainError("frame duration is not finite");
    if (f.duration != 0.0) ops_.emplace_back(f);
    return *this;
  }

  CircuitIR& append(const CircuitIR& other) {
    check_same_size(n_, other.n_);
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    return *this;
  }

  /// The circuit raised to the r-th power.
  CircuitIR repeat(std::size_t r) const {
    CircuitIR out(n_);
    out.ops_.reserve(ops_.size() * r);
    for (std::size_t i = 0; i < r; ++i) out.append(*this);
    return out;
  }

  /// One op per line: `ROT <angle> <pauli>` or `FRAME <duration> <ref>`, after
  /// a `QUBITS <n>` header. Pauli strings are dense, site 0 first.
  std::string to_text() const {
    std::string out = "QUBITS " + std::to_string(n_) + "\n";
    for (const auto& op : ops_) {
      if (const auto* r = std::get_if<PauliRotation>(&op)) {
        out += "ROT " + PauliSum::format_double(r->angle) + " " + r->term.dense_str() + "\n";
      } else {
        const auto& f = std::get<FrameOp>(op);
        out += "FRAME " + PauliSum::format_double(f.duration) + " " + f.ref + "\n";
      }
    }
    return out;
  }

  static CircuitIR from_text(const std::string& text,
                             const std::map<std::string, std::shared_ptr<const LocalHamiltonian>>& frames = {}) {
    std::istringstream in(text);
    std::string kind;
    std::size_t n = 0;
    if (!(in >> kind >> n) || kind != "QUBITS") throw DomainError("circuit text must start with QUBITS <n>");
    CircuitIR ir(n);
    std::string value, arg;
    while (in >> kind >> value >> arg) {
      double x = 0.0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
      if (ec != std::errc() || ptr != value.data() + value.size()) throw DomainError("bad number '" + value + "'");
      if (kind == "ROT") {
        if (arg.size() != n) throw DimensionError("pauli string '" + arg + "' does not have " + std::to_string(n) + " sites");
        std::vector<std::size_t> sites(n);
        for (std::size_t j = 0; j < n; ++j) sites[j] = j;
        ir.append(PauliRotation{PauliTerm::on_sites(n, arg, sites), x});
      } else if (kind == "FRAME") {
        auto it = frames.find(arg);
        if (it == frames.end()) throw DomainError("unknown frame reference '" + arg + "'");
        ir.append(FrameOp{it->second, x, arg});
      } else {
        throw DomainError("unknown circuit op '" + kind + "'");
      }
    }
    return ir;
  }

 private:
  std::size_t n_;
  std::vector<CircuitOp> ops_;
};

struct WeightedTerm {
  PauliTerm term;
  cplx coeff;
};

/// Terms of a Pauli sum in canonical (z_mask, x_mask) order.
inline std::vector<WeightedTerm> weighted_terms(const PauliSum& a) {
  std::vector<WeightedTerm> out;
  for (const auto& [p, c] : a) out.push_back({p, c});
  return out;
}

/// A-terms in declaration order, then alpha-scaled B-terms.
inline std::vector<WeightedTerm> split_terms(const LocalHamiltonian& a, const LocalHamiltonian& b, double alpha) {
  std::vector<WeightedTerm> out;
  for (const auto& t : a.terms()) {
    for (const auto& [p, c] : t.op()) out.push_back({p, c});
  }
  if (alpha != 0.0) {
    for (const auto& t : b.terms()) {
      for (const auto& [p, c] : t.op()) out.push_back({p, alpha * c});
    }
  }
  return out;
}

namespace detail {

/// Rotation angle per unit time. A real coefficient c stands for the factor
/// exp(-i h c P); an imaginary one for exp(h c P).
inline std::vector<double> rotation_rates(const std::vector<WeightedTerm>& terms, double tol = 1e-12) {
  bool any_real = false, any_imag = false;
  for (const auto& t : terms) {
    any_real = any_real || std::abs(t.coeff.real()) > tol;
    any_imag = any_imag || std::abs(t.coeff.imag()) > tol;
  }
  if (any_real && any_imag) {
    throw HermiticityError("product formula needs all-real or all-imaginary coefficients");
  }
  std::vector<double> rates;
  for (const auto& t : terms) rates.push_back(any_imag ? -t.coeff.imag() : t.coeff.real());
  return rates;
}

inline void check_terms(std::size_t n, const std::vector<WeightedTerm>& terms) {
  for (const auto& t : terms) check_same_size(n, t.term.num_qubits());
}

inline void append_suzuki(CircuitIR& ir, const std::vector<WeightedTerm>& terms, const std::vector<double>& rates,
                          double h, int p) {
  const std::size_t m = terms.size();
  if (m == 0) return;
  if (p == 1) {
    for (std::size_t j = 0; j < m; ++j) ir.append(PauliRotation{terms[j].term, rates[j] * h});
    return;
  }
  if (p == 2) {
    for (std::size_t j = 0; j + 1 < m; ++j) ir.append(PauliRotation{terms[j].term, rates[j] * h / 2});
    ir.append(PauliRotation{terms[m - 1].term, rates[m - 1] * h});
    for (std::size_t j = m - 1; j-- > 0;) ir.append(PauliRotation{terms[j].term, rates[j] * h / 2});
    return;
  }
  const double mp = 1.0 / (4.0 - std::pow(4.0, 1.0 / (p - 1)));
  const double outer = mp * h;
  const double middle = h - 4.0 * outer;
  for (double s : {outer, outer, middle, outer, outer}) append_suzuki(ir, terms, rates, s, p - 2);
}

inline void check_order(int p) {
  if (p != 1 && p != 2 && p != 4 && p != 6) {
    throw UnsupportedOrderError("product-formula order p = " + std::to_string(p) + " is not in {1, 2, 4, 6}");
  }
}

}  // namespace detail

/// m_p = 1/(4 - 4^{1/(p-1)}) for the order-p Suzuki recursion.
inline double suzuki_m(int p) {
  if (p < 4 || p % 2 != 0) throw UnsupportedOrderError("suzuki_m is defined for even p >= 4");
  return 1.0 / (4.0 - std::pow(4.0, 1.0 / (p - 1)));
}

/// Durations of the successive second-order stages inside V_p(h).
std::vector<double> suzuki_stage_times(double h, int p);

inline CircuitIR trotter1(std::size_t n, const std::vector<WeightedTerm>& terms, double h) {
  detail::check_terms(n, terms);
  CircuitIR ir(n);
  detail::append_suzuki(ir, terms, detail::rotation_rates(terms), h, 1);
  return ir;
}

/// Order-p Suzuki formula, p in {1, 2, 4, 6}.
inline CircuitIR suzuki(std::size_t n, const std::vector<WeightedTerm>& terms, double h, int p) {
  detail::check_order(p);
  detail::check_terms(n, terms);
  CircuitIR ir(n);
  detail::append_suzuki(ir, terms, detail::rotation_rates(terms), h, p);
  return ir;
}

inline CircuitIR trotter2(std::size_t n, const std::vector<WeightedTerm>& terms, double h) {
  return suzuki(n, terms, h, 2);
}

/// r = ceil(c_r max(n^{1/q} (alpha d t)^{1+1/q}, n^{1/p} (alpha d t)^{1+1/p})), at least 1.
std::size_t choose_steps(std::size_t n, double alpha, double t, int q, int p, double d = 1.0,
                         double c_r = 1.0);

/// exp(-i A h) as a frame op followed by an order-p product formula for exp(omega).
CircuitIR compile_step(const PauliSum& omega, const std::shared_ptr<const LocalHamiltonian>& a, double h,
                       int p, const std::string& ref = "A");

CircuitIR compile_step(const MagnusPlan& plan, const LocalHamiltonian& a, int p, const std::string& ref = "A");

/// Replaces every frame op exp(-i A tau) by r' steps of an order-p formula over A's terms.
CircuitIR pretrotterize_frames(const CircuitIR& ir, std::size_t r_prime, int p);

struct GateCount {
  std::size_t rotations = 0;
  std::size_t two_qubit = 0;
  std::size_t single_qubit = 0;

  GateCount& operator+=(const GateCount& o) {
    rotations += o.rotations;
    two_qubit += o.two_qubit;
    single_qubit += o.single_qubit;
    return *this;
  }
  friend bool operator==(const GateCount&, const GateCount&) = default;
};

/// Cost of exp(-i theta P) via basis changes and a CNOT ladder.
inline GateCount rotation_cost(const PauliTerm& p) {
  const std::size_t w = p.weight();
  if (w == 0) return {};
  const std::size_t non_z = static_cast<std::size_t>(std::popcount(p.x_mask()));
  return {1, 2 * (w - 1), 2 * non_z};
}

/// Elementary gate count. With a_fast_forward every frame op must be range 0
/// and costs one rotation per qubit; without it frame ops are rejected.
GateCount expand_elementary(const CircuitIR& ir, bool a_fast_forward);

/// Two-group product-formula bounds for H = A + alpha B:
///   ||U - V1|| <= t^2/2 alpha ||[A,B]||,                     V1 = e^{-iAt} e^{-i alpha B t}
///   ||U - V2|| <= t^3/12 alpha ||[A,[A,B]]|| + t^3/24 alpha^2 ||[B,[B,A]]||,
///                                                            V2 = e^{-i alpha B t/2} e^{-iAt} e^{-i alpha B t/2}
struct TwoGroupBounds {
  double first = 0.0;
  double second = 0.0;
};

TwoGroupBounds two_group_bounds(const LocalHamiltonian& a, const LocalHamiltonian& b, double alpha, double t);

}  // namespace ipm
