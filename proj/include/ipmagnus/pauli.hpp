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

// Symplectic (x|z) bit-mask Pauli strings and weighted sums of them.
//
// A term with masks (x, z) denotes the Hermitian operator
//   i^{|x & z|} * prod_j X_j^{x_j} Z_j^{z_j},
// so a site with both bits set is a Y. Phases produced by products are
// folded into the coefficient of the enclosing PauliSum; a PauliTerm never
// carries one.

#include <bit>
#include <charconv>
#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ipmagnus/errors.hpp"

namespace ipm {

using cplx = std::complex<double>;

/// Coefficients whose magnitude falls below this are removed from sums.
inline constexpr double kDropTolerance = 1e-12;

/// Masks are single 64-bit words.
inline constexpr std::size_t kMaxQubits = 64;

class PauliTerm {
 public:
  PauliTerm() = default;

  explicit PauliTerm(std::size_t n, std::uint64_t x_mask = 0, std::uint64_t z_mask = 0)
      : n_(static_cast<std::uint32_t>(n)), x_(x_mask), z_(z_mask) {
    if (n > kMaxQubits) {
      throw DimensionError("PauliTerm supports at most 64 qubits, got " + std::to_string(n));
    }
    const std::uint64_t valid = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    if ((x_mask | z_mask) & ~valid) {
      throw DimensionError("Pauli mask has bits beyond qubit count " + std::to_string(n));
    }
  }

  static PauliTerm identity(std::size_t n) { return PauliTerm(n); }

  /// Single-site Pauli; `letter` is one of I, X, Y, Z.
  static PauliTerm single(std::size_t n, std::size_t site, char letter) {
    PauliTerm p(n);
    p.set(site, letter);
    return p;
  }

  /// Pauli letters placed on explicit sites, e.g. ("XX", {3, 4}).
  static PauliTerm on_sites(std::size_t n, std::string_view letters,
                            const std::vector<std::size_t>& sites) {
    if (letters.size() != sites.size()) {
      throw DimensionError("Pauli letter count does not match site count");
    }
    PauliTerm p(n);
    for (std::size_t k = 0; k < sites.size(); ++k) {
      if (p.at(sites[k]) != 'I') {
        throw DomainError("site " + std::to_string(sites[k]) + " listed twice in Pauli string");
      }
      p.set(sites[k], letters[k]);
    }
    return p;
  }

  /// Parses the sparse text form "X3 Z5" (0-based sites); "I" or "" is the identity.
  static PauliTerm parse(std::size_t n, std::string_view text) {
    PauliTerm p(n);
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && text[pos] == ' ') ++pos;
      if (pos >= text.size()) break;
      const char letter = text[pos++];
      if (letter == 'I' && (pos >= text.size() || text[pos] == ' ')) continue;
      std::size_t site = 0;
      const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), site);
      if (ec != std::errc{}) {
        throw DomainError("malformed Pauli string '" + std::string(text) + "'");
      }
      pos = static_cast<std::size_t>(end - text.data());
      if (p.at(site) != 'I') {
        throw DomainError("site " + std::to_string(site) + " repeated in '" + std::string(text) + "'");
      }
      p.set(site, letter);
    }
    return p;
  }

  std::size_t num_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  std::uint64_t support_mask() const { return x_ | z_; }
  bool is_identity() const { return (x_ | z_) == 0; }
  std::size_t weight() const { return static_cast<std::size_t>(std::popcount(x_ | z_)); }

  char at(std::size_t site) const {
    check_site(site);
    const bool x = (x_ >> site) & 1U;
    const bool z = (z_ >> site) & 1U;
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
  }

  /// Sorted list of sites carrying a non-identity factor.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> sites;
    for (std::uint64_t m = x_ | z_; m != 0; m &= m - 1) {
      sites.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    }
    return sites;
  }

  /// Sparse text form, e.g. "X3 Z5"; the identity renders as "I".
  std::string str() const {
    if (is_identity()) return "I";
    std::string out;
    for (std::size_t site : support()) {
      if (!out.empty()) out += ' ';
      out += at(site);
      out += std::to_string(site);
    }
    return out;
  }

  /// Dense letter form over all n sites, e.g. "IXZ".
  std::string dense_str() const {
    std::string out;
    for (std::size_t j = 0; j < n_; ++j) out += at(j);
    return out;
  }

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;

  /// Lexicographic on (z_mask, x_mask); this is the canonical iteration order.
  friend std::strong_ordering operator<=>(const PauliTerm& a, const PauliTerm& b) {
    if (auto c = a.z_ <=> b.z_; c != 0) return c;
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  void check_site(std::size_t site) const {
    if (site >= n_) {
      throw DimensionError("site " + std::to_string(site) + " out of range for " +
                           std::to_string(n_) + " qubits");
    }
  }

  void set(std::size_t site, char letter) {
    check_site(site);
    const std::uint64_t bit = std::uint64_t{1} << site;
    x_ &= ~bit;
    z_ &= ~bit;
    switch (letter) {
      case 'I': break;
      case 'X': x_ |= bit; break;
      case 'Y': x_ |= bit; z_ |= bit; break;
      case 'Z': z_ |= bit; break;
      default: throw DomainError(std::string("unknown Pauli letter '") + letter + "'");
    }
  }

  std::uint32_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

struct PauliTermHash {
  std::size_t operator()(const PauliTerm& p) const noexcept {
    std::uint64_t h = p.x_mask() * 0x9E3779B97F4A7C15ULL;
    h ^= p.z_mask() + 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ p.num_qubits());
  }
};

/// Unit phase of a Pauli product; the power of i in {0, 1, 2, 3}.
struct PauliProduct {
  int phase_exponent = 0;
  PauliTerm term;

  cplx phase() const {
    static constexpr cplx kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPowers[phase_exponent & 3];
  }
};

inline void check_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionError("qubit count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

/// p * q = phase * r with r = (p.x ^ q.x | p.z ^ q.z).
inline PauliProduct multiply(const PauliTerm& p, const PauliTerm& q) {
  check_same_size(p.num_qubits(), q.num_qubits());
  const std::uint64_t x1 = p.x_mask(), z1 = p.z_mask();
  const std::uint64_t x2 = q.x_mask(), z2 = q.z_mask();
  const std::uint64_t px = x1 & ~z1, py = x1 & z1, pz = ~x1 & z1;
  const std::uint64_t qx = x2 & ~z2, qy = x2 & z2, qz = ~x2 & z2;
  // XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
  const int plus = std::popcount((px & qy) | (py & qz) | (pz & qx));
  const int minus = std::popcount((px & qz) | (py & qx) | (pz & qy));
  return {((plus - minus) % 4 + 4) % 4, PauliTerm(p.num_qubits(), x1 ^ x2, z1 ^ z2)};
}

inline bool commutes(const PauliTerm& p, const PauliTerm& q) {
  check_same_size(p.num_qubits(), q.num_qubits());
  return std::popcount((p.x_mask() & q.z_mask()) ^ (p.z_mask() & q.x_mask())) % 2 == 0;
}

class PauliSum {
 public:
  using Map = std::map<PauliTerm, cplx>;
  using const_iterator = Map::const_iterator;

  PauliSum() = default;
  explicit PauliSum(std::size_t n) : n_(n) {
    if (n > kMaxQubits) throw DimensionError("PauliSum supports at most 64 qubits");
  }
  PauliSum(const PauliTerm& p, cplx coeff) : n_(p.num_qubits()) { add(p, coeff); }

  /// Builds a sum from ("X0 Z1", coeff) pairs.
  static PauliSum from_pairs(std::size_t n,
                             const std::vector<std::pair<std::string, cplx>>& pairs) {
    PauliSum s(n);
    for (const auto& [text, c] : pairs) s.add(PauliTerm::parse(n, text), c);
    return s;
  }

  std::size_t num_qubits() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  cplx coefficient(const PauliTerm& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? cplx{} : it->second;
  }

  /// Accumulates `coeff * p`; the entry is erased if it drops below kDropTolerance.
  PauliSum& add(const PauliTerm& p, cplx coeff) {
    check_same_size(n_, p.num_qubits());
    auto [it, inserted] = terms_.try_emplace(p, coeff);
    if (!inserted) it->second += coeff;
    if (std::abs(it->second) < kDropTolerance) terms_.erase(it);
    return *this;
  }

  PauliSum& operator+=(const PauliSum& other) {
    check_same_size(n_, other.n_);
    for (const auto& [p, c] : other.terms_) add(p, c);
    return *this;
  }

  PauliSum& operator-=(const PauliSum& other) {
    check_same_size(n_, other.n_);
    for (const auto& [p, c] : other.terms_) add(p, -c);
    return *this;
  }

  PauliSum& operator*=(cplx factor) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= factor;
      it = std::abs(it->second) < kDropTolerance ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  /// Sum of coefficient magnitudes; an upper bound on the spectral norm.
  double l1_norm() const {
    double s = 0.0;
    for (const auto& [p, c] : terms_) s += std::abs(c);
    return s;
  }

  double max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [p, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

  /// Bitwise union of all term supports.
  std::uint64_t support_mask() const {
    std::uint64_t m = 0;
    for (const auto& [p, c] : terms_) m |= p.support_mask();
    return m;
  }

  std::size_t max_weight() const {
    std::size_t w = 0;
    for (const auto& [p, c] : terms_) w = std::max(w, p.weight());
    return w;
  }

  /// One "<re> <im> <term>" line per term in canonical order.
  std::string str() const {
    std::string out;
    for (const auto& [p, c] : terms_) {
      out += format_double(c.real());
      out += ' ';
      out += format_double(c.imag());
      out += ' ';
      out += p.str();
      out += '\n';
    }
    return out;
  }

  /// Inverse of str().
  static PauliSum parse(std::size_t n, std::string_view text) {
    PauliSum s(n);
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      double re = 0.0, im = 0.0;
      if (!(ls >> re >> im)) throw DomainError("malformed PauliSum line '" + line + "'");
      std::string rest;
      std::getline(ls, rest);
      s.add(PauliTerm::parse(n, rest), {re, im});
    }
    return s;
  }

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

  static std::string format_double(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
  }

 private:
  std::size_t n_ = 0;
  Map terms_;
};

inline PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
inline PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
inline PauliSum operator*(cplx factor, PauliSum a) { return a *= factor; }
inline PauliSum scale(PauliSum a, cplx factor) { return a *= factor; }

/// Conjugates every coefficient; Pauli strings are Hermitian.
inline PauliSum adjoint(const PauliSum& a) {
  PauliSum out(a.num_qubits());
  for (const auto& [p, c] : a) out.add(p, std::conj(c));
  return out;
}

namespace detail {

inline PauliSum from_accumulator(std::size_t n,
                                 const std::unordered_map<PauliTerm, cplx, PauliTermHash>& acc) {
  PauliSum out(n);
  for (const auto& [p, c] : acc) {
    if (std::abs(c) >= kDropTolerance) out.add(p, c);
  }
  return out;
}

}  // namespace detail

/// Operator product a * b.
inline PauliSum product(const PauliSum& a, const PauliSum& b) {
  check_same_size(a.num_qubits(), b.num_qubits());
  std::unordered_map<PauliTerm, cplx, PauliTermHash> acc;
  for (const auto& [p, cp] : a) {
    for (const auto& [q, cq] : b) {
      const PauliProduct r = multiply(p, q);
      acc[r.term] += r.phase() * cp * cq;
    }
  }
  return detail::from_accumulator(a.num_qubits(), acc);
}

/// [a, b] = ab - ba. Only anticommuting pairs contribute, each as 2pq.
inline PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  check_same_size(a.num_qubits(), b.num_qubits());
  std::unordered_map<PauliTerm, cplx, PauliTermHash> acc;
  for (const auto& [p, cp] : a) {
    const std::uint64_t ps = p.support_mask();
    for (const auto& [q, cq] : b) {
      if ((ps & q.support_mask()) == 0 || commutes(p, q)) continue;
      const PauliProduct r = multiply(p, q);
      acc[r.term] += 2.0 * r.phase() * cp * cq;
    }
  }
  return detail::from_accumulator(a.num_qubits(), acc);
}

inline std::vector<std::size_t> support(const PauliTerm& p) { return p.support(); }

/// True iff every coefficient has |Re c| <= tol.
inline bool is_anti_hermitian(const PauliSum& a, double tol) {
  if (tol < 0) throw DomainError("tolerance must be non-negative");
  for (const auto& [p, c] : a) {
    if (std::abs(c.real()) > tol) return false;
  }
  return true;
}

/// True iff every coefficient has |Im c| <= tol.
inline bool is_hermitian(const PauliSum& a, double tol) {
  if (tol < 0) throw DomainError("tolerance must be non-negative");
  for (const auto& [p, c] : a) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

/// Largest coefficient-wise difference between two sums.
inline double max_coefficient_distance(const PauliSum& a, const PauliSum& b) {
  return (a - b).max_abs_coefficient();
}

}  // namespace ipm
