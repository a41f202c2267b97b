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

// Hamiltonian JSON documents:
//   {"n": 12, "boundary": "open",
//    "terms": [{"sites": [0, 1], "pauli": "XX", "coeff": {"re": 0.3, "im": 0.0}}, ...]}
// Each entry is one Pauli string on the listed sites. Entries carrying the same
// optional integer "term" field are merged into one LocalTerm; entries without
// it each form their own term.

#include <fstream>
#include <map>
#include "json.hpp"
#include <string>

#include "ipmagnus/model.hpp"

namespace ipm {

using json = nlohmann::json;

namespace detail {

inline json pauli_entry(const PauliTerm& p, cplx c) {
  std::vector<std::size_t> sites = p.support();
  std::string letters;
  for (std::size_t s : sites) letters += p.at(s);
  return json{{"sites", sites}, {"pauli", letters}, {"coeff", {{"re", c.real()}, {"im", c.imag()}}}};
}

}  // namespace detail

inline json hamiltonian_to_json(const LocalHamiltonian& h) {
  json terms = json::array();
  for (std::size_t k = 0; k < h.terms().size(); ++k) {
    const LocalTerm& t = h.terms()[k];
    const bool simple = t.op().size() == 1 && t.op().begin()->first.support() == t.support();
    if (simple) {
      terms.push_back(detail::pauli_entry(t.op().begin()->first, t.op().begin()->second));
      continue;
    }
    // Multi-string terms keep their declared support so they round-trip exactly.
    for (const auto& [p, c] : t.op()) {
      std::string letters;
      for (std::size_t s : t.support()) letters += p.at(s);
      terms.push_back(json{{"sites", t.support()},
                           {"pauli", letters},
                           {"coeff", {{"re", c.real()}, {"im", c.imag()}}},
                           {"term", k}});
    }
  }
  return json{{"n", h.num_qubits()}, {"boundary", to_string(h.lattice().boundary())}, {"terms", terms}};
}

inline LocalHamiltonian hamiltonian_from_json(const json& doc) {
  const std::size_t n = doc.at("n").get<std::size_t>();
  const Boundary boundary = parse_boundary(doc.value("boundary", std::string("open")));
  // Terms are emitted in order of first appearance.
  std::vector<std::pair<std::vector<std::size_t>, PauliSum>> pending;
  std::map<long long, std::size_t> group_slot;
  for (const auto& e : doc.at("terms")) {
    const auto sites = e.at("sites").get<std::vector<std::size_t>>();
    const json& coeff = e.at("coeff");
    const cplx c(coeff.value("re", 0.0), coeff.value("im", 0.0));
    const PauliTerm p = PauliTerm::on_sites(n, e.at("pauli").get<std::string>(), sites);
    std::size_t slot = pending.size();
    if (e.contains("term")) {
      auto [it, inserted] = group_slot.try_emplace(e.at("term").get<long long>(), pending.size());
      slot = it->second;
      if (!inserted) {
        auto& declared = pending[slot].first;
        declared.insert(declared.end(), sites.begin(), sites.end());
        pending[slot].second.add(p, c);
        continue;
      }
    }
    pending.emplace_back(sites, PauliSum(n));
    pending[slot].second.add(p, c);
  }
  LocalHamiltonian h(Lattice1D(n, boundary));
  for (auto& [sites, op] : pending) h.add(LocalTerm(std::move(sites), std::move(op)));
  return h;
}

/// A Pauli sum in the same document shape; sites are each term's support.
inline json pauli_sum_to_json(const PauliSum& s, Boundary boundary = Boundary::open) {
  json terms = json::array();
  for (const auto& [p, c] : s) terms.push_back(detail::pauli_entry(p, c));
  return json{{"n", s.num_qubits()}, {"boundary", to_string(boundary)}, {"terms", terms}};
}

inline PauliSum pauli_sum_from_json(const json& doc) {
  const std::size_t n = doc.at("n").get<std::size_t>();
  PauliSum s(n);
  for (const auto& e : doc.at("terms")) {
    const json& coeff = e.at("coeff");
    s.add(PauliTerm::on_sites(n, e.at("pauli").get<std::string>(), e.at("sites").get<std::vector<std::size_t>>()),
          cplx(coeff.value("re", 0.0), coeff.value("im", 0.0)));
  }
  return s;
}

inline LocalHamiltonian load_hamiltonian(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open Hamiltonian file '" + path + "'");
  return hamiltonian_from_json(json::parse(in));
}

inline void save_json(const json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
}

}  // namespace ipm
