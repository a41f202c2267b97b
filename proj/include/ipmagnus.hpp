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

#include "ipmagnus/circuit.hpp"
#include "ipmagnus/dense.hpp"
#include "ipmagnus/errors.hpp"
#include "ipmagnus/experiment.hpp"
#include "ipmagnus/fit.hpp"
#include "ipmagnus/hamiltonian_io.hpp"
#include "ipmagnus/lightcone.hpp"
#include "ipmagnus/magnus.hpp"
#include "ipmagnus/model.hpp"
#include "ipmagnus/oracle.hpp"
#include "ipmagnus/pauli.hpp"
#include "ipmagnus/quadrature.hpp"
#include "ipmagnus/simulate.hpp"
