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

#include <stdexcept>
#include <string>

namespace ipm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different qubit counts, or a matrix has the wrong shape.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the domain an operation accepts.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A support or register is too large for dense evaluation.
class OversizedError : public Error {
 public:
  using Error::Error;
};

/// A generator that must be Hermitian (or anti-Hermitian) is not.
class HermiticityError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

/// An eigenphase sits on the branch cut of the principal logarithm.
class BranchCutError : public Error {
 public:
  using Error::Error;
};

}  // namespace ipm
