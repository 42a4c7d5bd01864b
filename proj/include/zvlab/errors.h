// Copyright 2026 The zvlab Authors
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

#ifndef ZVLAB_ERRORS_H
#define ZVLAB_ERRORS_H

#include <stdexcept>
#include <string>

namespace zvlab {

/// Operand sizes disagree (qubit counts, vector lengths, table shapes).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds the desk-scale memory ceiling (state vectors, dense matrices).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An operator that must be Hermitian produced a non-negligible imaginary part.
class HermiticityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Linear solve or factorization failed after regularization.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document; the message carries the field path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zvlab

#endif  // ZVLAB_ERRORS_H
