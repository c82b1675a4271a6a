// Copyright 2026 the gpnet authors
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

#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace gpnet {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Invalid request given the model/data at hand (unknown node, bad query, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed configuration or command-line usage. CLI maps this to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear-algebra failure that survived the jitter escalation policy.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural capacity guard (e.g. exhaustive DAG enumeration beyond n=4).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gpnet
