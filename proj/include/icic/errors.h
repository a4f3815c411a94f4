// Copyright 2026 The ICIC Scheduler Authors
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

#ifndef ICIC_ERRORS_H_
#define ICIC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace icic {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters or configuration values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// No flow satisfies the supplies within the arc capacities.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Node supplies do not sum to zero.
class UnbalancedError : public Error {
 public:
  using Error::Error;
};

// A sector did not receive a message it was entitled to.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search would exceed its enumeration budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace icic

#endif  // ICIC_ERRORS_H_
