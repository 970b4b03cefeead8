// Copyright 2026 The aucteq Authors. All rights reserved.
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

#ifndef AUCTEQ_ERRORS_HPP_
#define AUCTEQ_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace aucteq {

// Base class for everything aucteq throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed us arguments or serialized data that are malformed or out of
// the documented domain. Data off by more than the stated tolerance is
// rejected, never silently repaired.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Argument outside the documented domain of an evaluation (CDF evaluated
// past its top, quantile outside [0, 1], ...).
class RangeError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Structured data violates one of its documented invariants (probability
// mass, monotonicity, share consistency, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// An operation was invoked outside its contract (e.g. a check that only
// applies to verified equilibria).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A numeric construction could not proceed (bracket without sign change,
// target outside the attainable range, infeasible program where a solution
// was required).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace aucteq

#endif  // AUCTEQ_ERRORS_HPP_
