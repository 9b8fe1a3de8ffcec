// Copyright 2026 The Authors.
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

#ifndef STEINER_ERRORS_HPP_
#define STEINER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace steiner {

// Malformed or inconsistent caller input (unknown labels, axiom violations).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact search would exceed its configured size limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction produced something a caller-supplied constraint forbids.
class ConstraintViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace steiner

#endif  // STEINER_ERRORS_HPP_
