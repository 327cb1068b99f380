// Copyright 2026 The padiccf Authors
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

#include <stdexcept>
#include <string>

namespace padiccf {

// A square root in Q_p was requested for a non-residue.
class NotAResidueError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A state the underlying theory rules out. Reaching it means either a bug
// or a counterexample to a theorem, so it is never swallowed.
class ImpossibleStateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An identity that is checked on every run failed to verify.
class InvariantViolationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace padiccf
