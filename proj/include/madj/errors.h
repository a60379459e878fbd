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

#ifndef MADJ_ERRORS_H_
#define MADJ_ERRORS_H_

#include <stdexcept>
#include <string>

namespace madj {

// An enumeration or search limit was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that does not satisfy the matroid axioms.
class NotAMatroidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two independent computations that must agree did not. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A property that the theory guarantees failed on concrete input. Carries a
// human-readable witness. The CLI maps this to exit status 1.
class RefutationError : public std::runtime_error {
 public:
  RefutationError(const std::string& what, std::string witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

}  // namespace madj

#endif  // MADJ_ERRORS_H_
