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

// Matroid files: one JSON object per file, in one of three shapes with a
// fixed field order.
//
//   {"kind":"linear","p":2,"rows":3,"cols":7,"columns":[[0,0,1],...]}
//   {"kind":"bases","m":4,"rank":2,"bases":[[0,1],[0,2],...]}
//   {"kind":"fixture","name":"fano"}
//
// Linear and bases files may carry a trailing "names" array.

#ifndef MADJ_MATROID_IO_H_
#define MADJ_MATROID_IO_H_

#include <stdexcept>
#include <string>

#include "madj/matroid.h"

namespace madj {

// Malformed text or fields. The message starts with "line N" for syntax
// errors and with the offending field name otherwise.
class MatroidFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws MatroidFormatError, NotAMatroidError (bases failing exchange) or
// std::invalid_argument (unknown fixture).
Matroid ParseMatroidFile(const std::string& text);

// Single line, no trailing newline. Names are written only when some
// element has a non-default name.
std::string SerializeMatroid(const Matroid& m);

// A fixture name, or a path to a matroid file when one exists there.
Matroid LoadMatroid(const std::string& source);

}  // namespace madj

#endif  // MADJ_MATROID_IO_H_
