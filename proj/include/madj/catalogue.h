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

// Named fixtures.
//
//   fano             PG(2,2) over GF(2)
//   pg:D,Q           PG(D,Q) over GF(Q), Q prime
//   u:R,N[:p=P]      uniform matroid with generic columns over GF(P); the
//   uniform:R,N[:p=P]  default P is the least prime >= max(N - 1, 2)
//   vamos            the Vamos matroid, basis-backed
//   nonfano          the non-Fano plane over GF(3)
//   A+B              direct sum, left to right
//
// Projective-geometry points are the normalized vectors (first nonzero
// entry 1) in increasing base-Q order with the first coordinate most
// significant, and are named by their coordinate strings ("001", ...).

#ifndef MADJ_CATALOGUE_H_
#define MADJ_CATALOGUE_H_

#include <string>
#include <vector>

#include "madj/field.h"
#include "madj/matroid.h"

namespace madj {

// Throws std::invalid_argument for unknown or malformed names.
Matroid ResolveFixture(const std::string& name);

Matroid ProjectiveGeometry(int dimension, int q);

// r x n columns over GF(p) with every r of them independent: the unit
// vectors, then moment-curve points (1, x, ..., x^{r-1}), then all
// normalized vectors, chosen by backtracking. Throws std::invalid_argument
// when GF(p) has no such configuration.
FieldMatrix GenericColumns(int r, int n, int p);
Matroid Uniform(int r, int n, int p);
Matroid Uniform(int r, int n);

Matroid Vamos();
Matroid NonFano();

// Names accepted by ResolveFixture, for help text.
std::vector<std::string> FixtureExamples();

}  // namespace madj

#endif  // MADJ_CATALOGUE_H_
