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

// Adjoints of matroids: certificates, the adjoint map on flats, the
// normal-vector adjoint of a represented matroid, and iteration of that
// construction.
//
// An adjoint of M is a matroid N of the same rank whose elements are
// labeled by the hyperplanes of M such that, for every element e of M, the
// set H[e] of hyperplanes through e is a hyperplane of N. Certificates are
// checked in exactly that form.

#ifndef MADJ_ADJOINT_H_
#define MADJ_ADJOINT_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "madj/field.h"
#include "madj/iso.h"
#include "madj/matroid.h"

namespace madj {

class AdjointCertificate {
 public:
  const Matroid& base() const { return base_; }
  const Matroid& candidate() const { return candidate_; }
  // Hyperplanes of base() in canonical (mask) order.
  const std::vector<Flat>& hyperplanes() const { return hyperplanes_; }
  // labeling()[n] indexes hyperplanes() for element n of candidate().
  const std::vector<int>& labeling() const { return labeling_; }
  // Inverse of labeling(): hyperplane index -> candidate element.
  const std::vector<int>& element_of_hyperplane() const { return element_of_; }

  bool rank_equal() const { return rank_equal_; }
  // Per element e of base(): H[e] pulls back to a hyperplane of candidate().
  const std::vector<bool>& element_checks() const { return element_ok_; }

  bool ok() const;
  // First element of base() whose H[e] fails, or -1.
  int failing_element() const;
  // Empty when ok().
  std::string failure() const;

  // Elements of candidate() labeled by hyperplanes containing e.
  SubsetMask House(int e) const;
  // Elements of candidate() labeled by hyperplanes containing `flat`.
  SubsetMask ImageOf(SubsetMask flat) const;

 private:
  friend AdjointCertificate VerifyAdjoint(const Matroid&, const Matroid&,
                                          const std::vector<int>&);
  AdjointCertificate(Matroid base, Matroid candidate)
      : base_(std::move(base)), candidate_(std::move(candidate)) {}

  Matroid base_;
  Matroid candidate_;
  std::vector<Flat> hyperplanes_;
  std::vector<int> labeling_;
  std::vector<int> element_of_;
  bool rank_equal_ = false;
  std::vector<bool> element_ok_;
};

// Checks N against M under `labeling` (element n of N -> index into
// Hyperplanes(M)). Throws std::invalid_argument if the labeling is not a
// bijection or M has loops. The result reports success or the offending
// element; it never throws for a mere non-adjoint.
AdjointCertificate VerifyAdjoint(const Matroid& m, const Matroid& n,
                                 const std::vector<int>& labeling);

// phi(X) = {H : X subset H} for every flat X of the base matroid.
class AdjointMap {
 public:
  // Computes phi on every flat and checks injectivity, order reversal,
  // cover reversal, rank complement r_N(phi X) = r(M) - r_M(X),
  // phi(X v Y) = phi(X) ^ phi(Y), modularity of every image pair, and
  // independence of labels along strictly decreasing hyperplane chains.
  // Throws std::invalid_argument if !cert.ok() and RefutationError on any
  // violated property.
  static AdjointMap Build(const AdjointCertificate& cert);

  const std::vector<Flat>& flats() const { return flats_; }    // of M
  const std::vector<Flat>& images() const { return images_; }  // flats of N
  // Image of a flat of M; throws std::invalid_argument for non-flats.
  Flat Image(SubsetMask flat) const;
  // Number of hyperplane chains whose labels were checked for independence.
  long chains_checked() const { return chains_checked_; }

 private:
  std::vector<Flat> flats_;
  std::vector<Flat> images_;
  long chains_checked_ = 0;
};

// cl(B - e). Throws std::invalid_argument unless B is a basis containing e.
Flat FundamentalHyperplane(const Matroid& m, SubsetMask basis, int e);

// Whether the fundamental hyperplanes of `basis`, read as elements of
// cert.candidate(), form a basis there.
bool CheckFundamentalBasis(const AdjointCertificate& cert, SubsetMask basis);

struct SigmaResult {
  // Simple input actually used (equal to the argument when already simple).
  Matroid base;
  // Element i is labeled by hyperplanes[i] of `base`.
  Matroid matroid;
  std::vector<Flat> hyperplanes;
  std::vector<FieldVector> normals;
  // Set when the input had loops or parallel elements.
  std::optional<std::string> warning;
  std::optional<std::vector<std::optional<int>>> simplification;
};

// The vector matroid of the projectively normalized normal vectors of the
// hyperplanes of a represented matroid. Non-simple input is simplified
// first (reported in `warning`). Throws std::invalid_argument for
// basis-backed input and InternalError if a hyperplane's columns do not
// span a codimension-one subspace or the result is not an adjoint.
SigmaResult Sigma(const Matroid& m);

// Certificate for (result.base, result.matroid) with the natural labeling.
AdjointCertificate SigmaCertificate(const SigmaResult& result);

struct ProjectiveType {
  enum class Kind { kFree, kLine, kProjectiveGeometry };
  Kind kind;
  int rank = 0;
  int q = 0;     // order of the field; 0 unless kProjectiveGeometry
  int size = 0;  // |E|
  std::string Name() const;  // "U_{1,1}", "U_{2,5}", "PG(2,3)"
};

// Requires a simple matroid. Rank 1 and 2 are tagged as U_{1,1} / U_{2,m}.
// Rank >= 3: connected and modular gives PG(r-1, q) where q + 1 is the
// common size of the rank-2 flats; the point count (q^r - 1)/(q - 1) is
// verified and a mismatch is an InternalError.
std::optional<ProjectiveType> RecognizeProjective(const Matroid& m);

// Certificate for (M1 + M2, N1 + N2) where each hyperplane of the sum is
// H1 + E2 or E1 + H2. Throws RefutationError if the composed certificate
// fails.
AdjointCertificate ComposeDirectSumAdjoint(const AdjointCertificate& first,
                                           const AdjointCertificate& second);

// Decides whether two iterates are isomorphic. May throw ResourceError.
using IsoOracle = std::function<bool(const Matroid&, const Matroid&)>;

struct SequenceOptions {
  int max_iter = 8;
  int size_cap = 2000;
  IsoOracle iso;  // MatroidIso when empty
};

struct IterateSummary {
  int size = 0;
  int rank = 0;
  std::optional<bool> modular;  // empty above the enumeration cap
  std::optional<ProjectiveType> projective;
  std::optional<Fingerprint> fingerprint;
};

struct SequenceReport {
  enum class Verdict { kStabilized, kTwoCycle, kCapExceeded };
  std::vector<IterateSummary> iterates;
  Verdict verdict = Verdict::kCapExceeded;
  int index = 0;  // k in stabilized-at(k) / two-cycle(k); last index otherwise
  // Iterates k with |E_{k+2}| < |E_k|; each one contradicts the
  // second-adjoint embedding.
  std::vector<int> shrinking_steps;
  std::string cap_reason;

  std::string VerdictString() const;  // "stabilized-at(0)" etc.
};

// Iterates Sigma from the simplification of m.
SequenceReport SigmaSequence(const Matroid& m, const SequenceOptions& options = {});

struct EmbeddingReport {
  // Element e of M -> element of sigma^2 M labeled by the hyperplane H[e] of
  // sigma M.
  std::vector<int> image;
  long subsets_checked = 0;
  long independence_failures = 0;
  long rank_failures = 0;
  bool ok() const { return independence_failures == 0 && rank_failures == 0; }
};

// Exhaustive over all subsets of a simple represented matroid with at most
// 16 elements.
EmbeddingReport CheckSecondAdjointEmbedding(const Matroid& m);

}  // namespace madj

#endif  // MADJ_ADJOINT_H_
