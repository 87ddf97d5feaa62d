// reduction.hh
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
//
// Minimisation of linear representations by reachability and
// co-reachability reduction, plus exact zeroness and series-equivalence
// decisions built on top of it.

#ifndef LINREP_REDUCTION_HH
#define LINREP_REDUCTION_HH

#include <vector>

#include "linrep/representation.hh"

namespace linrep {

/// Basis of the row space spanned by {entry * M(b) : b a word}, together
/// with one witness word per basis vector: vector i equals
/// entry * word_matrix(witnesses[i]) exactly, and the span is closed under
/// right-multiplication by every letter matrix.
struct ReachabilityBasis {
  Basis<RowVector> basis;
  std::vector<Word> witnesses;
};

/// Symmetric construction on column vectors: spans {M(b) * exit}, closed
/// under left-multiplication by every letter matrix.
struct CoreachabilityBasis {
  Basis<ColVector> basis;
  std::vector<Word> witnesses;
};

/// Worklist closure, seeded with the entry vector (skipped when zero),
/// FIFO over pending basis vectors with letters taken in ascending order.
/// Deterministic, so reduced representations are bit-stable.
ReachabilityBasis reachability_basis(const LinearRepresentation& rep);
CoreachabilityBasis coreachability_basis(const LinearRepresentation& rep);

/// Restricts the representation to its reachability span. The result has
/// dimension |reachability basis| and defines the same series on every
/// word.
LinearRepresentation left_reduce(const LinearRepresentation& rep);

/// Mirror image of left_reduce on the co-reachability span.
LinearRepresentation right_reduce(const LinearRepresentation& rep);

/// right_reduce(left_reduce(rep)): a minimal representation of the same
/// series. Minimality is certified in the test suite against the truncated
/// Hankel rank rather than re-proved here.
LinearRepresentation minimise(const LinearRepresentation& rep);

/// True iff the series vanishes on every word, decided exactly via the
/// reachability basis.
bool is_zero_series(const LinearRepresentation& rep);

/// Exact equivalence of two series over the same alphabet: forms the
/// difference representation (entry (u1 | -u2), block-diagonal matrices,
/// stacked exits) and tests it for zeroness. Throws std::invalid_argument
/// when the alphabet sizes differ.
bool series_equal(const LinearRepresentation& a, const LinearRepresentation& b);

}  // namespace linrep

#endif  // LINREP_REDUCTION_HH
