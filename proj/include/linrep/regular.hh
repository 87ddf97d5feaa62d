// regular.hh
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
// The integer-sequence layer on top of series: properness (M(0) fixes the
// exit vector), compatibility, repair of improper representations, and
// sequence-level minimisation and equivalence.
//
// A representation read as a sequence takes the value of its series at the
// canonical digit expansion of the index. Trailing zeros on a word do not
// change the index, so only representations with M(0) * exit = exit
// ("proper" ones) have a series that is consistent with that reading; for
// all others the digit recursion is contradictory at index 0 and series
// minimisation does not minimise the sequence. The functions here make the
// repair explicit instead of leaving that trap open.

#ifndef LINREP_REGULAR_HH
#define LINREP_REGULAR_HH

#include "linrep/representation.hh"

namespace linrep {

/// True iff M(0) * exit = exit, exactly. Dimension 0 is proper.
bool is_proper(const LinearRepresentation& rep);

/// True iff the series is invariant under appending the letter 0 to any
/// word. Decided exactly as is_proper(minimise(rep)), which is equivalent
/// for minimal representations.
bool is_compatible_series(const LinearRepresentation& rep);

/// Builds a proper representation of dimension D+1 whose series at b equals
/// rep's series at strip_trailing_zeros(b). The extra coordinate latches
/// the series value of the stripped prefix: reading 0 leaves the latch
/// untouched, reading a nonzero letter re-latches.
///
///   entry' = (entry | entry.exit)
///   M'(0)  = [[M(0), 0], [0, 1]]
///   M'(a)  = [[M(a), M(a)*exit], [0, 0]]   for a != 0
///   exit'  = (0, ..., 0, 1)^T
LinearRepresentation properise(const LinearRepresentation& rep);

/// Minimal representation of the SEQUENCE denoted by rep. Proper inputs are
/// minimised directly (the minimal series representation is then also a
/// minimal sequence representation); improper inputs are properised first
/// instead of being rejected. The output is always proper.
LinearRepresentation minimise_regular(const LinearRepresentation& rep);

/// True iff both representations denote the same integer-indexed sequence;
/// decided exactly as series equality of the properised representations.
/// Throws std::invalid_argument when the alphabet sizes differ.
bool sequence_equal(const LinearRepresentation& a, const LinearRepresentation& b);

}  // namespace linrep

#endif  // LINREP_REGULAR_HH
