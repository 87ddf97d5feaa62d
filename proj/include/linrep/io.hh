// io.hh
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
// The on-disk representation document: a JSON object with all scalars as
// exact rational strings ("-3", "5/7"), never floats.
//
//   {
//     "field": "Q",
//     "q": 2,
//     "dim": 2,
//     "u": ["1", "0"],
//     "matrices": [[["1", "1"], ["0", "0"]], [["1", "0"], ["0", "0"]]],
//     "w": ["0", "1"],
//     "name": "optional",
//     "description": "optional"
//   }
//
// Serialisation is canonical (sorted keys, two-space indent, canonical
// rational strings, trailing newline), so saving a loaded document is
// byte-stable.

#ifndef LINREP_IO_HH
#define LINREP_IO_HH

#include <optional>
#include <stdexcept>
#include <string>

#include "linrep/representation.hh"

namespace linrep {

/// Raised for malformed documents; the message names the offending field,
/// e.g. "matrices[0][1]: expected 2 entries, got 3".
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RepresentationDocument {
  LinearRepresentation rep;
  std::optional<std::string> name;
  std::optional<std::string> description;
};

RepresentationDocument parse_document(const std::string& text);
std::string format_document(const RepresentationDocument& doc);

/// File variants; "-" means stdin / stdout.
RepresentationDocument load_document(const std::string& path);
void save_document(const RepresentationDocument& doc, const std::string& path);

}  // namespace linrep

#endif  // LINREP_IO_HH
