// regular.cc
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

#include "linrep/regular.hh"

#include "linrep/reduction.hh"

namespace linrep {

bool is_proper(const LinearRepresentation& rep) {
  return rep.matrix(0) * rep.exit() == rep.exit();
}

bool is_compatible_series(const LinearRepresentation& rep) {
  return is_proper(minimise(rep));
}

LinearRepresentation properise(const LinearRepresentation& rep) {
  const std::size_t dim = rep.dimension();

  RowVector entry(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) entry.at(i) = rep.entry().at(i);
  entry.at(dim) = dot(rep.entry(), rep.exit());

  std::vector<Matrix> matrices;
  matrices.reserve(rep.alphabet_size());
  for (Letter a = 0; a < rep.alphabet_size(); ++a) {
    Matrix m(dim + 1, dim + 1);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rep.matrix(a).at(i, j);
    if (a == 0) {
      m.at(dim, dim) = 1;
    } else {
      const ColVector latched = rep.matrix(a) * rep.exit();
      for (std::size_t i = 0; i < dim; ++i) m.at(i, dim) = latched.at(i);
    }
    matrices.push_back(std::move(m));
  }

  ColVector exit(dim + 1);
  exit.at(dim) = 1;

  return LinearRepresentation(rep.alphabet_size(), std::move(entry),
                              std::move(matrices), std::move(exit));
}

LinearRepresentation minimise_regular(const LinearRepresentation& rep) {
  if (is_proper(rep)) {
    return minimise(rep);
  }
  return minimise(properise(rep));
}

bool sequence_equal(const LinearRepresentation& a, const LinearRepresentation& b) {
  // Properised series carry the sequence value on every word, trailing
  // zeros included, so sequence equality reduces to series equality there.
  return series_equal(properise(a), properise(b));
}

}  // namespace linrep
