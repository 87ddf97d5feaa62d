// reduction.cc
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

#include "linrep/reduction.hh"

#include <queue>
#include <stdexcept>

namespace linrep {

ReachabilityBasis reachability_basis(const LinearRepresentation& rep) {
  ReachabilityBasis out{Basis<RowVector>(rep.dimension()), {}};
  std::queue<std::size_t> pending;
  if (out.basis.try_insert(rep.entry()).independent) {
    out.witnesses.push_back(Word{});
    pending.push(0);
  }
  while (!pending.empty()) {
    const std::size_t i = pending.front();
    pending.pop();
    const RowVector v = out.basis.vector(i);
    const Word witness = out.witnesses[i];
    for (Letter a = 0; a < rep.alphabet_size(); ++a) {
      if (out.basis.try_insert(v * rep.matrix(a)).independent) {
        Word extended = witness;
        extended.push_back(a);
        out.witnesses.push_back(std::move(extended));
        pending.push(out.basis.size() - 1);
      }
    }
  }
  return out;
}

CoreachabilityBasis coreachability_basis(const LinearRepresentation& rep) {
  CoreachabilityBasis out{Basis<ColVector>(rep.dimension()), {}};
  std::queue<std::size_t> pending;
  if (out.basis.try_insert(rep.exit()).independent) {
    out.witnesses.push_back(Word{});
    pending.push(0);
  }
  while (!pending.empty()) {
    const std::size_t i = pending.front();
    pending.pop();
    const ColVector v = out.basis.vector(i);
    const Word witness = out.witnesses[i];
    for (Letter a = 0; a < rep.alphabet_size(); ++a) {
      if (out.basis.try_insert(rep.matrix(a) * v).independent) {
        Word extended;
        extended.reserve(witness.size() + 1);
        extended.push_back(a);
        extended.insert(extended.end(), witness.begin(), witness.end());
        out.witnesses.push_back(std::move(extended));
        pending.push(out.basis.size() - 1);
      }
    }
  }
  return out;
}

namespace {

std::vector<Rational> coordinates_or_fail(const Basis<RowVector>& basis,
                                          const RowVector& v) {
  auto coords = basis.coordinates(v);
  if (!coords) throw std::logic_error("reachability closure is not closed");
  return std::move(*coords);
}

std::vector<Rational> coordinates_or_fail(const Basis<ColVector>& basis,
                                          const ColVector& v) {
  auto coords = basis.coordinates(v);
  if (!coords) throw std::logic_error("co-reachability closure is not closed");
  return std::move(*coords);
}

}  // namespace

LinearRepresentation left_reduce(const LinearRepresentation& rep) {
  const ReachabilityBasis reach = reachability_basis(rep);
  const std::size_t k = reach.basis.size();

  // Entry vector in basis coordinates. When the entry vector is zero the
  // basis is empty and the result is the 0-dimensional representation.
  RowVector entry(k);
  if (k > 0) {
    const std::vector<Rational> coords =
        coordinates_or_fail(reach.basis, rep.entry());
    for (std::size_t j = 0; j < k; ++j) entry.at(j) = coords[j];
  }

  // Row i of the reduced matrix for letter a solves
  // basis_i * M(a) = sum_j out(a)[i][j] * basis_j.
  std::vector<Matrix> matrices(rep.alphabet_size(), Matrix(k, k));
  for (Letter a = 0; a < rep.alphabet_size(); ++a) {
    for (std::size_t i = 0; i < k; ++i) {
      const std::vector<Rational> coords = coordinates_or_fail(
          reach.basis, reach.basis.vector(i) * rep.matrix(a));
      for (std::size_t j = 0; j < k; ++j) matrices[a].at(i, j) = coords[j];
    }
  }

  ColVector exit(k);
  for (std::size_t i = 0; i < k; ++i) {
    exit.at(i) = dot(reach.basis.vector(i), rep.exit());
  }

  return LinearRepresentation(rep.alphabet_size(), std::move(entry),
                              std::move(matrices), std::move(exit));
}

LinearRepresentation right_reduce(const LinearRepresentation& rep) {
  const CoreachabilityBasis coreach = coreachability_basis(rep);
  const std::size_t k = coreach.basis.size();

  ColVector exit(k);
  if (k > 0) {
    const std::vector<Rational> coords =
        coordinates_or_fail(coreach.basis, rep.exit());
    for (std::size_t j = 0; j < k; ++j) exit.at(j) = coords[j];
  }

  // Column j of the reduced matrix for letter a solves
  // M(a) * basis_j = sum_i out(a)[i][j] * basis_i.
  std::vector<Matrix> matrices(rep.alphabet_size(), Matrix(k, k));
  for (Letter a = 0; a < rep.alphabet_size(); ++a) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::vector<Rational> coords = coordinates_or_fail(
          coreach.basis, rep.matrix(a) * coreach.basis.vector(j));
      for (std::size_t i = 0; i < k; ++i) matrices[a].at(i, j) = coords[i];
    }
  }

  RowVector entry(k);
  for (std::size_t j = 0; j < k; ++j) {
    entry.at(j) = dot(rep.entry(), coreach.basis.vector(j));
  }

  return LinearRepresentation(rep.alphabet_size(), std::move(entry),
                              std::move(matrices), std::move(exit));
}

LinearRepresentation minimise(const LinearRepresentation& rep) {
  return right_reduce(left_reduce(rep));
}

bool is_zero_series(const LinearRepresentation& rep) {
  const ReachabilityBasis reach = reachability_basis(rep);
  for (std::size_t i = 0; i < reach.basis.size(); ++i) {
    if (!dot(reach.basis.vector(i), rep.exit()).is_zero()) return false;
  }
  return true;
}

bool series_equal(const LinearRepresentation& a, const LinearRepresentation& b) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw std::invalid_argument("alphabet size mismatch");
  }
  const std::size_t da = a.dimension();
  const std::size_t db = b.dimension();

  RowVector entry(da + db);
  for (std::size_t i = 0; i < da; ++i) entry.at(i) = a.entry().at(i);
  for (std::size_t i = 0; i < db; ++i) entry.at(da + i) = -b.entry().at(i);

  std::vector<Matrix> matrices;
  matrices.reserve(a.alphabet_size());
  for (Letter l = 0; l < a.alphabet_size(); ++l) {
    Matrix m(da + db, da + db);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) m.at(i, j) = a.matrix(l).at(i, j);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < db; ++j)
        m.at(da + i, da + j) = b.matrix(l).at(i, j);
    matrices.push_back(std::move(m));
  }

  ColVector exit(da + db);
  for (std::size_t i = 0; i < da; ++i) exit.at(i) = a.exit().at(i);
  for (std::size_t i = 0; i < db; ++i) exit.at(da + i) = b.exit().at(i);

  return is_zero_series(LinearRepresentation(
      a.alphabet_size(), std::move(entry), std::move(matrices), std::move(exit)));
}

}  // namespace linrep
