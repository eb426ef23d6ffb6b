// Copyright 2026 The Cartier Authors
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

#ifndef CARTIER_LINALG_HPP
#define CARTIER_LINALG_HPP

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cartier/field.hpp"

namespace cartier {

/// Incremental row echelon form over F_p for sparse rows.  Rows are lists of
/// (column, value) pairs sorted by column; each stored pivot row is
/// normalized so that its first entry is 1.
class SparseEchelon {
 public:
  using Row = std::vector<std::pair<std::size_t, Coeff>>;

  explicit SparseEchelon(const PrimeField& field) : field_(field) {}

  /// Reduces `row` against the stored pivots.  Returns true (and stores the
  /// reduced row as a new pivot) iff it was linearly independent.
  bool insert(Row row);

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  Row reduce(Row row) const;

  PrimeField field_;
  std::unordered_map<std::size_t, Row> pivots_;
};

}  // namespace cartier

#endif  // CARTIER_LINALG_HPP
