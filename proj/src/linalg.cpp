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

#include "cartier/linalg.hpp"

namespace cartier {

SparseEchelon::Row SparseEchelon::reduce(Row row) const {
  // Every pivot row starts at its pivot column, so eliminating the leading
  // entry only ever produces larger leading columns.
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) return row;
    const Row& piv = it->second;
    Coeff factor = field_.neg(row.front().second);
    Row next;
    next.reserve(row.size() + piv.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < piv.size()) {
      if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
        next.push_back(row[i++]);
      } else if (i == row.size() || piv[j].first < row[i].first) {
        next.emplace_back(piv[j].first, field_.mul(factor, piv[j].second));
        ++j;
      } else {
        Coeff v = field_.add(row[i].second, field_.mul(factor, piv[j].second));
        if (v != 0) next.emplace_back(row[i].first, v);
        ++i;
        ++j;
      }
    }
    row = std::move(next);
  }
  return row;
}

bool SparseEchelon::insert(Row row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  Coeff inv = field_.inv(row.front().second);
  for (auto& [col, v] : row) v = field_.mul(v, inv);
  std::size_t col = row.front().first;
  pivots_.emplace(col, std::move(row));
  return true;
}

}  // namespace cartier
