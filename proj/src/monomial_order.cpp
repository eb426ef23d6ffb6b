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

#include "cartier/monomial_order.hpp"

#include <numeric>

#include "cartier/error.hpp"

namespace cartier {

namespace {

int grevlex_compare(const std::vector<std::size_t>& priority, std::span<const std::int64_t> a,
                    std::span<const std::int64_t> b) noexcept {
  // Exponents are bounded well below 2^62 per entry, so __int128 sums are safe.
  __int128 da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = priority.size(); k-- > 0;) {
    auto v = priority[k];
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t n) {
  std::vector<std::size_t> pr(n);
  std::iota(pr.begin(), pr.end(), std::size_t{0});
  return MonomialOrder(Kind::kLex, std::move(pr));
}

MonomialOrder MonomialOrder::grevlex(std::size_t n) {
  std::vector<std::size_t> pr(n);
  std::iota(pr.begin(), pr.end(), std::size_t{0});
  return MonomialOrder(Kind::kGrevLex, std::move(pr));
}

MonomialOrder MonomialOrder::elimination(std::size_t n, std::size_t block) {
  std::vector<std::size_t> pr(n);
  std::iota(pr.begin(), pr.end(), std::size_t{0});
  return MonomialOrder(Kind::kGrevLex, std::move(pr), block);
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority, std::size_t block)
    : kind_(kind), priority_(std::move(priority)), block_(block) {
  std::vector<bool> seen(priority_.size(), false);
  for (auto v : priority_) {
    if (v >= priority_.size() || seen[v]) throw DomainError("variable priority is not a permutation");
    seen[v] = true;
  }
  if (block_ > priority_.size()) throw DomainError("elimination block larger than the ring");
}

int MonomialOrder::compare(std::span<const std::int64_t> a,
                           std::span<const std::int64_t> b) const noexcept {
  if (block_ > 0) {
    __int128 da = 0, db = 0;
    for (std::size_t k = 0; k < block_; ++k) {
      da += a[priority_[k]];
      db += b[priority_[k]];
    }
    if (da != db) return da < db ? -1 : 1;
  }
  if (kind_ == Kind::kGrevLex) return grevlex_compare(priority_, a, b);
  for (auto v : priority_)
    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
  return 0;
}

std::string MonomialOrder::key() const {
  std::string k = kind_ == Kind::kLex ? "lex" : "grevlex";
  for (auto v : priority_) k += ":" + std::to_string(v);
  k += "/" + std::to_string(block_);
  return k;
}

}  // namespace cartier
