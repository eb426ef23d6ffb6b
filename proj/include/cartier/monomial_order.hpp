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

#ifndef CARTIER_MONOMIAL_ORDER_HPP
#define CARTIER_MONOMIAL_ORDER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cartier {

/// A monomial order on n variables: lexicographic or graded reverse
/// lexicographic, with a variable priority (priority[0] is the largest
/// variable).  An optional elimination block makes the first `block`
/// variables of the priority list compare first by their combined degree.
class MonomialOrder {
 public:
  enum class Kind { kLex, kGrevLex };

  /// Natural priority x_1 > x_2 > ... > x_n.
  static MonomialOrder lex(std::size_t n);
  static MonomialOrder grevlex(std::size_t n);
  /// Eliminates the first `block` variables: monomials are compared by the
  /// total degree in those variables, ties broken by grevlex.
  static MonomialOrder elimination(std::size_t n, std::size_t block);

  MonomialOrder(Kind kind, std::vector<std::size_t> priority, std::size_t block = 0);

  Kind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return priority_.size(); }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  std::size_t elimination_block() const noexcept { return block_; }

  /// Three-way comparison: negative if a < b, 0 if equal, positive if a > b.
  int compare(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const noexcept;

  /// Stable textual key, used to index cached Groebner bases.
  std::string key() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  Kind kind_;
  std::vector<std::size_t> priority_;
  std::size_t block_;
};

}  // namespace cartier

#endif  // CARTIER_MONOMIAL_ORDER_HPP
