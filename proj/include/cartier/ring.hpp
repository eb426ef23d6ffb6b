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

#ifndef CARTIER_RING_HPP
#define CARTIER_RING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cartier/field.hpp"

namespace cartier {

/// The polynomial ring F_p[x_1, ..., x_n] with named variables.  Cheap to
/// copy; all copies share one immutable description.
class RingContext {
 public:
  /// Throws DomainError on a non-prime p, an empty or duplicated variable
  /// list, or a name that is not an identifier.
  RingContext(std::int64_t p, std::vector<std::string> variables);

  Coeff p() const noexcept { return data_->field.characteristic(); }
  std::size_t n() const noexcept { return data_->names.size(); }
  const PrimeField& field() const noexcept { return data_->field; }
  const std::vector<std::string>& variables() const noexcept { return data_->names; }
  const std::string& variable(std::size_t i) const { return data_->names.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// A ring with `extra` fresh variables prepended (used for elimination).
  /// The new variables get names that do not clash with existing ones.
  RingContext with_leading_variables(std::size_t extra) const;

  friend bool operator==(const RingContext& a, const RingContext& b) noexcept {
    return a.data_ == b.data_ || (a.p() == b.p() && a.variables() == b.variables());
  }

 private:
  struct Data {
    PrimeField field;
    std::vector<std::string> names;
  };
  std::shared_ptr<const Data> data_;
};

bool is_identifier(std::string_view s) noexcept;

/// Exponent vector of a monomial.  Entries are non-negative 64-bit integers;
/// arithmetic is overflow-checked.  Ordered lexicographically so it can key
/// ordered containers.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<std::int64_t> e);
  explicit ExponentVector(std::vector<std::int64_t> e);
  explicit ExponentVector(std::span<const std::int64_t> e);

  std::size_t size() const noexcept { return e_.size(); }
  std::int64_t operator[](std::size_t i) const { return e_[i]; }
  std::int64_t& operator[](std::size_t i) { return e_[i]; }
  std::span<const std::int64_t> span() const noexcept { return e_; }
  const std::vector<std::int64_t>& values() const noexcept { return e_; }

  /// Largest single exponent (0 for the constant monomial).
  std::int64_t max_norm() const noexcept;
  std::int64_t total_degree() const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<std::int64_t> e_;
};

namespace mono {

// Helpers on raw exponent spans of equal length.

bool divides(std::span<const std::int64_t> a, std::span<const std::int64_t> b) noexcept;
void multiply(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out);
void divide(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
            std::span<std::int64_t> out) noexcept;
void lcm(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
         std::span<std::int64_t> out) noexcept;
void gcd(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
         std::span<std::int64_t> out) noexcept;
bool coprime(std::span<const std::int64_t> a, std::span<const std::int64_t> b) noexcept;
std::int64_t max_norm(std::span<const std::int64_t> a) noexcept;
std::int64_t total_degree(std::span<const std::int64_t> a);

ExponentVector product(const ExponentVector& a, const ExponentVector& b);
ExponentVector quotient(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);

}  // namespace mono

}  // namespace cartier

#endif  // CARTIER_RING_HPP
