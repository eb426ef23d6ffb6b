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

#ifndef CARTIER_FIELD_HPP
#define CARTIER_FIELD_HPP

#include <cstdint>

namespace cartier {

using Coeff = std::uint32_t;

bool is_prime(std::int64_t p);

/// Arithmetic in the prime field F_p.  Residues are kept canonical in [0, p).
/// Requires p < 2^31.
class PrimeField {
 public:
  /// Throws DomainError unless p is a prime below 2^31.
  explicit PrimeField(std::int64_t p);

  Coeff characteristic() const noexcept { return p_; }

  Coeff reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; throws DomainError for 0.
  Coeff inv(Coeff a) const;

 private:
  Coeff p_;
};

}  // namespace cartier

#endif  // CARTIER_FIELD_HPP
