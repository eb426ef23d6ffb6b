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

#ifndef CARTIER_CARTIER_OPS_HPP
#define CARTIER_CARTIER_OPS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "cartier/ideal.hpp"
#include "cartier/polynomial.hpp"
#include "cartier/rational.hpp"

namespace cartier {

/// κ^e(f): every term c·x^α with α = p^e·r + α' (0 <= α'_i < p^e)
/// contributes c·x^r when α'_i = p^e - 1 for all i, and nothing otherwise.
Polynomial kappa_eval(std::int64_t e, const Polynomial& f);

/// The operator r ↦ κ^e(f·r) of level e with multiplier f.
class CartierOperator {
 public:
  /// Throws DomainError for a negative level.
  CartierOperator(std::int64_t level, Polynomial multiplier);

  static CartierOperator identity(const RingContext& ctx);

  std::int64_t level() const noexcept { return level_; }
  const Polynomial& multiplier() const noexcept { return multiplier_; }
  const RingContext& context() const noexcept { return multiplier_.context(); }

  std::string to_string() const;

  friend bool operator==(const CartierOperator&, const CartierOperator&) = default;

 private:
  std::int64_t level_;
  Polynomial multiplier_;
};

/// κ^e(f·r), reduced to normal form modulo `quotient` when one is given.
Polynomial op_apply(const CartierOperator& psi, const Polynomial& r,
                    const std::optional<Ideal>& quotient = std::nullopt);

/// φ·ψ = φ ∘ F^a_* ψ for φ of level a and ψ of level b, in closed form
/// (a + b, f_φ^(p^b) · f_ψ).
CartierOperator op_compose(const CartierOperator& phi, const CartierOperator& psi);

enum class Exactness { kExact, kUpperBound };

/// Value of the max-norm gauge.  `value` is empty for -infinity.
struct GaugeValue {
  std::optional<std::int64_t> value;
  Exactness exactness = Exactness::kExact;

  std::string to_string() const;
  friend bool operator==(const GaugeValue&, const GaugeValue&) = default;
};

/// δ(r) in R = S/I.  Without a quotient, or for a monomial quotient, this is
/// the max-norm of the normal form and exact.  For other quotients the
/// normal form only gives an upper bound, and the result says so.
GaugeValue gauge(const Polynomial& r, const std::optional<Ideal>& quotient = std::nullopt);

/// Windowed lower bound for the gauge constant of a single operator.
struct GaugeExcess {
  std::optional<Rational> value;  // empty means -infinity
  std::int64_t window;

  std::string to_string() const;
};

/// max over monomials r = x^β with max-norm <= window of
/// δ(ψ(r)) - δ(r)/p^e, in exact rationals.  Requires level >= 1 and
/// window >= p^e (DomainError otherwise).  Monomials that are zero in R are
/// skipped.
GaugeExcess gauge_excess(const CartierOperator& psi, std::int64_t window,
                         const std::optional<Ideal>& quotient = std::nullopt);

/// Default window max_norm(f) + 2 p^e.
std::int64_t default_excess_window(const CartierOperator& psi);

}  // namespace cartier

#endif  // CARTIER_CARTIER_OPS_HPP
