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

#include "cartier/cartier_ops.hpp"

#include <vector>

#include "cartier/checked.hpp"
#include "cartier/error.hpp"

namespace cartier {

Polynomial kappa_eval(std::int64_t e, const Polynomial& f) {
  if (e < 0) throw DomainError("negative Cartier level");
  if (e == 0) return f;
  const auto& ctx = f.context();
  const std::int64_t q = checked_pow(ctx.p(), e);
  detail::FlatPoly out(ctx.n());
  std::vector<std::int64_t> r(ctx.n());
  for (std::size_t i = 0; i < f.num_terms(); ++i) {
    auto t = f.term(i);
    bool hit = true;
    for (std::size_t v = 0; v < ctx.n() && hit; ++v) {
      if (t.exponents[v] % q != q - 1) hit = false;
      r[v] = t.exponents[v] / q;
    }
    if (hit) out.push(r, t.coeff);
  }
  return Polynomial::from_flat(ctx, std::move(out));
}

CartierOperator::CartierOperator(std::int64_t level, Polynomial multiplier)
    : level_(level), multiplier_(std::move(multiplier)) {
  if (level_ < 0) throw DomainError("Cartier operator level must be >= 0");
}

CartierOperator CartierOperator::identity(const RingContext& ctx) {
  return CartierOperator(0, Polynomial::constant(ctx, 1));
}

std::string CartierOperator::to_string() const {
  return "(" + std::to_string(level_) + ", " + format_poly(multiplier_) + ")";
}

Polynomial op_apply(const CartierOperator& psi, const Polynomial& r,
                    const std::optional<Ideal>& quotient) {
  if (!(psi.context() == r.context())) throw ContextMismatch();
  Polynomial out = kappa_eval(psi.level(), psi.multiplier() * r);
  if (quotient) out = normal_form(out, *quotient);
  return out;
}

CartierOperator op_compose(const CartierOperator& phi, const CartierOperator& psi) {
  if (!(phi.context() == psi.context())) throw ContextMismatch();
  return CartierOperator(checked_add(phi.level(), psi.level()),
                         frobenius_pow(phi.multiplier(), psi.level()) * psi.multiplier());
}

std::string GaugeValue::to_string() const {
  std::string s = value ? std::to_string(*value) : "-inf";
  return exactness == Exactness::kExact ? s : s + " (upper bound)";
}

GaugeValue gauge(const Polynomial& r, const std::optional<Ideal>& quotient) {
  if (!quotient) return {max_norm(r), Exactness::kExact};
  Polynomial nf = normal_form(r, *quotient);
  return {max_norm(nf), quotient->is_monomial() ? Exactness::kExact : Exactness::kUpperBound};
}

std::string GaugeExcess::to_string() const {
  return (value ? cartier::to_string(*value) : std::string("-inf")) + " (window " +
         std::to_string(window) + ")";
}

std::int64_t default_excess_window(const CartierOperator& psi) {
  std::int64_t q = checked_pow(psi.context().p(), psi.level());
  return checked_add(max_norm(psi.multiplier()).value_or(0), checked_mul(2, q));
}

GaugeExcess gauge_excess(const CartierOperator& psi, std::int64_t window,
                         const std::optional<Ideal>& quotient) {
  const auto& ctx = psi.context();
  if (psi.level() < 1) throw DomainError("gauge excess needs an operator of level >= 1");
  const std::int64_t q = checked_pow(ctx.p(), psi.level());
  if (window < q) throw DomainError("invalid window " + std::to_string(window) + ": must be >= p^e = " +
                                    std::to_string(q));
  // Enumerating (window+1)^n monomials; refuse absurd windows up front.
  std::int64_t count = 1;
  for (std::size_t i = 0; i < ctx.n(); ++i) {
    count = checked_mul(count, window + 1);
    if (count > 50'000'000) throw DomainError("gauge excess window too large for enumeration");
  }
  GaugeExcess out{std::nullopt, window};
  std::vector<std::int64_t> beta(ctx.n(), 0);
  for (;;) {
    Polynomial r = Polynomial::monomial(ctx, ExponentVector(beta));
    GaugeValue dr = gauge(r, quotient);
    if (dr.value) {
      GaugeValue dpsi = gauge(op_apply(psi, r, quotient), quotient);
      if (dpsi.value) {
        Rational v = Rational(*dpsi.value) - Rational(*dr.value, q);
        if (!out.value || v > *out.value) out.value = v;
      }
    }
    std::size_t k = 0;
    while (k < beta.size() && beta[k] == window) beta[k++] = 0;
    if (k == beta.size()) break;
    ++beta[k];
  }
  return out;
}

}  // namespace cartier
