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

#include <doctest.h>

#include "cartier/algebra_spec.hpp"
#include "cartier/cartier_ops.hpp"
#include "cartier/error.hpp"
#include "support/test_support.hpp"

using namespace cartier;
using namespace cartier::testing;

namespace {

Polynomial P(const RingContext& ctx, const char* text) { return parse_poly(text, ctx); }

Ideal ideal(const RingContext& ctx, const char* text) { return Ideal(ctx, parse_poly_list(text, ctx)); }

/// Calls body on every monomial of max-norm <= bound.
void for_each_monomial(const RingContext& ctx, std::int64_t bound, const std::function<void(const Polynomial&)>& body) {
  for_each_in_box(ctx.n(), bound, [&](const Exps& e) { body(monomial_of(ctx, e)); });
}

}  // namespace

TEST_CASE("kappa_eval examples") {
  RingContext ctx(2, {"x", "y"});
  CHECK(kappa_eval(1, P(ctx, "x^3*y")) == P(ctx, "x"));
  CHECK(kappa_eval(1, P(ctx, "x^2*y")).is_zero());
  for (std::int64_t p : {2, 3, 5}) {
    RingContext c(p, {"x", "y", "z"});
    for (std::int64_t e = 0; e <= 2; ++e) {
      const std::int64_t q = ipow(p, e);
      CHECK(kappa_eval(e, monomial_of(c, {q - 1, q - 1, q - 1})) == Polynomial::constant(c, 1));
      CHECK(kappa_eval(e, Polynomial(c)).is_zero());
    }
  }
  const Polynomial f = P(ctx, "x^3*y + x + y^2");
  CHECK(kappa_eval(0, f) == f);
  CHECK_THROWS_AS(kappa_eval(-1, f), DomainError);
}

TEST_CASE("kappa_eval matches the term-wise oracle") {
  Rng rng(31);
  for (std::int64_t p : {2, 3, 5}) {
    RingContext ctx(p, {"x", "y"});
    for (int trial = 0; trial < 30; ++trial) {
      const Polynomial f = random_poly(ctx, rng, 8, 30);
      for (std::int64_t e = 0; e <= 2; ++e) CHECK(to_terms(kappa_eval(e, f)) == oracle_kappa(e, p, to_terms(f)));
    }
  }
}

TEST_CASE("semilinearity and additivity") {
  Rng rng(32);
  for (std::int64_t p : {2, 3}) {
    RingContext ctx(p, {"x", "y"});
    for (int trial = 0; trial < 20; ++trial) {
      const Polynomial f = random_poly(ctx, rng, 6, 10);
      const Polynomial g = random_poly(ctx, rng, 3, 3);
      const Polynomial h = random_poly(ctx, rng, 6, 10);
      for (std::int64_t e = 1; e <= 2; ++e) {
        CHECK(kappa_eval(e, frobenius_pow(g, e) * f) == g * kappa_eval(e, f));
        CHECK(kappa_eval(e, f + h) == kappa_eval(e, f) + kappa_eval(e, h));
      }
    }
  }
}

TEST_CASE("kappa is surjective on monomials") {
  for (std::int64_t p : {2, 3}) {
    RingContext ctx(p, {"x", "y"});
    for (std::int64_t e = 1; e <= 2; ++e) {
      const std::int64_t q = ipow(p, e);
      for_each_in_box(2, 5, [&](const Exps& r) {
        CHECK(kappa_eval(e, monomial_of(ctx, {q * r[0] + q - 1, q * r[1] + q - 1})) == monomial_of(ctx, r));
      });
    }
  }
}

TEST_CASE("op_apply examples") {
  RingContext ctx(2, {"x", "y"});
  CHECK(op_apply(CartierOperator(1, P(ctx, "1")), P(ctx, "x^3*y")) == P(ctx, "x"));
  CHECK(op_apply(CartierOperator(1, P(ctx, "x")), P(ctx, "y")) == P(ctx, "1"));
  const Polynomial r = P(ctx, "x^5 + y + 1");
  CHECK(op_apply(CartierOperator::identity(ctx), r) == r);
  CHECK(op_apply(CartierOperator(1, P(ctx, "1")), P(ctx, "x^3*y^3 + x*y"), ideal(ctx, "[x]")) == P(ctx, "1"));
  RingContext other(3, {"x", "y"});
  CHECK_THROWS_AS(op_apply(CartierOperator(1, P(ctx, "1")), P(other, "x")), ContextMismatch);
  CHECK_THROWS_AS(CartierOperator(-1, P(ctx, "1")), DomainError);
}

TEST_CASE("op_compose examples") {
  RingContext c2(2, {"x", "y"});
  const CartierOperator c = op_compose(CartierOperator(1, P(c2, "x")), CartierOperator(1, P(c2, "y")));
  CHECK(c.level() == 2);
  CHECK(c.multiplier() == P(c2, "x^2*y"));
  CHECK(c.to_string() == "(2, x^2*y)");
  const CartierOperator psi(2, P(c2, "x + y^3"));
  CHECK(op_compose(CartierOperator::identity(c2), psi) == psi);
  RingContext c3(3, {"x", "y"});
  const CartierOperator kk = op_compose(CartierOperator(1, P(c3, "1")), CartierOperator(1, P(c3, "1")));
  CHECK(kk == CartierOperator(2, P(c3, "1")));
}

TEST_CASE("composition law and bimodule relation on a monomial window") {
  Rng rng(33);
  for (std::int64_t p : {2, 3}) {
    RingContext ctx(p, {"x", "y"});
    for (int trial = 0; trial < 5; ++trial) {
      const CartierOperator phi(rng.uniform(0, 1), random_poly(ctx, rng, 3, 3));
      const CartierOperator psi(rng.uniform(1, 2), random_poly(ctx, rng, 3, 3));
      const CartierOperator comp = op_compose(phi, psi);
      const std::int64_t bound = ipow(p, comp.level()) + 2;
      for_each_monomial(ctx, bound, [&](const Polynomial& r) {
        CHECK(op_apply(comp, r) == op_apply(phi, op_apply(psi, r)));
      });
      const Polynomial s = random_poly(ctx, rng, 2, 2);
      const CartierOperator twisted(psi.level(), psi.multiplier() * frobenius_pow(s, psi.level()));
      for_each_monomial(ctx, ipow(p, psi.level()) + 1, [&](const Polynomial& r) {
        CHECK(op_apply(twisted, r) == s * op_apply(psi, r));
      });
    }
  }
}

TEST_CASE("gauge examples") {
  RingContext ctx(2, {"x", "y"});
  const GaugeValue g1 = gauge(P(ctx, "x^3*y"));
  CHECK(g1.value == 3);
  CHECK(g1.exactness == Exactness::kExact);
  const GaugeValue g2 = gauge(P(ctx, "x^2 + x"), ideal(ctx, "[x^2]"));
  CHECK(g2.value == 1);
  CHECK(g2.exactness == Exactness::kExact);
  CHECK_FALSE(gauge(Polynomial(ctx)).value.has_value());
  CHECK_FALSE(gauge(Polynomial(ctx), ideal(ctx, "[x + y^2]")).value.has_value());
  CHECK(gauge(Polynomial(ctx)).to_string() == "-inf");
  const GaugeValue g3 = gauge(P(ctx, "y^3"), ideal(ctx, "[x^2 + y^2]"));
  CHECK(g3.exactness == Exactness::kUpperBound);
}

TEST_CASE("gauge subadditivity") {
  Rng rng(34);
  RingContext ctx(3, {"x", "y", "z"});
  const Ideal I = ideal(ctx, "[x^3, y^2*z]");
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial r = random_nonzero_poly(ctx, rng, 4, 5);
    const Polynomial s = random_nonzero_poly(ctx, rng, 4, 5);
    for (const std::optional<Ideal>& q : {std::optional<Ideal>{}, std::optional<Ideal>{I}}) {
      const auto gr = gauge(r, q).value, gs = gauge(s, q).value;
      const auto gsum = gauge(r + s, q).value, gprod = gauge(r * s, q).value;
      if (gsum) CHECK(*gsum <= std::max(gr.value_or(-1), gs.value_or(-1)));
      if (gprod) {
        REQUIRE(gr.has_value());
        REQUIRE(gs.has_value());
        CHECK(*gprod <= *gr + *gs);
      }
    }
  }
}

TEST_CASE("gauge_excess examples") {
  RingContext ctx(2, {"x"});
  const GaugeExcess k = gauge_excess(CartierOperator(1, P(ctx, "1")), 16);
  REQUIRE(k.value.has_value());
  CHECK(*k.value == Rational(-1, 2));
  CHECK(k.window == 16);
  const GaugeExcess kx = gauge_excess(CartierOperator(1, P(ctx, "x^2")), 16);
  CHECK(*kx.value == Rational(1, 2));
  CHECK_FALSE(gauge_excess(CartierOperator(1, Polynomial(ctx)), 16).value.has_value());
  CHECK_THROWS_AS(gauge_excess(CartierOperator(2, P(ctx, "1")), 3), DomainError);
  CHECK_THROWS_AS(gauge_excess(CartierOperator(0, P(ctx, "1")), 3), DomainError);
  CHECK(default_excess_window(CartierOperator(1, P(ctx, "x^2"))) == 6);
}

TEST_CASE("gauge_excess against an independent brute force") {
  Rng rng(35);
  for (std::int64_t p : {2, 3}) {
    RingContext ctx(p, {"x", "y"});
    for (int trial = 0; trial < 6; ++trial) {
      const CartierOperator psi(1, random_nonzero_poly(ctx, rng, 3, 3));
      const std::int64_t B = p + 4;
      std::optional<Rational> best;
      for_each_in_box(2, B, [&](const Exps& b) {
        const Terms image = oracle_kappa(1, p, oracle_mul(to_terms(psi.multiplier()), Terms{{b, 1}}, p));
        if (image.empty()) return;
        std::int64_t d = 0;
        for (const auto& [e, c] : image) d = std::max({d, e[0], e[1]});
        const Rational v = Rational(d) - Rational(std::max(b[0], b[1]), p);
        if (!best || v > *best) best = v;
      });
      const GaugeExcess got = gauge_excess(psi, B);
      CHECK(got.value == best);
      const GaugeExcess wider = gauge_excess(psi, B + 3);
      if (got.value) CHECK(*wider.value >= *got.value);
    }
  }
}

TEST_CASE("full algebra has non-positive gauge excess") {
  for (std::int64_t p : {2, 3}) {
    RingContext ctx(p, {"x", "y"});
    for (std::int64_t B : {std::int64_t(p), std::int64_t(8), std::int64_t(20)}) {
      const GaugeExcess k = gauge_excess(CartierOperator(1, P(ctx, "1")), B);
      CHECK(*k.value <= 0);
    }
  }
}

TEST_CASE("algebra_component examples") {
  RingContext ctx(2, {"x", "y"});
  const auto two_gen = CartierAlgebraSpec::paper_example(ctx);
  CHECK(ideals_equal(two_gen.component(2), ideal(ctx, "[x^2, x*y^8]")));
  CHECK(ideals_equal(two_gen.component(0), Ideal::unit(ctx)));
  const auto full = CartierAlgebraSpec::full(ctx);
  for (std::int64_t e = 0; e <= 4; ++e) CHECK(ideals_equal(full.component(e), Ideal::unit(ctx)));
  const auto fedder = CartierAlgebraSpec::fedder(ideal(ctx, "[x*y]"));
  CHECK(ideals_equal(algebra_component(fedder, 1), ideal(ctx, "[x*y]")));
  CHECK(fedder.quotient().has_value());
  const auto principal = CartierAlgebraSpec::principal(P(ctx, "x + y"));
  CHECK(ideals_equal(principal.component(2), Ideal(ctx, {power(P(ctx, "x + y"), 3)})));
  CHECK_THROWS_AS(two_gen.component(-1), DomainError);
  CHECK_THROWS_AS(CartierAlgebraSpec::paper_example(RingContext(2, {"x", "y", "z"})), DomainError);
}

TEST_CASE("template and table families") {
  RingContext ctx(3, {"x", "y"});
  const auto tmpl = CartierAlgebraSpec::from_template(ctx, {"x^2", "x*y^(e*q)"});
  const auto two_gen = CartierAlgebraSpec::paper_example(ctx);
  for (std::int64_t e = 1; e <= 3; ++e) CHECK(ideals_equal(tmpl.component(e), two_gen.component(e)));
  CHECK_THROWS_AS(CartierAlgebraSpec::from_template(ctx, {"x*y^(e*q)", "z"}), ParseError);
  const auto table = CartierAlgebraSpec::table(ctx, {{1, {P(ctx, "x")}}, {2, {P(ctx, "y")}}});
  CHECK(ideals_equal(table.component(2), ideal(ctx, "[y]")));
  CHECK_THROWS_AS(table.component(3), DomainError);
  const auto comps = algebra_components(two_gen, 3, 2);
  REQUIRE(comps.size() == 4);
  CHECK(ideals_equal(comps[3], two_gen.component(3)));
}

TEST_CASE("validate_subalgebra examples") {
  RingContext ctx(2, {"x", "y"});
  CHECK(validate_subalgebra(CartierAlgebraSpec::full(ctx), 5).valid);
  CHECK(validate_subalgebra(CartierAlgebraSpec::paper_example(ctx), 4).valid);
  const auto bad = CartierAlgebraSpec::table(ctx, {{1, {P(ctx, "x")}}, {2, {P(ctx, "y")}}});
  const ValidationReport v = validate_subalgebra(bad, 2);
  CHECK_FALSE(v.valid);
  REQUIRE(v.violation.has_value());
  CHECK(v.violation->a == 1);
  CHECK(v.violation->b == 1);
  CHECK(v.violation->witness == P(ctx, "x^3"));
  const auto zero = CartierAlgebraSpec::table(ctx, {{1, {}}, {2, {}}});
  const ValidationReport vz = validate_subalgebra(zero, 2);
  CHECK_FALSE(vz.valid);
  CHECK_FALSE(vz.has_nonzero_level);
  CHECK(validate_subalgebra(CartierAlgebraSpec::fedder(ideal(ctx, "[x*y]")), 3).valid);
}
