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

#include <cmath>

#include "cartier/analysis.hpp"
#include "cartier/error.hpp"
#include "support/test_support.hpp"

using namespace cartier;
using namespace cartier::testing;

namespace {

Polynomial P(const RingContext& ctx, const char* text) { return parse_poly(text, ctx); }

Ideal ideal(const RingContext& ctx, const char* text) { return Ideal(ctx, parse_poly_list(text, ctx)); }

std::vector<std::int64_t> deltas(const ComplexityReport& r) {
  std::vector<std::int64_t> out;
  for (const auto& l : r.levels) out.push_back(l.delta_k);
  return out;
}

/// Binomial coefficient by exhaustive enumeration of monomials of total
/// degree <= D.
std::int64_t count_monomials(std::size_t n, std::int64_t D) {
  std::int64_t count = 0;
  for_each_in_box(n, D, [&](const Exps& e) {
    std::int64_t s = 0;
    for (auto v : e) s += v;
    if (s <= D) ++count;
  });
  return count;
}

}  // namespace

TEST_CASE("growth verdict tail rule") {
  using R = std::vector<Rational>;
  CHECK(growth_verdict(R{1, 2}) == Verdict::kInconclusive);
  CHECK(growth_verdict(R{1, 2, 3}) == Verdict::kUnboundedEvidence);
  CHECK(growth_verdict(R{1, 2, 4, 8}) == Verdict::kUnboundedEvidence);
  CHECK(growth_verdict(R{0, 0, 0}) == Verdict::kBoundedEvidence);
  CHECK(growth_verdict(R{3, 2, 1}) == Verdict::kBoundedEvidence);
  CHECK(growth_verdict(R{Rational(1, 2), Rational(3, 4), Rational(7, 8)}) == Verdict::kBoundedEvidence);
  CHECK(growth_verdict(R{1, 3, 4}) == Verdict::kBoundedEvidence);
  CHECK(growth_verdict(R{1, 3, Rational(9, 2)}) == Verdict::kInconclusive);
  CHECK(to_string(Verdict::kUnboundedEvidence) == "unbounded-evidence");
}

TEST_CASE("root values compare exactly") {
  CHECK(compare(RootValue{2, 5}, RootValue{2, 2}) < 0);
  CHECK(compare(RootValue{4, 2}, RootValue{2, 1}) == 0);
  CHECK(compare(RootValue{3, 1}, RootValue{8, 2}) > 0);
  CHECK(RootValue{2, 5}.to_string() == "2^(1/5)");
  CHECK(RootValue{1, 1}.to_string() == "1");
  CHECK(RootValue{2, 2}.approx() == "1.414214");
}

TEST_CASE("product_piece examples") {
  RingContext ctx(2, {"x", "y"});
  const auto full = CartierAlgebraSpec::full(ctx);
  for (std::int64_t e = 2; e <= 4; ++e) CHECK(ideals_equal(product_piece(full, e), Ideal::unit(ctx)));
  const auto two_gen = CartierAlgebraSpec::paper_example(ctx);
  CHECK(ideals_equal(product_piece(two_gen, 2), ideal(ctx, "[x^6, x^5*y^2, x^4*y^4, x^3*y^6]")));
  const auto px = CartierAlgebraSpec::principal(P(ctx, "x"));
  CHECK(ideals_equal(product_piece(px, 2), ideal(ctx, "[x^3]")));
  CHECK(ideals_equal(px.component(2), product_piece(px, 2)));
  CHECK(product_piece(two_gen, 1).is_zero());
}

TEST_CASE("new_generator_count examples") {
  RingContext ctx(2, {"x", "y"});
  const auto full = CartierAlgebraSpec::full(ctx);
  CHECK(new_generator_count(full, 1) == 1);
  for (std::int64_t e = 2; e <= 4; ++e) CHECK(new_generator_count(full, e) == 0);
  const auto two_gen = CartierAlgebraSpec::paper_example(ctx);
  CHECK(new_generator_count(two_gen, 1) == 2);
  CHECK(new_generator_count(two_gen, 2) == 2);
  CHECK(new_generator_count(two_gen, 0) == 1);
  const auto bad = CartierAlgebraSpec::table(ctx, {{1, {P(ctx, "x + 1")}}, {2, {P(ctx, "x + 1"), P(ctx, "y + 1")}}});
  CHECK_THROWS_AS(new_generator_count(bad, 2), UnsupportedIdealClass);
}

TEST_CASE("complexity_sequence examples") {
  RingContext ctx(2, {"x", "y"});
  const auto full = complexity_sequence(CartierAlgebraSpec::full(ctx), 6);
  CHECK(deltas(full) == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0});
  CHECK(full.cx_estimate.to_string() == "1");
  CHECK(full.k0 == 1);
  CHECK(full.levels.back().k == 2);
  const auto two_gen = complexity_sequence(CartierAlgebraSpec::paper_example(ctx), 5);
  for (const auto& l : two_gen.levels) CHECK(l.delta_k <= 2);
  CHECK(compare(two_gen.window_max, RootValue{2, 2}) <= 0);
  CHECK(compare(two_gen.cx_estimate, RootValue{2, 5}) <= 0);
  const auto px = complexity_sequence(CartierAlgebraSpec::principal(P(ctx, "x")), 5);
  CHECK(deltas(px) == std::vector<std::int64_t>{1, 0, 0, 0, 0});
  const auto bad = CartierAlgebraSpec::table(ctx, {{1, {P(ctx, "x")}}, {2, {P(ctx, "y")}}});
  CHECK_THROWS_AS(complexity_sequence(bad, 2), DomainError);
}

TEST_CASE("k_e is cumulative and non-decreasing") {
  RingContext ctx(3, {"x", "y"});
  const auto r = complexity_sequence(CartierAlgebraSpec::paper_example(ctx), 4);
  std::int64_t k = r.k0;
  for (const auto& l : r.levels) {
    CHECK(l.delta_k >= 0);
    k += l.delta_k;
    CHECK(l.k == k);
  }
}

TEST_CASE("monomial_count_bound") {
  CHECK(monomial_count_bound(2, 2) == 6);
  CHECK(monomial_count_bound(1, 5) == 6);
  CHECK(monomial_count_bound(3, 4) == 35);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::int64_t D = 0; D <= 10; ++D) CHECK(monomial_count_bound(static_cast<std::int64_t>(n), D) == count_monomials(n, D));
  CHECK(monomial_count_bound(4, 200) == BigInt(70058751));
}

TEST_CASE("lemma_fit examples") {
  RingContext ctx(2, {"x", "y"});
  const LemmaFit full = lemma_fit(CartierAlgebraSpec::full(ctx), 4);
  CHECK(full.t == 0);
  CHECK(full.expF_bound == 0);
  const LemmaFit cubic = lemma_fit(CartierAlgebraSpec::principal(P(ctx, "x^2*y + y^3 + x*y^2")), 4);
  CHECK(cubic.t == 1);
  CHECK(cubic.K == 3);
  CHECK(cubic.expF_bound == 2);
  CHECK(cubic.cx_bound == 4);
  const LemmaFit two_gen = lemma_fit(CartierAlgebraSpec::paper_example(ctx), 5);
  REQUIRE(two_gen.t.has_value());
  CHECK(*two_gen.t > 1);
  CHECK(two_gen.counting_all_ok);
}

TEST_CASE("gauge_growth examples") {
  for (std::int64_t p : {2, 3}) {
    RingContext ctx(p, {"x", "y"});
    const GaugeReport two_gen = gauge_growth(CartierAlgebraSpec::paper_example(ctx), 5);
    for (const auto& l : two_gen.levels) CHECK(*l.g == Rational(l.e));
    CHECK(two_gen.verdict == Verdict::kUnboundedEvidence);
  }
  RingContext ctx(2, {"x", "y"});
  const GaugeReport full = gauge_growth(CartierAlgebraSpec::full(ctx), 4);
  for (const auto& l : full.levels) CHECK(*l.g == 0);
  CHECK(full.verdict == Verdict::kBoundedEvidence);
  CHECK(full.k_window == Rational(0));
  const GaugeReport xy = gauge_growth(CartierAlgebraSpec::principal(P(ctx, "x + y")), 5);
  for (const auto& l : xy.levels) {
    const std::int64_t q = ipow(2, l.e);
    CHECK(*l.g == Rational(q - 1, q));
  }
  CHECK(xy.verdict == Verdict::kBoundedEvidence);
  CHECK(*xy.k_window <= 1);
  CHECK(xy.claim_check);
}

TEST_CASE("theorem_consistency_check examples") {
  RingContext ctx(2, {"x", "y"});
  const TheoremCheck full = theorem_consistency_check(CartierAlgebraSpec::full(ctx), 4);
  CHECK(full.status == TheoremStatus::kConsistent);
  CHECK(full.p_to_n == 4);
  CHECK(theorem_consistency_check(CartierAlgebraSpec::principal(P(ctx, "x + y")), 4).status ==
        TheoremStatus::kConsistent);
  const TheoremCheck two_gen = theorem_consistency_check(CartierAlgebraSpec::paper_example(ctx), 5);
  CHECK(two_gen.status == TheoremStatus::kNotApplicable);
  CHECK(two_gen.note.find("does not contradict") != std::string::npos);
  CHECK(to_string(TheoremStatus::kNotApplicable) == "not applicable");
}

TEST_CASE("T_e is contained in J_e and three-factor products add nothing") {
  for (std::int64_t p : {2, 3}) {
    RingContext ctx(p, {"x", "y"});
    const std::vector<CartierAlgebraSpec> specs{
        CartierAlgebraSpec::paper_example(ctx), CartierAlgebraSpec::principal(P(ctx, "x*y + y^2")),
        CartierAlgebraSpec::fedder(ideal(ctx, "[x*y]")),
        CartierAlgebraSpec::from_template(ctx, {"x^(q-1)*y^(q-1)", "x^q"})};
    for (const auto& spec : specs) {
      const std::int64_t e_max = 4;
      REQUIRE(validate_subalgebra(spec, e_max).valid);
      const auto comps = algebra_components(spec, e_max);
      for (std::int64_t e = 2; e <= e_max; ++e) {
        const Ideal T = product_piece(comps, e);
        const Ideal target = spec.quotient() ? ideal_sum(comps[e], bracket_power(*spec.quotient(), e)) : comps[e];
        for (const auto& g : T.generators()) CHECK(ideal_membership(g, target));
        for (std::int64_t a = 1; a <= e - 2; ++a)
          for (std::int64_t b = 1; a + b <= e - 1; ++b) {
            const std::int64_t c = e - a - b;
            const Ideal triple = ideal_product(
                ideal_product(bracket_power(comps[a], b + c), bracket_power(comps[b], c)), comps[c]);
            for (const auto& g : triple.generators()) CHECK(ideal_membership(g, T));
          }
      }
    }
  }
}

TEST_CASE("delta_k does not depend on the presented generators") {
  RingContext ctx(2, {"x", "y"});
  const auto two_gen = CartierAlgebraSpec::paper_example(ctx);
  std::map<std::int64_t, std::vector<Polynomial>> plain, padded;
  for (std::int64_t e = 1; e <= 4; ++e) {
    const auto gens = two_gen.component(e).generators();
    plain[e] = gens;
    padded[e] = gens;
    padded[e].push_back(gens[0] * P(ctx, "x*y"));
    padded[e].push_back(gens[1] * P(ctx, "y^3"));
    padded[e].push_back(gens[0] * P(ctx, "y^2"));
  }
  const auto a = complexity_sequence(CartierAlgebraSpec::table(ctx, plain), 4);
  const auto b = complexity_sequence(CartierAlgebraSpec::table(ctx, padded), 4);
  CHECK(deltas(a) == deltas(b));
  CHECK(deltas(a) == deltas(complexity_sequence(two_gen, 4)));

  const Polynomial f = P(ctx, "x^2 + x*y");
  std::map<std::int64_t, std::vector<Polynomial>> hom, hom_padded;
  const auto principal = CartierAlgebraSpec::principal(f);
  for (std::int64_t e = 1; e <= 3; ++e) {
    const Polynomial g = principal.component(e).generators()[0];
    hom[e] = {g};
    hom_padded[e] = {g, g * P(ctx, "x + y"), g * P(ctx, "y")};
  }
  CHECK(deltas(complexity_sequence(CartierAlgebraSpec::table(ctx, hom), 3)) ==
        deltas(complexity_sequence(CartierAlgebraSpec::table(ctx, hom_padded), 3)));
}

TEST_CASE("full and principal families are generated in degree one") {
  Rng rng(41);
  for (std::int64_t p : {2, 3}) {
    RingContext ctx(p, {"x", "y", "z"});
    for (int trial = 0; trial < 3; ++trial) {
      const Polynomial f = random_nonzero_poly(ctx, rng, 3, 2);
      const auto r = complexity_sequence(CartierAlgebraSpec::principal(f), 3);
      for (std::size_t i = 1; i < r.levels.size(); ++i) CHECK(r.levels[i].delta_k == 0);
    }
  }
}

TEST_CASE("analysis is independent of the job count") {
  RingContext ctx(2, {"x", "y"});
  const auto spec = CartierAlgebraSpec::paper_example(ctx);
  const FullReport a = analyze(spec, 5, 1);
  const FullReport b = analyze(spec, 5, 4);
  CHECK(deltas(*a.complexity) == deltas(*b.complexity));
  for (std::size_t i = 0; i < a.gauge->levels.size(); ++i) CHECK(a.gauge->levels[i].g == b.gauge->levels[i].g);
}
