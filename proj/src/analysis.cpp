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

#include "cartier/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "cartier/checked.hpp"
#include "cartier/error.hpp"
#include "cartier/parallel.hpp"

namespace cartier {

namespace {

constexpr std::int64_t kMaxFitExponent = 8;

BigInt big_pow(std::int64_t base, std::int64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

Ideal interreduce(const Ideal& I) {
  if (I.generators_are_monomials()) return Ideal::from_monomials(I.context(), I.monomial_generators());
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) {
    Polynomial m = g.monic();
    if (std::find(gens.begin(), gens.end(), m) == gens.end()) gens.push_back(std::move(m));
  }
  return Ideal(I.context(), std::move(gens));
}

std::int64_t count_new_generators(const std::vector<Ideal>& comps, std::int64_t e,
                                  const std::optional<Ideal>& quotient) {
  if (e == 0) return 1;
  const Ideal& J = comps[static_cast<std::size_t>(e)];
  if (J.is_zero()) return 0;
  const auto& ctx = J.context();
  Ideal T = product_piece(comps, e);
  if (quotient) T = ideal_sum(T, bracket_power(*quotient, e));

  if (J.is_monomial()) {
    Ideal Jm = Ideal::from_monomials(ctx, J.monomial_generators());
    Ideal U = ideal_sum(T, ideal_product(Ideal::maximal(ctx), Jm));
    std::int64_t count = 0;
    for (const auto& m : Jm.generators())
      if (!ideal_membership(m, U)) ++count;
    return count;
  }
  if (J.generators().size() == 1) return ideal_membership(J.generators().front(), T) ? 0 : 1;
  if (J.is_homogeneous()) return static_cast<std::int64_t>(nakayama_quotient_count(J, T));
  const auto& gb = J.groebner(MonomialOrder::grevlex(ctx.n()));
  if (gb.size() == 1) return ideal_membership(gb.front(), T) ? 0 : 1;
  throw UnsupportedIdealClass("J_" + std::to_string(e) + " = " + J.to_string() +
                              " is neither monomial, principal nor homogeneous");
}

std::string trend_of(const std::vector<std::int64_t>& values) {
  if (values.size() < 3) return "n/a";
  auto a = values[values.size() - 3], b = values[values.size() - 2], c = values.back();
  if (a == b && b == c) return "constant";
  if (a < b && b < c) return "increasing";
  if (a > b && b > c) return "decreasing";
  if (a <= b && b <= c) return "non-decreasing";
  if (a >= b && b >= c) return "non-increasing";
  return "mixed";
}

std::string trend_of(const std::vector<Rational>& values) {
  if (values.size() < 3) return "n/a";
  const auto& a = values[values.size() - 3];
  const auto& b = values[values.size() - 2];
  const auto& c = values.back();
  if (a == b && b == c) return "constant";
  if (a < b && b < c) return "increasing";
  if (a > b && b > c) return "decreasing";
  if (a <= b && b <= c) return "non-decreasing";
  if (a >= b && b >= c) return "non-increasing";
  return "mixed";
}

/// Shared per-level data: components, minimal generators, Δk.
struct Computed {
  std::vector<Ideal> comps;                            // index 0..e_max
  std::vector<std::optional<MinimalGenerators>> mins;  // index 0..e_max (0 unused)
  std::vector<std::int64_t> delta;                     // index 0..e_max
};

Computed compute_levels(const CartierAlgebraSpec& spec, std::vector<Ideal> comps, bool need_delta,
                        unsigned jobs) {
  Computed c;
  c.comps = std::move(comps);
  const std::size_t size = c.comps.size();
  c.mins.resize(size);
  c.delta.assign(size, 0);
  if (size > 0) c.delta[0] = 1;
  parallel_for(size > 0 ? size - 1 : 0, jobs, [&](std::size_t k) {
    std::size_t e = k + 1;
    c.mins[e] = minimal_generators(c.comps[e]);
    if (need_delta)
      c.delta[e] = count_new_generators(c.comps, static_cast<std::int64_t>(e), spec.quotient());
  });
  return c;
}

ComplexityReport build_complexity(const CartierAlgebraSpec& spec, const Computed& c) {
  ComplexityReport r;
  r.p = spec.context().p();
  r.n = spec.context().n();
  r.e_max = static_cast<std::int64_t>(c.comps.size()) - 1;
  r.k0 = 1;
  std::int64_t k = r.k0;
  std::vector<std::int64_t> deltas;
  for (std::int64_t e = 1; e <= r.e_max; ++e) {
    const auto& mg = *c.mins[static_cast<std::size_t>(e)];
    ComplexityLevel lvl;
    lvl.e = e;
    lvl.delta_k = c.delta[static_cast<std::size_t>(e)];
    k = checked_add(k, lvl.delta_k);
    lvl.k = k;
    lvl.ideal_class = mg.ideal_class;
    lvl.num_generators = mg.generators.size();
    lvl.max_degree = mg.max_degree;
    lvl.max_norm = mg.max_norm;
    r.levels.push_back(std::move(lvl));
    deltas.push_back(c.delta[static_cast<std::size_t>(e)]);
  }
  const std::int64_t last = c.delta[static_cast<std::size_t>(r.e_max)];
  if (last >= 2) r.cx_estimate = RootValue{BigInt(last), r.e_max};
  for (std::int64_t e = 2; e <= r.e_max; ++e) {
    std::int64_t d = c.delta[static_cast<std::size_t>(e)];
    if (d <= 0) continue;
    RootValue cand{BigInt(d), e};
    if (compare(cand, r.window_max) > 0) {
      r.window_max = cand;
      r.window_max_level = e;
    }
  }
  r.expF_estimate = std::log(r.cx_estimate.to_double()) / std::log(static_cast<double>(r.p));
  r.trend = trend_of(deltas);
  return r;
}

GaugeReport build_gauge(const CartierAlgebraSpec& spec, const Computed& c) {
  GaugeReport r;
  r.e_max = static_cast<std::int64_t>(c.comps.size()) - 1;
  const std::int64_t p = spec.context().p();
  std::vector<Rational> seq;
  for (std::int64_t e = 1; e <= r.e_max; ++e) {
    const auto& mg = *c.mins[static_cast<std::size_t>(e)];
    GaugeLevel lvl;
    lvl.e = e;
    lvl.generators = mg.generators;
    std::int64_t best = -1;
    for (const auto& f : mg.generators) {
      std::int64_t d = *max_norm(f);
      lvl.gauges.push_back(d);
      best = std::max(best, d);
    }
    if (!mg.generators.empty()) {
      lvl.g = Rational(BigInt(best), big_pow(p, e));
      seq.push_back(*lvl.g);
      if (!r.sup_g || *lvl.g > *r.sup_g) r.sup_g = *lvl.g;
    }
    lvl.verdict_so_far = growth_verdict(seq);
    r.levels.push_back(std::move(lvl));
  }
  r.verdict = growth_verdict(seq);
  r.trend = trend_of(seq);
  if (r.verdict == Verdict::kBoundedEvidence && r.sup_g) {
    r.k_window = r.sup_g;
    BigInt K = ceil(*r.sup_g);
    for (const auto& lvl : r.levels)
      for (auto d : lvl.gauges)
        if (BigInt(d) > K * big_pow(p, lvl.e)) r.claim_check = false;
  }
  return r;
}

LemmaFit build_lemma(const CartierAlgebraSpec& spec, const Computed& c) {
  LemmaFit fit;
  const std::int64_t p = spec.context().p();
  const auto n = static_cast<std::int64_t>(spec.context().n());
  const auto e_max = static_cast<std::int64_t>(c.comps.size()) - 1;
  std::vector<std::pair<std::int64_t, std::int64_t>> points;  // (e, d(J_e))
  for (std::int64_t e = 1; e <= e_max; ++e) {
    const auto& mg = *c.mins[static_cast<std::size_t>(e)];
    fit.degrees.push_back(mg.max_degree);
    bool ok = true;
    if (mg.max_degree)
      ok = BigInt(c.delta[static_cast<std::size_t>(e)]) <= monomial_count_bound(n, *mg.max_degree);
    fit.counting_ok.push_back(ok);
    fit.counting_all_ok = fit.counting_all_ok && ok;
    if (mg.max_degree) points.emplace_back(e, *mg.max_degree);
  }
  for (std::int64_t t = 0; t <= kMaxFitExponent && !fit.t; ++t) {
    std::vector<Rational> ratios;
    for (auto [e, d] : points) ratios.emplace_back(BigInt(d), big_pow(p, checked_mul(t, e)));
    if (growth_verdict(ratios) != Verdict::kBoundedEvidence) continue;
    fit.t = t;
    BigInt K = 0;
    for (const auto& r : ratios) K = std::max(K, ceil(r));
    fit.K = K;
    fit.expF_bound = checked_mul(t, n);
    fit.cx_bound = big_pow(p, checked_mul(t, n));
  }
  return fit;
}

TheoremCheck build_theorem(const CartierAlgebraSpec& spec, const ComplexityReport& cx,
                           const GaugeReport& gauge) {
  TheoremCheck tc;
  tc.gauge_verdict = gauge.verdict;
  tc.cx_estimate = cx.cx_estimate;
  tc.p_to_n = big_pow(spec.context().p(), static_cast<std::int64_t>(spec.context().n()));
  RootValue bound{tc.p_to_n, 1};
  if (gauge.verdict != Verdict::kBoundedEvidence) {
    tc.status = TheoremStatus::kNotApplicable;
    tc.note = gauge.verdict == Verdict::kUnboundedEvidence
                  ? "gauge growth is unbounded-evidence; finite complexity here does not "
                    "contradict \"gauge bounded => cx <= p^n\", which has no converse"
                  : "gauge evidence is inconclusive over this window";
    return tc;
  }
  bool ok = compare(cx.cx_estimate, bound) <= 0;
  bool window_ok = compare(cx.window_max, bound) <= 0;
  tc.status = ok ? TheoremStatus::kConsistent : TheoremStatus::kInconsistent;
  tc.note = "cx_estimate " + cx.cx_estimate.to_string() + (ok ? " <= " : " > ") + "p^n = " +
            tc.p_to_n.str() + "; window max " + cx.window_max.to_string() +
            (window_ok ? " <= " : " > ") + "p^n";
  return tc;
}

void require_valid(const ValidationReport& v) {
  if (!v.valid) throw DomainError("invalid spec: " + v.to_string());
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kBoundedEvidence: return "bounded-evidence";
    case Verdict::kUnboundedEvidence: return "unbounded-evidence";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(TheoremStatus s) {
  switch (s) {
    case TheoremStatus::kConsistent: return "consistent";
    case TheoremStatus::kInconsistent: return "INCONSISTENT";
    case TheoremStatus::kNotApplicable: return "not applicable";
  }
  return "?";
}

Verdict growth_verdict(const std::vector<Rational>& s) {
  if (s.size() < 3) return Verdict::kInconclusive;
  Rational d1 = s[s.size() - 2] - s[s.size() - 3];
  Rational d2 = s[s.size() - 1] - s[s.size() - 2];
  if (d1 > 0 && d2 > 0 && d2 >= d1) return Verdict::kUnboundedEvidence;
  if (d2 <= 0 || 2 * d2 <= d1) return Verdict::kBoundedEvidence;
  return Verdict::kInconclusive;
}

std::string RootValue::to_string() const {
  if (base == 1 || root == 1) return base.str();
  return base.str() + "^(1/" + std::to_string(root) + ")";
}

double RootValue::to_double() const {
  return std::pow(base.convert_to<double>(), 1.0 / static_cast<double>(root));
}

std::string RootValue::approx() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", to_double());
  return buf;
}

int compare(const RootValue& a, const RootValue& b) {
  BigInt lhs = boost::multiprecision::pow(a.base, static_cast<unsigned>(b.root));
  BigInt rhs = boost::multiprecision::pow(b.base, static_cast<unsigned>(a.root));
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

Ideal product_piece(const std::vector<Ideal>& comps, std::int64_t e) {
  if (comps.empty()) throw DomainError("no components");
  const auto& ctx = comps.front().context();
  if (e < 2) return Ideal::zero(ctx);
  if (static_cast<std::size_t>(e) >= comps.size()) throw DomainError("level outside the computed window");
  std::vector<Polynomial> gens;
  for (std::int64_t a = 1; a < e; ++a) {
    std::int64_t b = e - a;
    Ideal part = ideal_product(bracket_power(comps[static_cast<std::size_t>(a)], b),
                               comps[static_cast<std::size_t>(b)]);
    gens.insert(gens.end(), part.generators().begin(), part.generators().end());
  }
  return interreduce(Ideal(ctx, std::move(gens)));
}

Ideal product_piece(const CartierAlgebraSpec& spec, std::int64_t e) {
  if (e < 2) return Ideal::zero(spec.context());
  return product_piece(algebra_components(spec, e), e);
}

std::int64_t new_generator_count(const CartierAlgebraSpec& spec, std::int64_t e) {
  if (e < 0) throw DomainError("negative level");
  if (e == 0) return 1;
  return count_new_generators(algebra_components(spec, e), e, spec.quotient());
}

ComplexityReport complexity_sequence(const CartierAlgebraSpec& spec, std::int64_t e_max, unsigned jobs) {
  if (e_max < 1) throw DomainError("complexity needs e_max >= 1");
  auto comps = algebra_components(spec, e_max, jobs);
  require_valid(validate_subalgebra(spec, comps, jobs));
  return build_complexity(spec, compute_levels(spec, std::move(comps), true, jobs));
}

BigInt monomial_count_bound(std::int64_t n, std::int64_t D) {
  if (n < 1 || D < 0) throw DomainError("monomial count needs n >= 1 and D >= 0");
  BigInt c = 1;
  for (std::int64_t i = 1; i <= n; ++i) c = c * (BigInt(D) + i) / i;
  return c;
}

LemmaFit lemma_fit(const CartierAlgebraSpec& spec, std::int64_t e_max, unsigned jobs) {
  if (e_max < 1) throw DomainError("lemma fit needs e_max >= 1");
  return build_lemma(spec, compute_levels(spec, algebra_components(spec, e_max, jobs), true, jobs));
}

GaugeReport gauge_growth(const CartierAlgebraSpec& spec, std::int64_t e_max, unsigned jobs) {
  if (e_max < 1) throw DomainError("gauge growth needs e_max >= 1");
  return build_gauge(spec, compute_levels(spec, algebra_components(spec, e_max, jobs), false, jobs));
}

TheoremCheck theorem_consistency_check(const CartierAlgebraSpec& spec, std::int64_t e_max,
                                       unsigned jobs) {
  auto full = analyze(spec, e_max, jobs);
  require_valid(full.validation);
  return *full.theorem;
}

FullReport analyze(const CartierAlgebraSpec& spec, std::int64_t e_max, unsigned jobs) {
  if (e_max < 1) throw DomainError("analysis needs e_max >= 1");
  FullReport out;
  auto comps = algebra_components(spec, e_max, jobs);
  out.validation = validate_subalgebra(spec, comps, jobs);
  if (!out.validation.valid) return out;
  Computed c = compute_levels(spec, std::move(comps), true, jobs);
  out.complexity = build_complexity(spec, c);
  out.gauge = build_gauge(spec, c);
  out.lemma = build_lemma(spec, c);
  out.theorem = build_theorem(spec, *out.complexity, *out.gauge);
  return out;
}

}  // namespace cartier
