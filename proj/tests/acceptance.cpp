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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
// usage: acceptance <path to cartier executable> <bundled examples dir>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cartier/analysis.hpp"
#include "cartier/cartier_ops.hpp"
#include "cartier/spec_file.hpp"
#include "support/test_support.hpp"

using namespace cartier;
using namespace cartier::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string g_cartier;
std::filesystem::path g_examples;

std::vector<std::filesystem::path> bundled_specs() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(g_examples))
    if (entry.path().extension() == ".spec") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

// 1. kappa_eval against a per-monomial oracle: write α = q·r + α' and
// apply the two-case formula to x^α' (1 when α' = (q-1, ..., q-1), else 0)
// together with κ(x^(q r) x^α') = x^r κ(x^α').
Outcome criterion_1() {
  Outcome o;
  Rng rng(101);
  for (std::int64_t p : {2, 3, 5}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<std::string> names{"x", "y", "z"};
      names.resize(n);
      RingContext ctx(p, names);
      for (std::int64_t e = 0; e <= 3; ++e) {
        const std::int64_t q = ipow(p, e);
        const std::int64_t bound = std::min<std::int64_t>(3 * q + 2, n == 3 ? 30 : 80);
        for_each_in_box(n, bound, [&](const Exps& alpha) {
          Exps r(n), rest(n);
          for (std::size_t i = 0; i < n; ++i) {
            r[i] = alpha[i] / q;
            rest[i] = alpha[i] % q;
          }
          bool base_case = true;
          for (auto v : rest) base_case = base_case && v == q - 1;
          const Polynomial expected = base_case ? monomial_of(ctx, r) : Polynomial(ctx);
          o.require(kappa_eval(e, monomial_of(ctx, alpha)) == expected, "monomial mismatch");
        });
        for (int trial = 0; trial < 20; ++trial) {
          const Polynomial f = random_poly(ctx, rng, 10, 3 * q + 2);
          o.require(to_terms(kappa_eval(e, f)) == oracle_kappa(e, p, to_terms(f)), "polynomial mismatch");
        }
      }
    }
  }
  return o;
}

// 2. Closed-form composition against double application.
Outcome criterion_2() {
  Outcome o;
  Rng rng(202);
  for (std::int64_t p : {2, 3}) {
    RingContext ctx(p, {"x", "y"});
    for (int pair = 0; pair < 20; ++pair) {
      const std::int64_t a = rng.uniform(0, 2);
      const std::int64_t b = rng.uniform(p == 2 ? 0 : 0, p == 2 ? 2 : 3 - a);
      const CartierOperator phi(a, random_poly(ctx, rng, 4, 4));
      const CartierOperator psi(b, random_poly(ctx, rng, 4, 4));
      const CartierOperator comp = op_compose(phi, psi);
      o.require(comp.level() == a + b, "level is not a + b");
      o.require(comp.multiplier() == frobenius_pow(phi.multiplier(), b) * psi.multiplier(), "multiplier form");
      const std::int64_t bound = ipow(p, a + b) + 2;
      for_each_in_box(2, bound, [&](const Exps& beta) {
        const Polynomial r = monomial_of(ctx, beta);
        o.require(op_apply(comp, r) == op_apply(phi, op_apply(psi, r)), "pointwise mismatch");
      });
    }
  }
  return o;
}

// 3. κ^e(c·x^(p^e r + (p^e - 1)·1)) = c·x^r.
Outcome criterion_3() {
  Outcome o;
  Rng rng(303);
  for (std::int64_t p : {2, 3, 5, 7}) {
    RingContext ctx(p, {"x", "y", "z"});
    for (std::int64_t e = 0; e <= 3; ++e) {
      const std::int64_t q = ipow(p, e);
      for (int trial = 0; trial < 40; ++trial) {
        const Exps r = random_exps(rng, 3, 50);
        const std::int64_t c = rng.uniform(1, p - 1);
        Exps alpha(3);
        for (std::size_t i = 0; i < 3; ++i) alpha[i] = q * r[i] + q - 1;
        const Polynomial lhs = kappa_eval(e, Polynomial::monomial(ctx, ExponentVector(alpha), static_cast<Coeff>(c)));
        o.require(lhs == Polynomial::monomial(ctx, ExponentVector(r), static_cast<Coeff>(c)), "identity fails");
      }
    }
  }
  return o;
}

// 4. Fedder computations.
Outcome criterion_4() {
  Outcome o;
  RingContext ctx(2, {"x", "y"});
  const Ideal xy(ctx, {parse_poly("x*y", ctx)});
  o.require(ideals_equal(fedder_ideal(xy, 1), xy), "(I^[2] : I) != (xy)");
  o.require(f_pure_test(xy), "(xy) should be F-pure");
  const Ideal cusp(ctx, {parse_poly("x^2 + y^3", ctx)});
  o.require(!f_pure_test(cusp), "(x^2 + y^3) should not be F-pure");
  return o;
}

// 5. Monomial colon fast path, Groebner colon and brute-force membership.
Outcome criterion_5() {
  Outcome o;
  Rng rng(505);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(n);
    RingContext ctx(trial % 2 == 0 ? 2 : 3, names);
    const auto I_gens = random_monomials(rng, n, static_cast<int>(rng.uniform(1, 4)), 6);
    const auto J_gens = random_monomials(rng, n, static_cast<int>(rng.uniform(1, 2)), 6);
    const Ideal I = monomial_ideal(ctx, I_gens);
    const Ideal J = monomial_ideal(ctx, J_gens);
    const Ideal fast = colon_ideal(I, J, IdealMethod::kAuto);
    const Ideal slow = colon_ideal(I, J, IdealMethod::kGroebner);
    o.require(ideals_equal(fast, slow), "fast path differs from Groebner path");
    std::vector<Exps> fast_exps;
    for (const auto& g : fast.monomial_generators()) fast_exps.push_back(g.values());
    for_each_in_box(n, 12, [&](const Exps& m) {
      bool oracle = true;
      for (const auto& g : J_gens) {
        Exps mg(n);
        for (std::size_t i = 0; i < n; ++i) mg[i] = m[i] + g[i];
        oracle = oracle && monomial_in(mg, I_gens);
      }
      o.require(monomial_in(m, fast_exps) == oracle, "brute-force oracle disagrees");
      o.require(ideal_membership(monomial_of(ctx, m), slow) == oracle, "Groebner membership disagrees");
    });
  }
  return o;
}

// 6. The two-generator example J_e = (x^2, x·y^(e p^e)).
Outcome criterion_6() {
  Outcome o;
  for (std::int64_t p : {2, 3}) {
    RingContext ctx(p, {"x", "y"});
    const FullReport r = analyze(CartierAlgebraSpec::paper_example(ctx), 5);
    o.require(r.validation.valid, "spec does not validate");
    if (!r.validation.valid) return o;
    for (const auto& l : r.gauge->levels) o.require(l.g && *l.g == Rational(l.e), "g(e) != e");
    o.require(r.gauge->verdict == Verdict::kUnboundedEvidence, "verdict is not unbounded-evidence");
    for (const auto& l : r.complexity->levels) o.require(l.delta_k <= 2, "delta_k > 2");
    o.require(compare(r.complexity->cx_estimate, RootValue{2, 5}) <= 0, "cx_estimate > 2^(1/5)");
  }
  return o;
}

// 7. Gauge bounded implies cx <= p^n on FULL and PRINCIPAL families.
Outcome criterion_7() {
  Outcome o;
  Rng rng(707);
  for (std::int64_t p : {2, 3}) {
    const std::int64_t e_max = p == 2 ? 4 : 3;
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<std::string> names{"x", "y", "z"};
      names.resize(n);
      RingContext ctx(p, names);
      const TheoremCheck full = theorem_consistency_check(CartierAlgebraSpec::full(ctx), e_max);
      o.require(full.gauge_verdict == Verdict::kBoundedEvidence, "FULL gauge verdict");
      o.require(full.status == TheoremStatus::kConsistent, "FULL inconsistent");
      for (std::int64_t B = p; B <= 32; ++B) {
        const GaugeExcess k = gauge_excess(CartierOperator(1, Polynomial::constant(ctx, 1)), B);
        o.require(k.value && *k.value <= 0, "gauge_excess(kappa, B) > 0");
      }
    }
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = static_cast<std::size_t>(1 + trial % 3);
      std::vector<std::string> names{"x", "y", "z"};
      names.resize(n);
      RingContext ctx(p, names);
      Polynomial f(ctx);
      while (f.is_zero() || *total_degree(f) > 4) f = random_poly(ctx, rng, 4, 4 / static_cast<std::int64_t>(n) + 1);
      const TheoremCheck tc = theorem_consistency_check(CartierAlgebraSpec::principal(f), e_max);
      o.require(tc.gauge_verdict == Verdict::kBoundedEvidence, "PRINCIPAL(" + format_poly(f) + ") gauge verdict");
      o.require(compare(tc.cx_estimate, RootValue{BigInt(ipow(p, static_cast<std::int64_t>(n))), 1}) <= 0,
                "PRINCIPAL cx_estimate > p^n");
      o.require(tc.status == TheoremStatus::kConsistent, "PRINCIPAL inconsistent");
    }
  }
  return o;
}

// 8. Monomial count and the counting inequality on the corpus.
Outcome criterion_8() {
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::int64_t D = 0; D <= 10; ++D) {
      std::int64_t count = 0;
      for_each_in_box(n, D, [&](const Exps& e) {
        std::int64_t s = 0;
        for (auto v : e) s += v;
        if (s <= D) ++count;
      });
      o.require(monomial_count_bound(static_cast<std::int64_t>(n), D) == count, "binomial != enumeration");
    }
  std::vector<std::pair<CartierAlgebraSpec, std::int64_t>> corpus;
  for (std::int64_t p : {2, 3}) {
    RingContext ctx(p, {"x", "y"});
    corpus.emplace_back(CartierAlgebraSpec::paper_example(ctx), 5);
    corpus.emplace_back(CartierAlgebraSpec::full(ctx), 4);
    corpus.emplace_back(CartierAlgebraSpec::principal(parse_poly("x^2*y + y^3", ctx)), 3);
    corpus.emplace_back(CartierAlgebraSpec::fedder(Ideal(ctx, {parse_poly("x*y", ctx)})), 3);
  }
  for (const auto& path : bundled_specs()) {
    const SpecFile s = parse_spec(path.string());
    corpus.emplace_back(s.algebra, s.e_max);
  }
  for (const auto& [spec, e_max] : corpus) {
    if (!validate_subalgebra(spec, e_max).valid) continue;
    const ComplexityReport cx = complexity_sequence(spec, e_max);
    for (const auto& l : cx.levels) {
      if (!l.max_degree) {
        o.require(l.delta_k == 0, "delta_k > 0 on a zero level");
        continue;
      }
      o.require(BigInt(l.delta_k) <= monomial_count_bound(static_cast<std::int64_t>(cx.n), *l.max_degree),
                "delta_k exceeds C(n + d(J_e), n) for " + spec.description());
    }
  }
  return o;
}

// 9. Combinatorial and linear-algebra minimal generator counts.
Outcome criterion_9() {
  Outcome o;
  Rng rng(909);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(n);
    RingContext ctx(trial % 3 == 0 ? 3 : 2, names);
    const Ideal I = monomial_ideal(ctx, random_monomials(rng, n, static_cast<int>(rng.uniform(1, 6)), 5));
    const MinimalGenerators m = minimal_generators(I);
    o.require(m.ideal_class == IdealClass::kMonomial, "random monomial ideal not classified monomial");
    o.require(m.generators.size() == nakayama_generators(I).size(), "counts differ");
    o.require(m.generators.size() == nakayama_quotient_count(I, Ideal::zero(ctx)), "quotient count differs");
  }
  return o;
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return out + "\n<status " + std::to_string(status) + ">";
}

// 10. `cartier report` is byte-identical across runs and job counts.
Outcome criterion_10() {
  Outcome o;
  const auto specs = bundled_specs();
  o.require(!specs.empty(), "no bundled specs found");
  for (const auto& path : specs) {
    const std::string base = "\"" + g_cartier + "\" report --spec \"" + path.string() + "\"";
    const std::string first = capture(base);
    o.require(first == capture(base), "two runs differ on " + path.filename().string());
    o.require(first == capture(base + " --jobs 4"), "--jobs 4 differs on " + path.filename().string());
    o.require(first.find("<status 0>") != std::string::npos, "report failed on " + path.filename().string());
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <cartier executable> <examples dir>\n";
    return 2;
  }
  g_cartier = argv[1];
  g_examples = argv[2];
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 means no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "kappa formula suite", 5, criterion_1},
      {2, "composition law", 10, criterion_2},
      {3, "monomial identity kappa^e(c x^(p^e r + (p^e-1))) = c x^r", 0, criterion_3},
      {4, "Fedder computations", 1, criterion_4},
      {5, "colon oracle equivalence", 0, criterion_5},
      {6, "two-generator example reproduction", 30, criterion_6},
      {7, "gauge bounded implies cx <= p^n", 0, criterion_7},
      {8, "counting identity", 0, criterion_8},
      {9, "minimal generator cross-check", 0, criterion_9},
      {10, "report determinism", 0, criterion_10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.ok = false;
      o.detail = "time limit " + std::to_string(c.limit_seconds) + " s exceeded";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.ok ? "PASS " : "FAIL ") << c.id << ": " << c.name << " (" << timing << ")";
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << std::endl;
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
