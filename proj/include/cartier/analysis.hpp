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

#ifndef CARTIER_ANALYSIS_HPP
#define CARTIER_ANALYSIS_HPP

// Complexity sequences and gauge growth of Cartier algebras ⊕ κ^e J_e.
//
// Conventions used throughout:
//  * k_0 = 1: D_0 = R contributes the identity as its single generator.
//  * The new generators in degree e are the minimal generators of J_e / T_e
//    where T_e = Σ_{a+b=e, a,b>=1} J_a^[p^b]·J_b is the degree-e part of the
//    subring generated below e.  Two factors suffice: D is a ring, so a
//    product of three or more homogeneous factors of total degree e is
//    already a product of one element of D_a and one of D_b, a + b = e.
//    With a quotient I, I^[p^e] is added to T_e (those operators vanish on R).
//  * Every statistic is a window statistic over 1 <= e <= e_max and is
//    labelled as evidence, never as an asymptotic statement.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cartier/algebra_spec.hpp"
#include "cartier/ideal.hpp"
#include "cartier/rational.hpp"

namespace cartier {

enum class Verdict { kBoundedEvidence, kUnboundedEvidence, kInconclusive };

std::string to_string(Verdict v);

/// Tail rule on a sequence s_1..s_m.  With d1, d2 the last two increments:
/// unbounded-evidence if d1 > 0, d2 > 0 and d2 >= d1 (strict growth over the
/// last three levels without slowing down); bounded-evidence if d2 <= 0 or
/// 2·d2 <= d1 (growth stopped or at least halving); inconclusive otherwise,
/// and always when m < 3.
Verdict growth_verdict(const std::vector<Rational>& sequence);

/// The exact algebraic number base^(1/root), root >= 1.
struct RootValue {
  BigInt base = 1;
  std::int64_t root = 1;

  std::string to_string() const;
  /// Decimal approximation with six digits.
  std::string approx() const;
  double to_double() const;
};

/// Exact three-way comparison of two roots.
int compare(const RootValue& a, const RootValue& b);

/// T_e = Σ_{a+b=e, a,b>=1} J_a^[p^b]·J_b, with generators interreduced.
/// Zero ideal for e < 2.
Ideal product_piece(const CartierAlgebraSpec& spec, std::int64_t e);
Ideal product_piece(const std::vector<Ideal>& components, std::int64_t e);

/// Δk_e: minimal number of generators of J_e / (T_e [+ I^[p^e]]).
/// Monomial J_e: minimal monomial generators outside T_e + m·J_e.  Principal
/// J_e = (g): 1 unless g ∈ T_e.  Homogeneous: Σ_d dim (J_e / (m J_e + T_e))_d.
/// Throws UnsupportedIdealClass otherwise.  Δk_0 = 1 by the k_0 convention.
std::int64_t new_generator_count(const CartierAlgebraSpec& spec, std::int64_t e);

struct ComplexityLevel {
  std::int64_t e = 0;
  std::int64_t k = 0;        // cumulative count k_e
  std::int64_t delta_k = 0;  // k_e - k_{e-1}
  IdealClass ideal_class = IdealClass::kZero;
  std::size_t num_generators = 0;           // minimal generators of J_e
  std::optional<std::int64_t> max_degree;   // d(J_e)
  std::optional<std::int64_t> max_norm;     // max-norm analogue of d(J_e)
};

struct ComplexityReport {
  std::int64_t p = 0;
  std::size_t n = 0;
  std::int64_t e_max = 0;
  std::int64_t k0 = 1;
  std::vector<ComplexityLevel> levels;  // e = 1..e_max
  /// Windowed limsup: Δk_{e_max}^(1/e_max), or 1 when that count is <= 1.
  RootValue cx_estimate;
  /// max over 2 <= e <= e_max with Δk_e > 0 of Δk_e^(1/e), at least 1.
  RootValue window_max;
  std::int64_t window_max_level = 0;
  /// log_p(cx_estimate).
  double expF_estimate = 0.0;
  /// Shape of Δk_e over the last three levels.
  std::string trend;
};

/// Requires a valid spec (validate_subalgebra must pass); throws DomainError
/// otherwise.
ComplexityReport complexity_sequence(const CartierAlgebraSpec& spec, std::int64_t e_max,
                                     unsigned jobs = 1);

/// Number of monomials of total degree <= D in n variables: C(n + D, n).
BigInt monomial_count_bound(std::int64_t n, std::int64_t D);

struct LemmaFit {
  /// Least integer t for which d(J_e) / p^(t e) shows bounded-evidence over
  /// the window; empty if no t <= max_t qualifies or fewer than three
  /// nonzero levels are available.
  std::optional<std::int64_t> t;
  std::optional<BigInt> K;             // least integer K with d(J_e) <= K p^(te)
  std::optional<std::int64_t> expF_bound;  // t·n
  std::optional<BigInt> cx_bound;      // p^(t n)
  std::vector<std::optional<std::int64_t>> degrees;  // d(J_e), e = 1..e_max
  std::vector<bool> counting_ok;       // Δk_e <= C(n + d(J_e), n)
  bool counting_all_ok = true;
};

LemmaFit lemma_fit(const CartierAlgebraSpec& spec, std::int64_t e_max, unsigned jobs = 1);

struct GaugeLevel {
  std::int64_t e = 0;
  std::vector<Polynomial> generators;
  std::vector<std::int64_t> gauges;  // δ(f_i) (max-norm)
  std::optional<Rational> g;         // max δ(f_i) / p^e; empty when J_e = 0
  Verdict verdict_so_far = Verdict::kInconclusive;
};

struct GaugeReport {
  std::int64_t e_max = 0;
  std::vector<GaugeLevel> levels;
  std::optional<Rational> sup_g;
  Verdict verdict = Verdict::kInconclusive;
  std::string trend;
  /// For bounded-evidence: K_window = sup g and the check
  /// δ(f_i) <= ceil(K_window)·p^e over all levels.
  std::optional<Rational> k_window;
  bool claim_check = true;
};

GaugeReport gauge_growth(const CartierAlgebraSpec& spec, std::int64_t e_max, unsigned jobs = 1);

enum class TheoremStatus { kConsistent, kInconsistent, kNotApplicable };

std::string to_string(TheoremStatus s);

struct TheoremCheck {
  TheoremStatus status = TheoremStatus::kNotApplicable;
  Verdict gauge_verdict = Verdict::kInconclusive;
  RootValue cx_estimate;
  BigInt p_to_n;
  std::string note;
};

TheoremCheck theorem_consistency_check(const CartierAlgebraSpec& spec, std::int64_t e_max,
                                       unsigned jobs = 1);

/// Everything the `report` command prints, computed once.
struct FullReport {
  ValidationReport validation;
  std::optional<ComplexityReport> complexity;
  std::optional<GaugeReport> gauge;
  std::optional<LemmaFit> lemma;
  std::optional<TheoremCheck> theorem;
};

FullReport analyze(const CartierAlgebraSpec& spec, std::int64_t e_max, unsigned jobs = 1);

}  // namespace cartier

#endif  // CARTIER_ANALYSIS_HPP
