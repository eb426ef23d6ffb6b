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

#ifndef CARTIER_IDEAL_HPP
#define CARTIER_IDEAL_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cartier/monomial_order.hpp"
#include "cartier/polynomial.hpp"
#include "cartier/ring.hpp"

namespace cartier {

/// Upper limit on the number of S-pair reductions a single Buchberger run
/// may perform before it gives up with ResourceError.
inline constexpr std::size_t kDefaultGroebnerBudget = 200000;

/// Process-wide work budget used by every Groebner computation.
void set_groebner_work_budget(std::size_t max_pair_reductions) noexcept;
std::size_t groebner_work_budget() noexcept;

/// An ideal of F_p[x_1..x_n] given by generators.  Zero generators are
/// dropped, so the zero ideal has an empty generator list.  Reduced Groebner
/// bases are computed lazily, once per monomial order, and shared between
/// copies; the cache is safe to fill from several threads.
class Ideal {
 public:
  Ideal(RingContext ctx, std::vector<Polynomial> generators);

  static Ideal unit(const RingContext& ctx);
  static Ideal zero(const RingContext& ctx);
  /// The homogeneous maximal ideal (x_1, ..., x_n).
  static Ideal maximal(const RingContext& ctx);
  static Ideal from_monomials(const RingContext& ctx, const std::vector<ExponentVector>& monomials);

  const RingContext& context() const noexcept { return ctx_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  /// Every given generator is a single term.
  bool generators_are_monomials() const noexcept;
  /// True iff the ideal is generated by monomials; decided from the given
  /// generators or, failing that, from the reduced grevlex basis.
  bool is_monomial() const;
  /// Every given generator is homogeneous.
  bool is_homogeneous() const;

  /// Minimal monomial generators (sorted by storage order) of a monomial
  /// ideal.  Throws UnsupportedIdealClass if the ideal is not monomial.
  std::vector<ExponentVector> monomial_generators() const;

  /// Cached reduced Groebner basis, sorted by increasing leading monomial.
  const std::vector<Polynomial>& groebner(const MonomialOrder& order) const;

  std::string to_string() const;

 private:
  struct Cache;

  RingContext ctx_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Reduced Groebner basis by Buchberger's algorithm with the coprime and
/// chain criteria; monic, interreduced and sorted by leading monomial.
std::vector<Polynomial> reduced_groebner(const Ideal& I, const MonomialOrder& order);

/// Leading term of f for an arbitrary order (f must be nonzero).
Polynomial::Term leading_term(const Polynomial& f, const MonomialOrder& order);

Polynomial normal_form(const Polynomial& f, const Ideal& I, const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const Ideal& I);
bool ideal_membership(const Polynomial& f, const Ideal& I);
/// J ⊆ I, tested generator-wise.
bool ideal_contains(const Ideal& I, const Ideal& J);
bool ideals_equal(const Ideal& I, const Ideal& J);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
/// Generated by all pairwise products (monomial products are pruned).
Ideal ideal_product(const Ideal& I, const Ideal& J);

/// Which algorithm computes colons and intersections.  kAuto uses the exact
/// combinatorial formulas for monomial inputs; kGroebner always goes through
/// elimination (used to cross-check the fast path).
enum class IdealMethod { kAuto, kGroebner };

Ideal intersect(const Ideal& I, const Ideal& J, IdealMethod method = IdealMethod::kAuto);
/// I^[p^e]: the ideal generated by p^e-th powers of the generators.
Ideal bracket_power(const Ideal& I, std::int64_t e);
/// (I : J) = {f : f J ⊆ I}.  Throws DomainError if J = 0.
Ideal colon_ideal(const Ideal& I, const Ideal& J, IdealMethod method = IdealMethod::kAuto);
/// (I^[p^e] : I), e >= 1.
Ideal fedder_ideal(const Ideal& I, std::int64_t e);
/// Fedder's criterion at the origin: (I^[p] : I) is not contained in m^[p].
/// Requires a proper ideal I ⊆ m = (x_1..x_n); throws DomainError otherwise.
bool f_pure_test(const Ideal& I);

/// Exact quotient h / g; throws DomainError when g does not divide h.
Polynomial divide_exact(const Polynomial& h, const Polynomial& g);

enum class IdealClass { kZero, kMonomial, kPrincipal, kHomogeneous };

std::string to_string(IdealClass c);

struct MinimalGenerators {
  IdealClass ideal_class;
  std::vector<Polynomial> generators;
  /// Largest total degree among the generators (d(J) in the counting bound);
  /// nullopt for the zero ideal.
  std::optional<std::int64_t> max_degree;
  /// Largest max-norm among the generators.
  std::optional<std::int64_t> max_norm;
};

/// A minimal generating set.  Monomial ideals: the unique minimal monomial
/// generators.  Principal ideals: the single monic generator.  Homogeneous
/// ideals: a subset of the given generators chosen by graded Nakayama (exact
/// linear algebra degree by degree).  Anything else raises
/// UnsupportedIdealClass.
MinimalGenerators minimal_generators(const Ideal& I);

/// Graded Nakayama with the linear-algebra route forced, for homogeneous
/// generators (including monomials).  Returns the chosen generators.
std::vector<Polynomial> nakayama_generators(const Ideal& I);

/// Minimal number of generators of J / (J ∩ ...) counted as
/// sum_d dim (J / (m J + T))_d, for homogeneous generators of J and T.
std::size_t nakayama_quotient_count(const Ideal& J, const Ideal& T);

/// dim_{F_p} I_d for homogeneous or monomial I, by linear algebra on the
/// monomial basis of S_d.
std::size_t graded_dim(const Ideal& I, std::int64_t d);

}  // namespace cartier

#endif  // CARTIER_IDEAL_HPP
