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

#include "cartier/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>

#include "cartier/checked.hpp"
#include "cartier/detail/flat_poly.hpp"
#include "cartier/error.hpp"
#include "cartier/linalg.hpp"

namespace cartier {

namespace {

using detail::FlatPoly;

std::atomic<std::size_t> g_work_budget{kDefaultGroebnerBudget};

struct OrderCmp {
  const MonomialOrder* order;
  int operator()(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const noexcept {
    return order->compare(a, b);
  }
};

void require_same_ring(const RingContext& a, const RingContext& b) {
  if (!(a == b)) throw ContextMismatch();
}

FlatPoly ordered(const Polynomial& f, const OrderCmp& cmp) {
  FlatPoly d = f.flat();
  detail::normalize(d, cmp, f.context().field());
  return d;
}

void make_monic(FlatPoly& f, const PrimeField& F) {
  if (f.empty() || f.coeffs[0] == 1) return;
  Coeff inv = F.inv(f.coeffs[0]);
  for (auto& c : f.coeffs) c = F.mul(c, inv);
}

void drop_front(FlatPoly& f, std::size_t k) {
  f.exps.erase(f.exps.begin(), f.exps.begin() + static_cast<std::ptrdiff_t>(k * f.n));
  f.coeffs.erase(f.coeffs.begin(), f.coeffs.begin() + static_cast<std::ptrdiff_t>(k));
}

const FlatPoly* find_divisor(std::span<const std::int64_t> m, const std::vector<FlatPoly>& G,
                             const FlatPoly* skip = nullptr) {
  for (const auto& g : G)
    if (&g != skip && mono::divides(g.mono(0), m)) return &g;
  return nullptr;
}

/// Full remainder of p modulo the monic polynomials G.
FlatPoly reduce_full(FlatPoly p, const std::vector<FlatPoly>& G, const OrderCmp& cmp,
                     const PrimeField& F, const FlatPoly* skip = nullptr) {
  FlatPoly r(p.n);
  std::vector<std::int64_t> shift(p.n);
  while (!p.empty()) {
    if (const FlatPoly* g = find_divisor(p.mono(0), G, skip)) {
      mono::divide(p.mono(0), g->mono(0), shift);
      p = detail::add_scaled(p, F.neg(p.coeffs[0]), shift, *g, cmp, F);
      continue;
    }
    // Move the whole irreducible prefix to the remainder at once.
    std::size_t k = 1;
    while (k < p.size() && find_divisor(p.mono(k), G, skip) == nullptr) ++k;
    for (std::size_t i = 0; i < k; ++i) r.push(p.mono(i), p.coeffs[i]);
    drop_front(p, k);
  }
  return r;
}

struct Pair {
  std::size_t i, j;
  std::vector<std::int64_t> lcm;
};

std::vector<std::vector<std::int64_t>> prune_monomials(std::vector<std::vector<std::int64_t>> mons) {
  std::sort(mons.begin(), mons.end(), [](const auto& a, const auto& b) {
    return Polynomial::storage_compare(a, b) < 0;
  });
  std::vector<std::vector<std::int64_t>> kept;
  for (auto& m : mons) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const auto& k) { return mono::divides(k, m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  return kept;
}

std::vector<FlatPoly> buchberger(std::vector<FlatPoly> input, const OrderCmp& cmp,
                                 const PrimeField& F) {
  const std::size_t budget = g_work_budget.load();
  std::vector<FlatPoly> G;
  std::vector<Pair> pending;
  std::size_t n = input.empty() ? 0 : input.front().n;

  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::any_of(pending.begin(), pending.end(),
                       [&](const Pair& pr) { return pr.i == a && pr.j == b; });
  };
  auto add = [&](FlatPoly h) {
    make_monic(h, F);
    std::size_t k = G.size();
    G.push_back(std::move(h));
    for (std::size_t i = 0; i < k; ++i) {
      Pair pr{i, k, std::vector<std::int64_t>(n)};
      mono::lcm(G[i].mono(0), G[k].mono(0), pr.lcm);
      pending.push_back(std::move(pr));
    }
  };

  for (auto& f : input) {
    FlatPoly h = reduce_full(std::move(f), G, cmp, F);
    if (!h.empty()) add(std::move(h));
  }

  std::size_t reductions = 0;
  std::vector<std::int64_t> shift(n);
  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      return cmp(a.lcm, b.lcm) < 0;
    });
    Pair pr = std::move(*best);
    pending.erase(best);

    const auto lead_i = G[pr.i].mono(0);
    const auto lead_j = G[pr.j].mono(0);
    if (mono::coprime(lead_i, lead_j)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (mono::divides(G[k].mono(0), pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k))
        chain = true;
    }
    if (chain) continue;

    if (++reductions > budget)
      throw ResourceError("Groebner work budget of " + std::to_string(budget) +
                          " S-pair reductions exhausted");
    mono::divide(pr.lcm, lead_i, shift);
    FlatPoly s = detail::scale_shift(G[pr.i], 1, shift, F);
    mono::divide(pr.lcm, lead_j, shift);
    s = detail::add_scaled(s, F.neg(1), shift, G[pr.j], cmp, F);
    FlatPoly h = reduce_full(std::move(s), G, cmp, F);
    if (!h.empty()) add(std::move(h));
  }

  // Minimalize, then interreduce.
  std::sort(G.begin(), G.end(),
            [&](const FlatPoly& a, const FlatPoly& b) { return cmp(a.mono(0), b.mono(0)) < 0; });
  std::vector<FlatPoly> minimal;
  for (auto& g : G) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const FlatPoly& h) {
      return mono::divides(h.mono(0), g.mono(0));
    });
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<FlatPoly> reduced;
  reduced.reserve(minimal.size());
  for (const auto& g : minimal) {
    FlatPoly tail = g;
    drop_front(tail, 1);
    FlatPoly r = reduce_full(std::move(tail), minimal, cmp, F, &g);
    FlatPoly out(g.n);
    out.push(g.mono(0), 1);
    reduced.push_back(detail::add_scaled(out, 1, {}, r, cmp, F));
  }
  return reduced;
}

Polynomial embed(const Polynomial& f, const RingContext& big, std::size_t offset) {
  FlatPoly d(big.n());
  d.reserve(f.num_terms());
  std::vector<std::int64_t> e(big.n(), 0);
  for (std::size_t i = 0; i < f.num_terms(); ++i) {
    auto t = f.term(i);
    std::copy(t.exponents.begin(), t.exponents.end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
    d.push(e, t.coeff);
  }
  return Polynomial::from_flat(big, std::move(d));
}

/// Drops the first `offset` exponents; returns nullopt if any is nonzero.
std::optional<Polynomial> project(const Polynomial& f, const RingContext& small, std::size_t offset) {
  FlatPoly d(small.n());
  for (std::size_t i = 0; i < f.num_terms(); ++i) {
    auto t = f.term(i);
    for (std::size_t k = 0; k < offset; ++k)
      if (t.exponents[k] != 0) return std::nullopt;
    d.push(t.exponents.subspan(offset), t.coeff);
  }
  return Polynomial::from_flat(small, std::move(d));
}

bool in_monomial_ideal(const Polynomial& f, const std::vector<ExponentVector>& mons) {
  for (std::size_t i = 0; i < f.num_terms(); ++i) {
    auto e = f.term(i).exponents;
    bool hit = std::any_of(mons.begin(), mons.end(),
                           [&](const ExponentVector& m) { return mono::divides(m.span(), e); });
    if (!hit) return false;
  }
  return true;
}

Polynomial delete_monomial_multiples(const Polynomial& f, const std::vector<ExponentVector>& mons) {
  FlatPoly d(f.context().n());
  for (std::size_t i = 0; i < f.num_terms(); ++i) {
    auto t = f.term(i);
    bool hit = std::any_of(mons.begin(), mons.end(),
                           [&](const ExponentVector& m) { return mono::divides(m.span(), t.exponents); });
    if (!hit) d.push(t.exponents, t.coeff);
  }
  return Polynomial::from_flat(f.context(), std::move(d));
}

std::optional<Polynomial> try_divide(const Polynomial& h, const Polynomial& g) {
  require_same_ring(h.context(), g.context());
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const auto& ctx = h.context();
  const auto& F = ctx.field();
  struct StorageCmp {
    int operator()(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const noexcept {
      return Polynomial::storage_compare(a, b);
    }
  };
  FlatPoly r = h.flat();
  FlatPoly q(ctx.n());
  auto lg = g.leading_term();
  Coeff inv = F.inv(lg.coeff);
  std::vector<std::int64_t> shift(ctx.n());
  while (!r.empty()) {
    if (!mono::divides(lg.exponents, r.mono(0))) return std::nullopt;
    mono::divide(r.mono(0), lg.exponents, shift);
    Coeff c = F.mul(r.coeffs[0], inv);
    q.push(shift, c);
    r = detail::add_scaled(r, F.neg(c), shift, g.flat(), StorageCmp{}, F);
  }
  return Polynomial::from_flat(ctx, std::move(q));
}

std::vector<Polynomial> monomials_to_polys(const RingContext& ctx,
                                           const std::vector<ExponentVector>& mons) {
  std::vector<Polynomial> out;
  out.reserve(mons.size());
  for (const auto& m : mons) out.push_back(Polynomial::monomial(ctx, m));
  return out;
}

}  // namespace

void set_groebner_work_budget(std::size_t max_pair_reductions) noexcept {
  g_work_budget.store(max_pair_reductions);
}

std::size_t groebner_work_budget() noexcept { return g_work_budget.load(); }

// ---------------------------------------------------------------------------
// Ideal

struct Ideal::Cache {
  std::mutex mutex;
  std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> bases;
  std::optional<bool> monomial;
};

Ideal::Ideal(RingContext ctx, std::vector<Polynomial> generators)
    : ctx_(std::move(ctx)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(ctx_, g.context());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(const RingContext& ctx) { return Ideal(ctx, {Polynomial::constant(ctx, 1)}); }

Ideal Ideal::zero(const RingContext& ctx) { return Ideal(ctx, {}); }

Ideal Ideal::maximal(const RingContext& ctx) {
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < ctx.n(); ++i) g.push_back(Polynomial::variable(ctx, i));
  return Ideal(ctx, std::move(g));
}

Ideal Ideal::from_monomials(const RingContext& ctx, const std::vector<ExponentVector>& monomials) {
  return Ideal(ctx, monomials_to_polys(ctx, monomials));
}

bool Ideal::generators_are_monomials() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

bool Ideal::is_monomial() const {
  if (generators_are_monomials()) return true;
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->monomial) return *cache_->monomial;
  }
  const auto& gb = groebner(MonomialOrder::grevlex(ctx_.n()));
  bool mono = std::all_of(gb.begin(), gb.end(), [](const Polynomial& g) { return g.is_monomial(); });
  std::lock_guard lock(cache_->mutex);
  cache_->monomial = mono;
  return mono;
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

std::vector<ExponentVector> Ideal::monomial_generators() const {
  std::vector<std::vector<std::int64_t>> mons;
  if (generators_are_monomials()) {
    for (const auto& g : gens_) {
      auto e = g.leading_term().exponents;
      mons.emplace_back(e.begin(), e.end());
    }
  } else if (is_monomial()) {
    for (const auto& g : groebner(MonomialOrder::grevlex(ctx_.n()))) {
      auto e = g.leading_term().exponents;
      mons.emplace_back(e.begin(), e.end());
    }
  } else {
    throw UnsupportedIdealClass("ideal " + to_string() + " is not a monomial ideal");
  }
  std::vector<ExponentVector> out;
  for (auto& m : prune_monomials(std::move(mons))) out.emplace_back(std::move(m));
  return out;
}

const std::vector<Polynomial>& Ideal::groebner(const MonomialOrder& order) const {
  if (order.size() != ctx_.n()) throw DomainError("monomial order does not match the ring");
  std::lock_guard lock(cache_->mutex);
  auto key = order.key();
  if (auto it = cache_->bases.find(key); it != cache_->bases.end()) return *it->second;

  OrderCmp cmp{&order};
  const auto& F = ctx_.field();
  std::vector<Polynomial> result;
  if (generators_are_monomials()) {
    std::vector<std::vector<std::int64_t>> mons;
    for (const auto& g : gens_) {
      auto e = g.leading_term().exponents;
      mons.emplace_back(e.begin(), e.end());
    }
    mons = prune_monomials(std::move(mons));
    std::sort(mons.begin(), mons.end(), [&](const auto& a, const auto& b) { return cmp(a, b) < 0; });
    for (auto& m : mons) result.push_back(Polynomial::monomial(ctx_, ExponentVector(std::move(m))));
  } else {
    std::vector<FlatPoly> input;
    for (const auto& g : gens_) input.push_back(ordered(g, cmp));
    for (auto& g : buchberger(std::move(input), cmp, F))
      result.push_back(Polynomial::from_flat(ctx_, std::move(g)));
  }
  auto stored = std::make_shared<const std::vector<Polynomial>>(std::move(result));
  return *cache_->bases.emplace(key, std::move(stored)).first->second;
}

std::string Ideal::to_string() const {
  if (gens_.empty()) return "[0]";
  std::string s = "[";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) s += ", ";
    s += format_poly(gens_[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Operations

std::vector<Polynomial> reduced_groebner(const Ideal& I, const MonomialOrder& order) {
  return I.groebner(order);
}

Polynomial::Term leading_term(const Polynomial& f, const MonomialOrder& order) {
  auto best = f.term(0);
  for (std::size_t i = 1; i < f.num_terms(); ++i) {
    auto t = f.term(i);
    if (order.compare(t.exponents, best.exponents) > 0) best = t;
  }
  return best;
}

Polynomial normal_form(const Polynomial& f, const Ideal& I, const MonomialOrder& order) {
  require_same_ring(f.context(), I.context());
  if (I.is_zero() || f.is_zero()) return f;
  if (I.is_monomial()) return delete_monomial_multiples(f, I.monomial_generators());
  OrderCmp cmp{&order};
  std::vector<FlatPoly> G;
  for (const auto& g : I.groebner(order)) G.push_back(ordered(g, cmp));
  return Polynomial::from_flat(f.context(), reduce_full(ordered(f, cmp), G, cmp, f.context().field()));
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  return normal_form(f, I, MonomialOrder::grevlex(f.context().n()));
}

bool ideal_membership(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.context(), I.context());
  if (f.is_zero()) return true;
  if (I.is_zero()) return false;
  if (I.is_monomial()) return in_monomial_ideal(f, I.monomial_generators());
  return normal_form(f, I).is_zero();
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
  return std::all_of(J.generators().begin(), J.generators().end(),
                     [&](const Polynomial& g) { return ideal_membership(g, I); });
}

bool ideals_equal(const Ideal& I, const Ideal& J) { return ideal_contains(I, J) && ideal_contains(J, I); }

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.context(), J.context());
  auto g = I.generators();
  g.insert(g.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.context(), std::move(g));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.context(), J.context());
  const auto& ctx = I.context();
  if (I.generators_are_monomials() && J.generators_are_monomials()) {
    std::vector<std::vector<std::int64_t>> mons;
    std::vector<std::int64_t> e(ctx.n());
    for (const auto& a : I.generators())
      for (const auto& b : J.generators()) {
        mono::multiply(a.leading_term().exponents, b.leading_term().exponents, e);
        mons.push_back(e);
      }
    std::vector<Polynomial> g;
    for (auto& m : prune_monomials(std::move(mons)))
      g.push_back(Polynomial::monomial(ctx, ExponentVector(std::move(m))));
    return Ideal(ctx, std::move(g));
  }
  std::vector<Polynomial> g;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) {
      Polynomial prod = (a * b).monic();
      if (std::find(g.begin(), g.end(), prod) == g.end()) g.push_back(std::move(prod));
    }
  return Ideal(ctx, std::move(g));
}

Ideal intersect(const Ideal& I, const Ideal& J, IdealMethod method) {
  require_same_ring(I.context(), J.context());
  const auto& ctx = I.context();
  if (I.is_zero() || J.is_zero()) return Ideal::zero(ctx);
  if (method == IdealMethod::kAuto && I.is_monomial() && J.is_monomial()) {
    std::vector<std::vector<std::int64_t>> mons;
    for (const auto& a : I.monomial_generators())
      for (const auto& b : J.monomial_generators()) mons.push_back(mono::lcm(a, b).values());
    std::vector<Polynomial> g;
    for (auto& m : prune_monomials(std::move(mons)))
      g.push_back(Polynomial::monomial(ctx, ExponentVector(std::move(m))));
    return Ideal(ctx, std::move(g));
  }
  // I ∩ J = (t I + (1 - t) J) ∩ S, via an order eliminating t.
  RingContext big = ctx.with_leading_variables(1);
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * embed(f, big, 1));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * embed(g, big, 1));
  Ideal elim(big, std::move(gens));
  std::vector<Polynomial> out;
  for (const auto& g : elim.groebner(MonomialOrder::elimination(big.n(), 1)))
    if (auto h = project(g, ctx, 1)) out.push_back(std::move(*h));
  return Ideal(ctx, std::move(out));
}

Ideal bracket_power(const Ideal& I, std::int64_t e) {
  if (e < 0) throw DomainError("negative Frobenius level");
  if (e == 0) return I;
  std::vector<Polynomial> g;
  g.reserve(I.generators().size());
  for (const auto& f : I.generators()) g.push_back(frobenius_pow(f, e));
  return Ideal(I.context(), std::move(g));
}

namespace {

Ideal colon_by_element(const Ideal& I, const Polynomial& g, IdealMethod method) {
  const auto& ctx = I.context();
  if (g.is_zero()) throw DomainError("colon by the zero ideal");
  if (g.is_constant() || I.is_zero()) return I;
  if (method == IdealMethod::kAuto) {
    if (g.is_monomial() && I.is_monomial()) {
      auto gm = ExponentVector(g.leading_term().exponents);
      std::vector<std::vector<std::int64_t>> mons;
      for (const auto& m : I.monomial_generators())
        mons.push_back(mono::quotient(m, mono::gcd(m, gm)).values());
      std::vector<Polynomial> out;
      for (auto& m : prune_monomials(std::move(mons)))
        out.push_back(Polynomial::monomial(ctx, ExponentVector(std::move(m))));
      return Ideal(ctx, std::move(out));
    }
    // ((a) : (g)) = (a / g) whenever g divides a.
    if (I.generators().size() == 1) {
      if (auto q = try_divide(I.generators().front(), g)) return Ideal(ctx, {std::move(*q)});
    }
  }
  Ideal both = intersect(I, Ideal(ctx, {g}), method);
  std::vector<Polynomial> out;
  for (const auto& h : both.generators()) out.push_back(divide_exact(h, g));
  return Ideal(ctx, std::move(out));
}

}  // namespace

Ideal colon_ideal(const Ideal& I, const Ideal& J, IdealMethod method) {
  require_same_ring(I.context(), J.context());
  if (J.is_zero()) throw DomainError("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    Ideal part = colon_by_element(I, g, method);
    acc = acc ? intersect(*acc, part, method) : part;
  }
  return *acc;
}

Ideal fedder_ideal(const Ideal& I, std::int64_t e) {
  if (e < 1) throw DomainError("the Fedder ideal needs level e >= 1");
  if (I.is_zero()) return Ideal::unit(I.context());
  return colon_ideal(bracket_power(I, e), I);
}

bool f_pure_test(const Ideal& I) {
  const auto& ctx = I.context();
  if (ideal_membership(Polynomial::constant(ctx, 1), I))
    throw DomainError("F-purity test needs a proper ideal, got the unit ideal");
  for (const auto& g : I.generators())
    if (g.coefficient(ExponentVector(ctx.n())) != 0)
      throw DomainError("F-purity test needs I inside (x_1..x_n); generator " + format_poly(g) +
                        " has a constant term");
  Ideal fedder = fedder_ideal(I, 1);
  std::vector<ExponentVector> frob_max;
  for (std::size_t i = 0; i < ctx.n(); ++i) {
    ExponentVector e(ctx.n());
    e[i] = ctx.p();
    frob_max.push_back(std::move(e));
  }
  for (const auto& f : fedder.groebner(MonomialOrder::grevlex(ctx.n())))
    if (!in_monomial_ideal(f, frob_max)) return true;
  return false;
}

Polynomial divide_exact(const Polynomial& h, const Polynomial& g) {
  auto q = try_divide(h, g);
  if (!q) throw DomainError(format_poly(g) + " does not divide " + format_poly(h));
  return std::move(*q);
}

std::string to_string(IdealClass c) {
  switch (c) {
    case IdealClass::kZero: return "zero";
    case IdealClass::kMonomial: return "monomial";
    case IdealClass::kPrincipal: return "principal";
    case IdealClass::kHomogeneous: return "homogeneous";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Graded linear algebra

namespace {

class DegreeColumns {
 public:
  SparseEchelon::Row row(const Polynomial& f) {
    SparseEchelon::Row r;
    r.reserve(f.num_terms());
    for (std::size_t i = 0; i < f.num_terms(); ++i) {
      auto t = f.term(i);
      auto [it, inserted] = index_.try_emplace(ExponentVector(t.exponents), index_.size());
      r.emplace_back(it->second, t.coeff);
    }
    std::sort(r.begin(), r.end());
    return r;
  }

 private:
  std::map<ExponentVector, std::size_t> index_;
};

struct GradedResult {
  std::vector<Polynomial> chosen;  // generators of J independent mod m J + T
  std::size_t final_dim = 0;       // dim J_d at the last stepped degree
};

std::map<std::int64_t, std::vector<Polynomial>> by_degree(const std::vector<Polynomial>& gens) {
  std::map<std::int64_t, std::vector<Polynomial>> out;
  for (const auto& g : gens) {
    if (!g.is_homogeneous())
      throw UnsupportedIdealClass("generator " + format_poly(g) + " is not homogeneous");
    out[*total_degree(g)].push_back(g);
  }
  return out;
}

/// Steps through degrees min_deg(J)..last keeping a basis of J_d, and picks
/// the generators of J that are independent modulo (m J)_d + T_d.
GradedResult graded_scan(const RingContext& ctx, const std::vector<Polynomial>& jgens,
                         const std::vector<Polynomial>& tgens, std::optional<std::int64_t> last) {
  GradedResult res;
  auto jdeg = by_degree(jgens);
  auto tdeg = by_degree(tgens);
  if (jdeg.empty()) return res;
  std::int64_t lo = jdeg.begin()->first;
  std::int64_t hi = last ? *last : jdeg.rbegin()->first;
  const auto& F = ctx.field();
  std::vector<Polynomial> basis;
  for (std::int64_t d = lo; d <= hi; ++d) {
    DegreeColumns cols;
    SparseEchelon span_j(F), span_u(F);
    std::vector<Polynomial> next;
    for (const auto& b : basis)
      for (std::size_t i = 0; i < ctx.n(); ++i) {
        Polynomial xb = b * Polynomial::variable(ctx, i);
        auto r = cols.row(xb);
        span_u.insert(r);
        if (span_j.insert(std::move(r))) next.push_back(std::move(xb));
      }
    if (auto it = tdeg.find(d); it != tdeg.end())
      for (const auto& t : it->second) span_u.insert(cols.row(t));
    if (auto it = jdeg.find(d); it != jdeg.end())
      for (const auto& g : it->second) {
        auto r = cols.row(g);
        if (span_u.insert(r)) res.chosen.push_back(g);
        if (span_j.insert(std::move(r))) next.push_back(g);
      }
    basis = std::move(next);
  }
  res.final_dim = basis.size();
  return res;
}

std::vector<Polynomial> homogeneous_or_monomial_generators(const Ideal& I) {
  if (I.is_homogeneous()) return I.generators();
  if (I.is_monomial()) return monomials_to_polys(I.context(), I.monomial_generators());
  throw UnsupportedIdealClass("ideal " + I.to_string() + " is neither homogeneous nor monomial");
}

}  // namespace

std::vector<Polynomial> nakayama_generators(const Ideal& I) {
  return graded_scan(I.context(), homogeneous_or_monomial_generators(I), {}, std::nullopt).chosen;
}

std::size_t nakayama_quotient_count(const Ideal& J, const Ideal& T) {
  require_same_ring(J.context(), T.context());
  auto tg = T.is_zero() ? std::vector<Polynomial>{} : homogeneous_or_monomial_generators(T);
  return graded_scan(J.context(), homogeneous_or_monomial_generators(J), tg, std::nullopt).chosen.size();
}

std::size_t graded_dim(const Ideal& I, std::int64_t d) {
  if (d < 0 || I.is_zero()) return 0;
  auto gens = homogeneous_or_monomial_generators(I);
  auto jdeg = by_degree(gens);
  if (jdeg.begin()->first > d) return 0;
  return graded_scan(I.context(), gens, {}, d).final_dim;
}

MinimalGenerators minimal_generators(const Ideal& I) {
  const auto& ctx = I.context();
  MinimalGenerators out;
  if (I.is_zero()) {
    out.ideal_class = IdealClass::kZero;
    return out;
  }
  if (I.is_monomial()) {
    out.ideal_class = IdealClass::kMonomial;
    out.generators = monomials_to_polys(ctx, I.monomial_generators());
  } else if (I.generators().size() == 1) {
    out.ideal_class = IdealClass::kPrincipal;
    out.generators = {I.generators().front().monic()};
  } else if (I.is_homogeneous()) {
    out.ideal_class = IdealClass::kHomogeneous;
    out.generators = nakayama_generators(I);
  } else {
    const auto& gb = I.groebner(MonomialOrder::grevlex(ctx.n()));
    if (gb.size() != 1)
      throw UnsupportedIdealClass("ideal " + I.to_string() +
                                  " is neither monomial, principal nor homogeneous");
    out.ideal_class = IdealClass::kPrincipal;
    out.generators = gb;
  }
  for (const auto& g : out.generators) {
    out.max_degree = std::max(out.max_degree.value_or(0), *total_degree(g));
    out.max_norm = std::max(out.max_norm.value_or(0), *max_norm(g));
  }
  return out;
}

}  // namespace cartier
