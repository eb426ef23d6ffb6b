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

#ifndef CARTIER_DETAIL_FLAT_POLY_HPP
#define CARTIER_DETAIL_FLAT_POLY_HPP

// Term storage shared by Polynomial and the Groebner engine: exponent vectors
// packed contiguously, terms kept in strictly decreasing order for some
// monomial order supplied by the caller.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "cartier/field.hpp"
#include "cartier/ring.hpp"

namespace cartier::detail {

struct FlatPoly {
  std::size_t n = 0;
  std::vector<std::int64_t> exps;
  std::vector<Coeff> coeffs;

  FlatPoly() = default;
  explicit FlatPoly(std::size_t nvars) : n(nvars) {}

  std::size_t size() const noexcept { return coeffs.size(); }
  bool empty() const noexcept { return coeffs.empty(); }
  std::span<const std::int64_t> mono(std::size_t i) const noexcept {
    return {exps.data() + i * n, n};
  }
  std::span<std::int64_t> mono(std::size_t i) noexcept { return {exps.data() + i * n, n}; }
  void push(std::span<const std::int64_t> m, Coeff c) {
    exps.insert(exps.end(), m.begin(), m.end());
    coeffs.push_back(c);
  }
  void reserve(std::size_t terms) {
    exps.reserve(terms * n);
    coeffs.reserve(terms);
  }
  friend bool operator==(const FlatPoly&, const FlatPoly&) = default;
};

/// Sorts terms decreasingly, merges equal monomials, drops zero coefficients.
template <class Cmp>
void normalize(FlatPoly& f, const Cmp& cmp, const PrimeField& F) {
  std::vector<std::size_t> idx(f.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return cmp(f.mono(a), f.mono(b)) > 0;
  });
  FlatPoly out(f.n);
  out.reserve(f.size());
  for (std::size_t k = 0; k < idx.size();) {
    auto m = f.mono(idx[k]);
    Coeff c = 0;
    std::size_t j = k;
    while (j < idx.size() && cmp(f.mono(idx[j]), m) == 0) c = F.add(c, f.coeffs[idx[j++]]);
    if (c != 0) out.push(m, c);
    k = j;
  }
  f = std::move(out);
}

/// Returns a + c * x^shift * b.  `shift` may be empty, meaning x^0.  Both
/// inputs must be sorted for `cmp`, which must be a monomial order.
template <class Cmp>
FlatPoly add_scaled(const FlatPoly& a, Coeff c, std::span<const std::int64_t> shift,
                    const FlatPoly& b, const Cmp& cmp, const PrimeField& F) {
  FlatPoly out(a.n);
  if (c == 0 || b.empty()) return a;
  out.reserve(a.size() + b.size());
  std::vector<std::int64_t> tmp(a.n);
  std::size_t i = 0, j = 0;
  auto shifted = [&](std::size_t k) -> std::span<const std::int64_t> {
    if (shift.empty()) return b.mono(k);
    mono::multiply(b.mono(k), shift, tmp);
    return tmp;
  };
  while (i < a.size() && j < b.size()) {
    auto bm = shifted(j);
    int s = cmp(a.mono(i), bm);
    if (s > 0) {
      out.push(a.mono(i), a.coeffs[i]);
      ++i;
    } else if (s < 0) {
      out.push(bm, F.mul(c, b.coeffs[j]));
      ++j;
    } else {
      Coeff v = F.add(a.coeffs[i], F.mul(c, b.coeffs[j]));
      if (v != 0) out.push(a.mono(i), v);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push(a.mono(i), a.coeffs[i]);
  for (; j < b.size(); ++j) out.push(shifted(j), F.mul(c, b.coeffs[j]));
  return out;
}

/// c * x^shift * b.  cmp must be a monomial order.
inline FlatPoly scale_shift(const FlatPoly& b, Coeff c, std::span<const std::int64_t> shift,
                            const PrimeField& F) {
  FlatPoly out(b.n);
  if (c == 0) return out;
  out.reserve(b.size());
  std::vector<std::int64_t> tmp(b.n);
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (shift.empty()) {
      out.push(b.mono(k), F.mul(c, b.coeffs[k]));
    } else {
      mono::multiply(b.mono(k), shift, tmp);
      out.push(tmp, F.mul(c, b.coeffs[k]));
    }
  }
  return out;
}

/// Product by divide and conquer over the terms of `a`; each leaf is a
/// single term times `b`, and partial results are merged pairwise.
template <class Cmp>
FlatPoly multiply_range(const FlatPoly& a, std::size_t lo, std::size_t hi, const FlatPoly& b,
                        const Cmp& cmp, const PrimeField& F) {
  if (hi - lo == 1) return scale_shift(b, a.coeffs[lo], a.mono(lo), F);
  std::size_t mid = lo + (hi - lo) / 2;
  FlatPoly left = multiply_range(a, lo, mid, b, cmp, F);
  FlatPoly right = multiply_range(a, mid, hi, b, cmp, F);
  return add_scaled(left, 1, {}, right, cmp, F);
}

template <class Cmp>
FlatPoly multiply(const FlatPoly& a, const FlatPoly& b, const Cmp& cmp, const PrimeField& F) {
  if (a.empty() || b.empty()) return FlatPoly(a.n);
  if (a.size() > b.size()) return multiply_range(b, 0, b.size(), a, cmp, F);
  return multiply_range(a, 0, a.size(), b, cmp, F);
}

}  // namespace cartier::detail

#endif  // CARTIER_DETAIL_FLAT_POLY_HPP
