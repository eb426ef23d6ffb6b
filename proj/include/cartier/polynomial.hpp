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

#ifndef CARTIER_POLYNOMIAL_HPP
#define CARTIER_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cartier/detail/flat_poly.hpp"
#include "cartier/field.hpp"
#include "cartier/ring.hpp"

namespace cartier {

/// Sparse polynomial over F_p.  Terms are stored without zero coefficients
/// in strictly decreasing graded reverse lexicographic order (x_1 > ... > x_n),
/// so iteration and printing are deterministic.  Values are immutable in
/// the sense that every operation returns a new polynomial.
class Polynomial {
 public:
  struct Term {
    std::span<const std::int64_t> exponents;
    Coeff coeff;
  };

  /// The zero polynomial.
  explicit Polynomial(RingContext ctx);

  static Polynomial constant(const RingContext& ctx, std::int64_t c);
  static Polynomial monomial(const RingContext& ctx, const ExponentVector& e, Coeff c = 1);
  static Polynomial variable(const RingContext& ctx, std::size_t i);
  /// Sums the given terms; coefficients are reduced mod p.
  static Polynomial from_terms(const RingContext& ctx,
                               const std::vector<std::pair<ExponentVector, std::int64_t>>& terms);

  const RingContext& context() const noexcept { return ctx_; }
  bool is_zero() const noexcept { return data_.empty(); }
  std::size_t num_terms() const noexcept { return data_.size(); }
  Term term(std::size_t i) const noexcept { return {data_.mono(i), data_.coeffs[i]}; }
  /// Leading term in the storage order (grevlex); requires a nonzero polynomial.
  Term leading_term() const noexcept { return term(0); }
  Coeff coefficient(const ExponentVector& e) const;

  bool is_constant() const noexcept;
  /// Single term (with any nonzero coefficient).
  bool is_monomial() const noexcept { return data_.size() == 1; }
  bool is_homogeneous() const;
  /// Copy scaled so that the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial scaled(Coeff c) const;
  Polynomial times_monomial(std::span<const std::int64_t> e, Coeff c = 1) const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend bool operator==(const Polynomial& f, const Polynomial& g);

  /// Grevlex comparison of exponent vectors used for storage.
  static int storage_compare(std::span<const std::int64_t> a,
                             std::span<const std::int64_t> b) noexcept;

  const detail::FlatPoly& flat() const noexcept { return data_; }
  static Polynomial from_flat(const RingContext& ctx, detail::FlatPoly f);

  std::string to_string() const;

 private:
  RingContext ctx_;
  detail::FlatPoly data_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

/// f^k by repeated squaring.
Polynomial power(const Polynomial& f, std::int64_t k);

/// f^(p^e), computed monomial-wise: exponents are scaled by p^e while the
/// coefficients stay fixed (c^p = c in F_p).
Polynomial frobenius_pow(const Polynomial& f, std::int64_t e);

/// Largest single exponent over all terms; std::nullopt encodes -infinity
/// (the zero polynomial).
std::optional<std::int64_t> max_norm(const Polynomial& f);
/// Largest total degree over all terms; std::nullopt encodes -infinity.
std::optional<std::int64_t> total_degree(const Polynomial& f);

/// Values for the integer symbols that may appear in exponent positions of
/// a polynomial expression (e.g. e, p and q = p^e in templates).
using IntegerEnv = std::map<std::string, std::int64_t, std::less<>>;

/// Parses a polynomial expression: integers, declared variables, + - * ^
/// and parentheses.  ^ binds tightest; exponents are non-negative integers,
/// or integer expressions in parentheses when `env` provides symbols.
/// Throws ParseError (with position), DomainError for unknown variables and
/// OverflowError for exponents that do not fit in 64 bits.
Polynomial parse_poly(std::string_view text, const RingContext& ctx, const IntegerEnv* env = nullptr);

/// Parses "[f1, f2, ...]" into its generator list.  An empty list "[]" is
/// accepted and yields an empty vector.
std::vector<Polynomial> parse_poly_list(std::string_view text, const RingContext& ctx,
                                        const IntegerEnv* env = nullptr);

/// Evaluates an integer expression over literals and the symbols in `env`
/// with + - * ^ and parentheses, in checked 64-bit arithmetic.
std::int64_t eval_integer_expression(std::string_view text, const IntegerEnv& env);

std::string format_poly(const Polynomial& f);

}  // namespace cartier

#endif  // CARTIER_POLYNOMIAL_HPP
