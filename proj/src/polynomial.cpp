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

#include "cartier/polynomial.hpp"

#include <cctype>
#include <sstream>

#include "cartier/checked.hpp"
#include "cartier/error.hpp"

namespace cartier {

namespace {

struct StorageCmp {
  int operator()(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const noexcept {
    return Polynomial::storage_compare(a, b);
  }
};

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!(f.context() == g.context())) throw ContextMismatch();
}

}  // namespace

int Polynomial::storage_compare(std::span<const std::int64_t> a,
                                std::span<const std::int64_t> b) noexcept {
  __int128 da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = a.size(); k-- > 0;)
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  return 0;
}

Polynomial::Polynomial(RingContext ctx) : ctx_(std::move(ctx)), data_(ctx_.n()) {}

Polynomial Polynomial::constant(const RingContext& ctx, std::int64_t c) {
  Polynomial f(ctx);
  Coeff v = ctx.field().reduce(c);
  if (v != 0) f.data_.push(std::vector<std::int64_t>(ctx.n(), 0), v);
  return f;
}

Polynomial Polynomial::monomial(const RingContext& ctx, const ExponentVector& e, Coeff c) {
  if (e.size() != ctx.n()) throw DomainError("exponent vector length does not match the ring");
  Polynomial f(ctx);
  c = ctx.field().reduce(c);
  if (c != 0) f.data_.push(e.span(), c);
  return f;
}

Polynomial Polynomial::variable(const RingContext& ctx, std::size_t i) {
  ExponentVector e(ctx.n());
  e[i] = 1;
  return monomial(ctx, e);
}

Polynomial Polynomial::from_terms(const RingContext& ctx,
                                  const std::vector<std::pair<ExponentVector, std::int64_t>>& terms) {
  Polynomial f(ctx);
  f.data_.reserve(terms.size());
  for (const auto& [e, c] : terms) {
    if (e.size() != ctx.n()) throw DomainError("exponent vector length does not match the ring");
    for (auto v : e.values())
      if (v < 0) throw DomainError("negative exponent");
    f.data_.push(e.span(), ctx.field().reduce(c));
  }
  detail::normalize(f.data_, StorageCmp{}, ctx.field());
  return f;
}

Polynomial Polynomial::from_flat(const RingContext& ctx, detail::FlatPoly f) {
  Polynomial out(ctx);
  detail::normalize(f, StorageCmp{}, ctx.field());
  out.data_ = std::move(f);
  return out;
}

Coeff Polynomial::coefficient(const ExponentVector& e) const {
  for (std::size_t i = 0; i < data_.size(); ++i) {
    int s = storage_compare(data_.mono(i), e.span());
    if (s == 0) return data_.coeffs[i];
    if (s < 0) break;
  }
  return 0;
}

bool Polynomial::is_constant() const noexcept {
  if (data_.empty()) return true;
  if (data_.size() > 1) return false;
  for (auto v : data_.mono(0))
    if (v != 0) return false;
  return true;
}

bool Polynomial::is_homogeneous() const {
  if (data_.size() <= 1) return true;
  auto d = mono::total_degree(data_.mono(0));
  for (std::size_t i = 1; i < data_.size(); ++i)
    if (mono::total_degree(data_.mono(i)) != d) return false;
  return true;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ctx_.field().inv(data_.coeffs[0]));
}

Polynomial Polynomial::operator-() const { return scaled(ctx_.field().neg(1)); }

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial out(ctx_);
  out.data_ = detail::scale_shift(data_, ctx_.field().reduce(c), {}, ctx_.field());
  return out;
}

Polynomial Polynomial::times_monomial(std::span<const std::int64_t> e, Coeff c) const {
  Polynomial out(ctx_);
  out.data_ = detail::scale_shift(data_, ctx_.field().reduce(c), e, ctx_.field());
  return out;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  Polynomial out(f.ctx_);
  out.data_ = detail::add_scaled(f.data_, 1, {}, g.data_, StorageCmp{}, f.ctx_.field());
  return out;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  Polynomial out(f.ctx_);
  out.data_ = detail::add_scaled(f.data_, f.ctx_.field().neg(1), {}, g.data_, StorageCmp{},
                                 f.ctx_.field());
  return out;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  Polynomial out(f.ctx_);
  out.data_ = detail::multiply(f.data_, g.data_, StorageCmp{}, f.ctx_.field());
  return out;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  return f.ctx_ == g.ctx_ && f.data_ == g.data_;
}

std::string Polynomial::to_string() const { return format_poly(*this); }

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial power(const Polynomial& f, std::int64_t k) {
  if (k < 0) throw DomainError("negative polynomial exponent");
  const auto& ctx = f.context();
  if (k == 0) return Polynomial::constant(ctx, 1);
  if (f.is_zero()) return f;
  if (f.is_monomial()) {
    auto t = f.leading_term();
    std::vector<std::int64_t> e(t.exponents.begin(), t.exponents.end());
    for (auto& v : e) v = checked_mul(v, k);
    return Polynomial::monomial(ctx, ExponentVector(std::move(e)),
                                ctx.field().pow(t.coeff, static_cast<std::uint64_t>(k)));
  }
  Polynomial result = Polynomial::constant(ctx, 1);
  Polynomial base = f;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial frobenius_pow(const Polynomial& f, std::int64_t e) {
  if (e < 0) throw DomainError("negative Frobenius level");
  if (e == 0) return f;
  std::int64_t q = checked_pow(f.context().p(), e);
  detail::FlatPoly data = f.flat();
  for (auto& v : data.exps) v = checked_mul(v, q);
  // Scaling every exponent by q preserves the storage order.
  return Polynomial::from_flat(f.context(), std::move(data));
}

std::optional<std::int64_t> max_norm(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  std::int64_t m = 0;
  for (std::size_t i = 0; i < f.num_terms(); ++i) m = std::max(m, mono::max_norm(f.term(i).exponents));
  return m;
}

std::optional<std::int64_t> total_degree(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  std::int64_t m = 0;
  for (std::size_t i = 0; i < f.num_terms(); ++i)
    m = std::max(m, mono::total_degree(f.term(i).exponents));
  return m;
}

std::string format_poly(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  const auto& ctx = f.context();
  for (std::size_t i = 0; i < f.num_terms(); ++i) {
    auto t = f.term(i);
    if (i > 0) os << " + ";
    bool wrote = false;
    if (t.coeff != 1) {
      os << t.coeff;
      wrote = true;
    }
    for (std::size_t v = 0; v < ctx.n(); ++v) {
      if (t.exponents[v] == 0) continue;
      if (wrote) os << '*';
      os << ctx.variable(v);
      if (t.exponents[v] != 1) os << '^' << t.exponents[v];
      wrote = true;
    }
    if (!wrote) os << '1';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t pos() const noexcept { return pos_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  std::string_view identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }
  std::string_view digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

std::int64_t parse_int64_literal(std::string_view digits) {
  std::int64_t v = 0;
  for (char ch : digits) {
    v = checked_mul(v, 10);
    v = checked_add(v, ch - '0');
  }
  return v;
}

class IntParser {
 public:
  IntParser(Cursor& cur, const IntegerEnv& env) : cur_(cur), env_(env) {}

  std::int64_t expr() {
    std::int64_t v = term();
    for (;;) {
      if (cur_.accept('+')) v = checked_add(v, term());
      else if (cur_.accept('-')) v = checked_sub(v, term());
      else return v;
    }
  }

 private:
  std::int64_t term() {
    std::int64_t v = unary();
    while (cur_.accept('*')) v = checked_mul(v, unary());
    return v;
  }
  std::int64_t unary() {
    if (cur_.accept('-')) return checked_sub(0, unary());
    if (cur_.accept('+')) return unary();
    std::int64_t base = atom();
    if (cur_.accept('^')) {
      std::size_t at = cur_.pos();
      std::int64_t e = unary();
      if (e < 0) cur_.fail_at("negative exponent", at);
      return checked_pow(base, e);
    }
    return base;
  }
  std::int64_t atom() {
    char c = cur_.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_int64_literal(cur_.digits());
    if (is_ident_start(c)) {
      std::size_t at = cur_.pos();
      auto name = cur_.identifier();
      auto it = env_.find(name);
      if (it == env_.end()) cur_.fail_at("unknown symbol '" + std::string(name) + "'", at);
      return it->second;
    }
    if (cur_.accept('(')) {
      std::int64_t v = expr();
      cur_.expect(')');
      return v;
    }
    cur_.fail("expected integer expression");
  }

  Cursor& cur_;
  const IntegerEnv& env_;
};

class PolyParser {
 public:
  PolyParser(Cursor& cur, const RingContext& ctx, const IntegerEnv* env)
      : cur_(cur), ctx_(ctx), env_(env) {}

  Polynomial expr() {
    Polynomial v = term();
    for (;;) {
      if (cur_.accept('+')) v = v + term();
      else if (cur_.accept('-')) v = v - term();
      else return v;
    }
  }

 private:
  Polynomial term() {
    Polynomial v = unary();
    while (cur_.accept('*')) v = v * unary();
    return v;
  }
  Polynomial unary() {
    if (cur_.accept('-')) return -unary();
    if (cur_.accept('+')) return unary();
    Polynomial base = primary();
    if (cur_.accept('^')) {
      std::int64_t e = exponent();
      if (cur_.peek() == '^') cur_.fail("chained '^' is ambiguous; use parentheses");
      return power(base, e);
    }
    return base;
  }
  std::int64_t exponent() {
    char c = cur_.peek();
    std::size_t at = cur_.pos();
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_int64_literal(cur_.digits());
    if (c == '(' || is_ident_start(c)) {
      if (env_ == nullptr) cur_.fail("exponent must be a non-negative integer literal");
      IntParser ip(cur_, *env_);
      std::int64_t v;
      if (cur_.accept('(')) {
        v = ip.expr();
        cur_.expect(')');
      } else {
        auto name = cur_.identifier();
        auto it = env_->find(name);
        if (it == env_->end()) cur_.fail_at("unknown symbol '" + std::string(name) + "'", at);
        v = it->second;
      }
      if (v < 0) cur_.fail_at("negative exponent", at);
      return v;
    }
    cur_.fail("expected exponent");
  }
  Polynomial primary() {
    char c = cur_.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Reduced digit by digit; literals may be arbitrarily long.
      const auto& F = ctx_.field();
      Coeff v = 0;
      for (char ch : cur_.digits()) v = F.add(F.mul(v, 10 % F.characteristic()), F.reduce(ch - '0'));
      return Polynomial::constant(ctx_, v);
    }
    if (is_ident_start(c)) {
      std::size_t at = cur_.pos();
      auto name = cur_.identifier();
      if (auto idx = ctx_.index_of(name)) return Polynomial::variable(ctx_, *idx);
      if (env_ != nullptr) {
        if (auto it = env_->find(name); it != env_->end()) return Polynomial::constant(ctx_, it->second);
      }
      cur_.fail_at("unknown variable '" + std::string(name) + "'", at);
    }
    if (cur_.accept('(')) {
      Polynomial v = expr();
      cur_.expect(')');
      return v;
    }
    if (c == '\0') cur_.fail("unexpected end of input");
    cur_.fail(std::string("unexpected character '") + c + "'");
  }

  Cursor& cur_;
  const RingContext& ctx_;
  const IntegerEnv* env_;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingContext& ctx, const IntegerEnv* env) {
  Cursor cur(text);
  if (cur.at_end()) cur.fail("empty polynomial expression");
  PolyParser parser(cur, ctx, env);
  Polynomial f = parser.expr();
  if (!cur.at_end()) cur.fail(std::string("unexpected character '") + cur.peek() + "'");
  return f;
}

std::vector<Polynomial> parse_poly_list(std::string_view text, const RingContext& ctx,
                                        const IntegerEnv* env) {
  Cursor cur(text);
  cur.expect('[');
  std::vector<Polynomial> out;
  if (cur.accept(']')) {
    if (!cur.at_end()) cur.fail("trailing characters after ']'");
    return out;
  }
  PolyParser parser(cur, ctx, env);
  for (;;) {
    out.push_back(parser.expr());
    if (cur.accept(',')) continue;
    cur.expect(']');
    break;
  }
  if (!cur.at_end()) cur.fail("trailing characters after ']'");
  return out;
}

std::int64_t eval_integer_expression(std::string_view text, const IntegerEnv& env) {
  Cursor cur(text);
  IntParser ip(cur, env);
  std::int64_t v = ip.expr();
  if (!cur.at_end()) cur.fail(std::string("unexpected character '") + cur.peek() + "'");
  return v;
}

}  // namespace cartier
