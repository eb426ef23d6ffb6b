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

#include "cartier/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "cartier/checked.hpp"
#include "cartier/error.hpp"

namespace cartier {

bool is_identifier(std::string_view s) noexcept {
  if (s.empty()) return false;
  auto c0 = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(c0) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || ch == '_';
  });
}

RingContext::RingContext(std::int64_t p, std::vector<std::string> variables) {
  PrimeField field(p);
  if (variables.empty()) throw DomainError("a polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!is_identifier(v)) throw DomainError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
  data_ = std::make_shared<const Data>(Data{field, std::move(variables)});
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  const auto& names = data_->names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

RingContext RingContext::with_leading_variables(std::size_t extra) const {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < extra; ++k) {
    std::string candidate = "_t" + std::to_string(k);
    while (index_of(candidate)) candidate += "_";
    names.push_back(candidate);
  }
  names.insert(names.end(), data_->names.begin(), data_->names.end());
  return RingContext(p(), std::move(names));
}

ExponentVector::ExponentVector(std::initializer_list<std::int64_t> e) : e_(e) {
  for (auto v : e_)
    if (v < 0) throw DomainError("negative exponent");
}

ExponentVector::ExponentVector(std::vector<std::int64_t> e) : e_(std::move(e)) {
  for (auto v : e_)
    if (v < 0) throw DomainError("negative exponent");
}

ExponentVector::ExponentVector(std::span<const std::int64_t> e) : e_(e.begin(), e.end()) {}

std::int64_t ExponentVector::max_norm() const noexcept { return mono::max_norm(e_); }

std::int64_t ExponentVector::total_degree() const { return mono::total_degree(e_); }

namespace mono {

bool divides(std::span<const std::int64_t> a, std::span<const std::int64_t> b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void multiply(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
}

void divide(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
            std::span<std::int64_t> out) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
}

void lcm(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
         std::span<std::int64_t> out) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
}

void gcd(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
         std::span<std::int64_t> out) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
}

bool coprime(std::span<const std::int64_t> a, std::span<const std::int64_t> b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

std::int64_t max_norm(std::span<const std::int64_t> a) noexcept {
  std::int64_t m = 0;
  for (auto v : a) m = std::max(m, v);
  return m;
}

std::int64_t total_degree(std::span<const std::int64_t> a) {
  std::int64_t s = 0;
  for (auto v : a) s = checked_add(s, v);
  return s;
}

ExponentVector product(const ExponentVector& a, const ExponentVector& b) {
  std::vector<std::int64_t> out(a.size());
  multiply(a.span(), b.span(), out);
  return ExponentVector(std::move(out));
}

ExponentVector quotient(const ExponentVector& a, const ExponentVector& b) {
  if (!divides(b.span(), a.span())) throw DomainError("monomial quotient is not exact");
  std::vector<std::int64_t> out(a.size());
  divide(a.span(), b.span(), out);
  return ExponentVector(std::move(out));
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  std::vector<std::int64_t> out(a.size());
  lcm(a.span(), b.span(), out);
  return ExponentVector(std::move(out));
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  std::vector<std::int64_t> out(a.size());
  gcd(a.span(), b.span(), out);
  return ExponentVector(std::move(out));
}

}  // namespace mono

}  // namespace cartier
