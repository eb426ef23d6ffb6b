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

#ifndef CARTIER_RATIONAL_HPP
#define CARTIER_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cartier {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "a/b" in lowest terms, or just "a" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

/// Smallest integer >= r.
BigInt ceil(const Rational& r);

/// Decimal rendering with a fixed number of digits after the point
/// (round half away from zero), computed exactly.
std::string to_decimal(const Rational& r, int digits);

}  // namespace cartier

#endif  // CARTIER_RATIONAL_HPP
