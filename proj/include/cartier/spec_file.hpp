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

#ifndef CARTIER_SPEC_FILE_HPP
#define CARTIER_SPEC_FILE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cartier/algebra_spec.hpp"
#include "cartier/monomial_order.hpp"

namespace cartier {

/// A parsed algebra spec file.
///
/// Grammar (one `key = value` per line, `#` starts a comment):
///
///   p           = <prime>
///   vars        = x, y, z
///   quotient    = [<poly>, ...]                 (optional)
///   family      = full
///               | principal <poly>
///               | fedder [<poly>, ...]
///               | paper-example
///               | table                         (levels given as J<e> keys)
///               | template [<expr>, ...]        (exponents may use e, p, q)
///   J<e>        = [<poly>, ...]                 (table family only)
///   e_max       = <int >= 1>
///   order       = grevlex | lex                 (optional, default grevlex)
///   work_budget = <int >= 1>                    (optional)
struct SpecFile {
  RingContext context;
  std::optional<Ideal> quotient;
  CartierAlgebraSpec algebra;
  std::int64_t e_max = 1;
  std::string order_name = "grevlex";
  std::optional<std::size_t> work_budget;

  MonomialOrder order() const;
};

SpecFile parse_spec_text(std::string_view text);
SpecFile parse_spec(const std::string& path);

/// Splits "[a, b(c, d), e]" at top-level commas.  Throws ParseError when the
/// brackets are missing or unbalanced.
std::vector<std::string> split_bracket_list(std::string_view text);

}  // namespace cartier

#endif  // CARTIER_SPEC_FILE_HPP
