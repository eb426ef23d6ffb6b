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

#include "cartier/spec_file.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cartier/error.hpp"

namespace cartier {

namespace {

struct Entry {
  std::string value;
  std::size_t line = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

bool is_table_key(const std::string& key) {
  if (key.size() < 2 || key[0] != 'J') return false;
  for (std::size_t i = 1; i < key.size(); ++i)
    if (key[i] < '0' || key[i] > '9') return false;
  return true;
}

const std::set<std::string> kKeys = {"p", "vars", "quotient", "family", "e_max", "order", "work_budget"};

std::int64_t parse_int(const Entry& e, const std::string& key) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(e.value, &used);
  } catch (const std::exception&) {
    throw SpecError(key + " must be an integer, got '" + e.value + "'", e.line);
  }
  if (used != e.value.size()) throw SpecError(key + " must be an integer, got '" + e.value + "'", e.line);
  return v;
}

template <class F>
auto at_line(std::size_t line, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const SpecError&) {
    throw;
  } catch (const Error& err) {
    throw SpecError(err.what(), line);
  }
}

}  // namespace

MonomialOrder SpecFile::order() const {
  return order_name == "lex" ? MonomialOrder::lex(context.n()) : MonomialOrder::grevlex(context.n());
}

std::vector<std::string> split_bracket_list(std::string_view text) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw ParseError("expected a bracketed list", 0);
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    const char c = t[i];
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) throw ParseError("unbalanced ')'", i);
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (depth != 0) throw ParseError("unbalanced '('", t.size() - 1);
  const std::string last = trim(cur);
  if (!last.empty() || !out.empty()) out.push_back(last);
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i].empty()) throw ParseError("empty list entry", 0);
  return out;
}

SpecFile parse_spec_text(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::map<std::int64_t, Entry> table_entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (line_no == 1 && raw.rfind("\xEF\xBB\xBF", 0) == 0) raw.erase(0, 3);
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw SpecError("expected 'key = value'", line_no);
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) throw SpecError("missing key before '='", line_no);
    if (value.empty()) throw SpecError("missing value for '" + key + "'", line_no);
    if (is_table_key(key)) {
      const Entry level_entry{key.substr(1), line_no};
      const std::int64_t level = parse_int(level_entry, "table level");
      if (level < 1) throw SpecError("table levels start at J1", line_no);
      if (!table_entries.emplace(level, Entry{value, line_no}).second)
        throw SpecError("duplicate key '" + key + "'", line_no);
      continue;
    }
    if (!kKeys.count(key)) throw SpecError("unknown key '" + key + "'", line_no);
    if (!entries.emplace(key, Entry{value, line_no}).second) throw SpecError("duplicate key '" + key + "'", line_no);
  }
  for (const char* required : {"p", "vars", "family", "e_max"})
    if (!entries.count(required)) throw SpecError(std::string("missing required key '") + required + "'", 0);

  const Entry& p_entry = entries.at("p");
  const std::int64_t p = parse_int(p_entry, "p");
  if (p < 2 || p > 2147483647 || !is_prime(p))
    throw SpecError("characteristic must be prime, got " + p_entry.value, p_entry.line);

  const Entry& vars_entry = entries.at("vars");
  std::string vars_text = vars_entry.value;
  if (vars_text.front() != '[') vars_text = "[" + vars_text + "]";
  std::vector<std::string> names = at_line(vars_entry.line, [&] { return split_bracket_list(vars_text); });
  if (names.empty()) throw SpecError("at least one variable is required", vars_entry.line);
  RingContext ctx = at_line(vars_entry.line, [&] { return RingContext(p, names); });

  const Entry& emax_entry = entries.at("e_max");
  const std::int64_t e_max = parse_int(emax_entry, "e_max");
  if (e_max < 1) throw SpecError("e_max must be >= 1, got " + emax_entry.value, emax_entry.line);

  std::string order_name = "grevlex";
  if (auto it = entries.find("order"); it != entries.end()) {
    if (it->second.value != "grevlex" && it->second.value != "lex")
      throw SpecError("order must be 'grevlex' or 'lex', got '" + it->second.value + "'", it->second.line);
    order_name = it->second.value;
  }

  std::optional<std::size_t> budget;
  if (auto it = entries.find("work_budget"); it != entries.end()) {
    const std::int64_t b = parse_int(it->second, "work_budget");
    if (b < 1) throw SpecError("work_budget must be >= 1", it->second.line);
    budget = static_cast<std::size_t>(b);
  }

  std::optional<Ideal> quotient;
  if (auto it = entries.find("quotient"); it != entries.end()) {
    quotient = at_line(it->second.line, [&] { return Ideal(ctx, parse_poly_list(it->second.value, ctx)); });
  }

  const Entry& fam = entries.at("family");
  const auto space = fam.value.find_first_of(" \t[");
  const std::string kind = trim(std::string_view(fam.value).substr(0, space));
  const std::string arg = space == std::string::npos ? "" : trim(std::string_view(fam.value).substr(space));
  auto require_arg = [&](bool want) {
    if (want && arg.empty()) throw SpecError("family '" + kind + "' needs an argument", fam.line);
    if (!want && !arg.empty()) throw SpecError("family '" + kind + "' takes no argument", fam.line);
  };
  if (kind != "table" && !table_entries.empty())
    throw SpecError("J<e> keys are only allowed with family = table", table_entries.begin()->second.line);

  std::optional<CartierAlgebraSpec> algebra;
  if (kind == "full") {
    require_arg(false);
    algebra = CartierAlgebraSpec::full(ctx, quotient);
  } else if (kind == "principal") {
    require_arg(true);
    algebra = at_line(fam.line, [&] { return CartierAlgebraSpec::principal(parse_poly(arg, ctx), quotient); });
  } else if (kind == "fedder") {
    require_arg(true);
    Ideal I = at_line(fam.line, [&] { return Ideal(ctx, parse_poly_list(arg, ctx)); });
    if (quotient && !ideals_equal(*quotient, I))
      throw SpecError("fedder family defines its own quotient; the 'quotient' key must match or be omitted",
                      entries.at("quotient").line);
    quotient = I;
    algebra = CartierAlgebraSpec::fedder(I);
  } else if (kind == "paper-example") {
    require_arg(false);
    if (quotient) throw SpecError("paper-example family has no quotient", entries.at("quotient").line);
    algebra = at_line(fam.line, [&] { return CartierAlgebraSpec::paper_example(ctx); });
  } else if (kind == "table") {
    require_arg(false);
    std::map<std::int64_t, std::vector<Polynomial>> levels;
    for (const auto& [e, entry] : table_entries) {
      levels[e] = at_line(entry.line, [&] { return parse_poly_list(entry.value, ctx); });
    }
    for (std::int64_t e = 1; e <= e_max; ++e)
      if (!levels.count(e)) throw SpecError("table family is missing level J" + std::to_string(e), fam.line);
    algebra = CartierAlgebraSpec::table(ctx, std::move(levels), quotient);
  } else if (kind == "template") {
    require_arg(true);
    std::vector<std::string> gens = at_line(fam.line, [&] { return split_bracket_list(arg); });
    algebra = at_line(fam.line, [&] { return CartierAlgebraSpec::from_template(ctx, gens, quotient); });
  } else {
    throw SpecError("unknown family '" + kind + "'", fam.line);
  }
  return SpecFile{ctx, quotient, *algebra, e_max, order_name, budget};
}

SpecFile parse_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot read spec file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str());
}

}  // namespace cartier
