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

#ifndef CARTIER_REPORT_HPP
#define CARTIER_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include "cartier/analysis.hpp"

namespace cartier {

/// Right-aligned text table with a header rule.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void render(std::ostream& os) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

void render_validation(std::ostream& os, const ValidationReport& v);
void render_complexity(std::ostream& os, const ComplexityReport& r);
void render_gauge(std::ostream& os, const GaugeReport& r);
void render_lemma(std::ostream& os, const LemmaFit& fit, std::size_t n);
void render_theorem(std::ostream& os, const TheoremCheck& tc);

/// The combined document printed by `cartier report`.
void render_report(std::ostream& os, const CartierAlgebraSpec& spec, const FullReport& report);

/// CSV with columns e,k_e,delta_k,d_Je,gauge_g,verdict.  Either report may
/// be null, in which case its columns are left empty.
void write_csv(std::ostream& os, std::int64_t e_max, const ComplexityReport* cx, const GaugeReport* gauge);

}  // namespace cartier

#endif  // CARTIER_REPORT_HPP
