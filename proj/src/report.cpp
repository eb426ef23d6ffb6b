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

#include "cartier/report.hpp"

#include <algorithm>
#include <iomanip>

namespace cartier {

namespace {

std::string opt_int(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-inf"; }

std::string opt_rat(const std::optional<Rational>& v) { return v ? to_string(*v) : "-inf"; }

std::string ring_name(const RingContext& ctx) {
  std::string s = "F_" + std::to_string(ctx.p()) + "[";
  for (std::size_t i = 0; i < ctx.n(); ++i) s += (i ? ", " : "") + ctx.variable(i);
  return s + "]";
}

}  // namespace

void TextTable::render(std::ostream& os) const {
  std::vector<std::size_t> width(header_.size(), 0);
  for (std::size_t c = 0; c < header_.size(); ++c) width[c] = header_[c].size();
  for (const auto& row : rows_)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      if (c > 0) os << "  ";
      const std::string cell = c < cells.size() ? cells[c] : "";
      os << std::string(width[c] - cell.size(), ' ') << cell;
    }
    os << '\n';
  };
  line(header_);
  std::size_t total = 0;
  for (auto w : width) total += w;
  os << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (const auto& row : rows_) line(row);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_validation(std::ostream& os, const ValidationReport& v) {
  os << "validation: " << v.to_string() << '\n';
}

void render_complexity(std::ostream& os, const ComplexityReport& r) {
  os << "complexity sequence (k_0 = " << r.k0 << ": D_0 = R contributes the identity)\n";
  TextTable t({"e", "k_e", "delta_k", "d_Je", "dmax_Je", "gens", "class"});
  for (const auto& l : r.levels)
    t.add_row({std::to_string(l.e), std::to_string(l.k), std::to_string(l.delta_k), opt_int(l.max_degree),
               opt_int(l.max_norm), std::to_string(l.num_generators), to_string(l.ideal_class)});
  t.render(os);
  os << "cx_estimate (window e <= " << r.e_max << ", last level): " << r.cx_estimate.to_string() << " ~ "
     << r.cx_estimate.approx() << '\n';
  if (r.e_max < 2) {
    os << "window max over 2 <= e <= e_max: empty window\n";
  } else {
    os << "window max over 2 <= e <= " << r.e_max << ": " << r.window_max.to_string() << " ~ "
       << r.window_max.approx();
    if (r.window_max_level > 0) os << " (e = " << r.window_max_level << ")";
    os << '\n';
  }
  os << "expF_estimate: " << std::fixed << std::setprecision(6) << r.expF_estimate << '\n';
  os.unsetf(std::ios::floatfield);
  os << "delta_k trend (last three levels): " << r.trend << '\n';
}

void render_gauge(std::ostream& os, const GaugeReport& r) {
  os << "gauge growth g(e) = max_i delta(f_i) / p^e over minimal generators of J_e\n";
  TextTable t({"e", "gauges", "gauge_g", "verdict"});
  for (const auto& l : r.levels) {
    std::string gs;
    for (std::size_t i = 0; i < l.gauges.size(); ++i) gs += (i ? "," : "") + std::to_string(l.gauges[i]);
    if (gs.empty()) gs = "-";
    t.add_row({std::to_string(l.e), gs, opt_rat(l.g), to_string(l.verdict_so_far)});
  }
  t.render(os);
  os << "sup g over window e <= " << r.e_max << ": " << opt_rat(r.sup_g) << '\n';
  os << "g trend (last three levels): " << r.trend << '\n';
  os << "verdict: " << to_string(r.verdict) << " (window e <= " << r.e_max << ")\n";
  if (r.k_window) {
    os << "K_window = " << to_string(*r.k_window) << "; delta(f_i) <= ceil(K_window) * p^e: "
       << (r.claim_check ? "holds" : "FAILS") << '\n';
  }
}

void render_lemma(std::ostream& os, const LemmaFit& fit, std::size_t n) {
  os << "degree fit d(J_e) <= K * p^(t e): ";
  if (fit.t) {
    os << "t = " << *fit.t << ", K = " << fit.K->str() << "; implied exp_F <= t*n = " << *fit.expF_bound
       << ", cx <= p^(t n) = " << fit.cx_bound->str() << '\n';
  } else {
    os << "no integer t found in the window\n";
  }
  os << "counting bound delta_k <= C(n + d(J_e), n) with n = " << n << ": "
     << (fit.counting_all_ok ? "holds" : "FAILS") << " on every level\n";
}

void render_theorem(std::ostream& os, const TheoremCheck& tc) {
  os << "theorem check (gauge bounded => cx <= p^n): " << to_string(tc.status) << '\n';
  os << "  " << tc.note << '\n';
}

void render_report(std::ostream& os, const CartierAlgebraSpec& spec, const FullReport& report) {
  os << "# Cartier algebra report\n";
  os << "ring: " << ring_name(spec.context()) << '\n';
  os << "family: " << spec.description() << '\n';
  os << "quotient: " << (spec.quotient() ? spec.quotient()->to_string() : std::string("none")) << '\n';
  os << "window: 1 <= e <= " << report.validation.e_max << '\n';
  os << '\n';
  render_validation(os, report.validation);
  if (!report.validation.valid) return;
  os << '\n';
  render_complexity(os, *report.complexity);
  os << '\n';
  render_gauge(os, *report.gauge);
  os << '\n';
  render_lemma(os, *report.lemma, spec.context().n());
  os << '\n';
  render_theorem(os, *report.theorem);
}

void write_csv(std::ostream& os, std::int64_t e_max, const ComplexityReport* cx, const GaugeReport* gauge) {
  os << "e,k_e,delta_k,d_Je,gauge_g,verdict\r\n";
  for (std::int64_t e = 1; e <= e_max; ++e) {
    std::vector<std::string> row{std::to_string(e), "", "", "", "", ""};
    if (cx) {
      const auto& l = cx->levels[static_cast<std::size_t>(e - 1)];
      row[1] = std::to_string(l.k);
      row[2] = std::to_string(l.delta_k);
      row[3] = opt_int(l.max_degree);
    }
    if (gauge) {
      const auto& l = gauge->levels[static_cast<std::size_t>(e - 1)];
      row[4] = opt_rat(l.g);
      row[5] = to_string(l.verdict_so_far);
    }
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
    os << "\r\n";
  }
}

}  // namespace cartier
