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

#include "cartier/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

#include "cartier/analysis.hpp"
#include "cartier/cartier_ops.hpp"
#include "cartier/error.hpp"
#include "cartier/report.hpp"
#include "cartier/spec_file.hpp"

namespace cartier {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string spec_path;
  std::vector<std::int64_t> e;
  std::optional<std::int64_t> e_max;
  std::vector<std::string> f;
  std::optional<std::string> r;
  std::optional<std::string> order;
  std::optional<std::string> csv;
  unsigned jobs = 1;
};

std::string format_list(const std::vector<Polynomial>& gens) {
  if (gens.empty()) return "[0]";
  std::string s = "[";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + format_poly(gens[i]);
  return s + "]";
}

std::int64_t single_e(const Options& o, std::optional<std::int64_t> fallback) {
  if (o.e.empty()) {
    if (fallback) return *fallback;
    throw UsageError("--e is required for '" + o.command + "'");
  }
  if (o.e.size() > 1) throw UsageError("--e given more than once for '" + o.command + "'");
  return o.e.front();
}

const Ideal& require_quotient(const SpecFile& spec, const std::string& command) {
  if (!spec.quotient) throw UsageError("'" + command + "' needs a quotient ideal in the spec file");
  return *spec.quotient;
}

void write_csv_file(const Options& o, std::int64_t e_max, const ComplexityReport* cx, const GaugeReport* g) {
  if (!o.csv) return;
  std::ofstream file(*o.csv, std::ios::binary);
  if (!file) throw DomainError("cannot write CSV file '" + *o.csv + "'");
  write_csv(file, e_max, cx, g);
}

int dispatch(const Options& o, const SpecFile& spec, std::ostream& out) {
  const RingContext& ctx = spec.context;
  const MonomialOrder order = o.order ? (*o.order == "lex" ? MonomialOrder::lex(ctx.n()) : MonomialOrder::grevlex(ctx.n()))
                                      : spec.order();
  const std::int64_t e_max = o.e_max ? *o.e_max : spec.e_max;
  const std::string& cmd = o.command;

  if (cmd == "eval") {
    if (!o.r) throw UsageError("--r is required for 'eval'");
    if (o.f.size() > 1) throw UsageError("--f given more than once for 'eval'");
    const Polynomial f = o.f.empty() ? Polynomial::constant(ctx, 1) : parse_poly(o.f.front(), ctx);
    const CartierOperator psi(single_e(o, std::nullopt), f);
    out << format_poly(op_apply(psi, parse_poly(*o.r, ctx), spec.quotient)) << '\n';
    return kExitOk;
  }
  if (cmd == "compose") {
    if (o.e.size() != 2) throw UsageError("--e must be given exactly twice for 'compose'");
    if (o.f.size() != 2) throw UsageError("--f must be given exactly twice for 'compose'");
    const CartierOperator phi(o.e[0], parse_poly(o.f[0], ctx));
    const CartierOperator psi(o.e[1], parse_poly(o.f[1], ctx));
    out << op_compose(phi, psi).to_string() << '\n';
    return kExitOk;
  }
  if (cmd == "gb") {
    const Ideal I = o.e.empty() ? require_quotient(spec, cmd) : spec.algebra.component(single_e(o, std::nullopt));
    out << format_list(reduced_groebner(I, order)) << '\n';
    return kExitOk;
  }
  if (cmd == "colon") {
    if (o.f.size() != 1) throw UsageError("--f must be given exactly once for 'colon'");
    const Ideal I = o.e.empty() ? require_quotient(spec, cmd) : spec.algebra.component(single_e(o, std::nullopt));
    const Ideal g(ctx, {parse_poly(o.f.front(), ctx)});
    out << format_list(reduced_groebner(colon_ideal(I, g), order)) << '\n';
    return kExitOk;
  }
  if (cmd == "fedder") {
    const Ideal& I = require_quotient(spec, cmd);
    out << format_list(reduced_groebner(fedder_ideal(I, single_e(o, 1)), order)) << '\n';
    return kExitOk;
  }
  if (cmd == "fpure") {
    out << "F-pure: " << (f_pure_test(require_quotient(spec, cmd)) ? "yes" : "no") << '\n';
    return kExitOk;
  }
  if (cmd == "validate") {
    const ValidationReport v = validate_subalgebra(spec.algebra, e_max, o.jobs);
    render_validation(out, v);
    return v.valid ? kExitOk : kExitDomain;
  }
  if (cmd == "complexity") {
    const ComplexityReport r = complexity_sequence(spec.algebra, e_max, o.jobs);
    render_complexity(out, r);
    write_csv_file(o, e_max, &r, nullptr);
    return kExitOk;
  }
  if (cmd == "gauge") {
    const GaugeReport r = gauge_growth(spec.algebra, e_max, o.jobs);
    render_gauge(out, r);
    write_csv_file(o, e_max, nullptr, &r);
    return kExitOk;
  }
  // report
  const FullReport r = analyze(spec.algebra, e_max, o.jobs);
  render_report(out, spec.algebra, r);
  if (!r.validation.valid) return kExitDomain;
  write_csv_file(o, e_max, &*r.complexity, &*r.gauge);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cartier algebra computations over F_p[x_1, ..., x_n]", "cartier"};
  app.add_option("command", o.command, "eval | compose | gb | colon | fedder | fpure | validate | complexity | gauge | report")
      ->required()
      ->check(CLI::IsMember({"eval", "compose", "gb", "colon", "fedder", "fpure", "validate", "complexity", "gauge",
                             "report"}));
  app.add_option("--spec", o.spec_path, "algebra spec file")->required();
  app.add_option("--e", o.e, "level (twice for compose)")->check(CLI::NonNegativeNumber);
  app.add_option("--e-max", o.e_max, "analysis window, overrides e_max")->check(CLI::PositiveNumber);
  app.add_option("--f", o.f, "multiplier or colon polynomial (twice for compose)");
  app.add_option("--r", o.r, "argument polynomial for eval");
  app.add_option("--order", o.order, "monomial order for printed bases")->check(CLI::IsMember({"lex", "grevlex"}));
  app.add_option("--csv", o.csv, "also write the table as CSV to this path");
  app.add_option("--jobs", o.jobs, "worker threads for per-level scans")->check(CLI::Range(1u, 256u));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const SpecFile spec = parse_spec(o.spec_path);
    if (spec.work_budget) set_groebner_work_budget(*spec.work_budget);
    return dispatch(o, spec, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace cartier
