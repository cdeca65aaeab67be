/* Copyright 2026 The resforge Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <optional>

#include "resforge/error.hpp"
#include "resforge/parse.hpp"
#include "resforge/symbols.hpp"
#include "verify.hpp"

namespace resforge::cli {

namespace {

using nlohmann::json;

struct Config {
  std::uint32_t p = 0;
  std::uint32_t f = 1;
  std::uint32_t n = 2;
  int precision = 0;
  std::uint64_t bound = kDefaultEnumBound;
  std::uint64_t seed = 42;
  std::string format = "human";
  std::string method = "all";
};

void add_field_options(CLI::App* cmd, Config& c, bool p_required) {
  auto* p = cmd->add_option("--p", c.p, "residue characteristic (prime)")->envname("RESFORGE_P");
  if (p_required) p->required();
  cmd->add_option("--f", c.f, "residue degree")->envname("RESFORGE_F")->capture_default_str();
  cmd->add_option("--bound", c.bound, "enumeration bound for finite modules")
      ->envname("RESFORGE_BOUND")
      ->capture_default_str();
}

void add_format_option(CLI::App* cmd, Config& c, std::vector<std::string> formats) {
  cmd->add_option("--format", c.format, "output format")
      ->envname("RESFORGE_FORMAT")
      ->check(CLI::IsMember(std::move(formats)))
      ->capture_default_str();
}

void add_symbol_options(CLI::App* cmd, Config& c) {
  cmd->add_option("--n", c.n, "order of the roots of unity, dividing q-1")
      ->envname("RESFORGE_N")
      ->capture_default_str();
  cmd->add_option("--precision", c.precision, "p-adic working precision (0: largest supported)")
      ->envname("RESFORGE_PRECISION")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--method", c.method, "which computation to run")
      ->check(CLI::IsMember({"direct", "muset", "extension", "all"}))
      ->capture_default_str();
}

Method parse_method(const std::string& s) {
  if (s == "direct") return Method::kDirect;
  if (s == "muset") return Method::kMuset;
  if (s == "extension") return Method::kExtension;
  return Method::kAll;
}

ExtCtx make_ctx(const Config& c) {
  if (!is_prime(c.p)) throw DomainError("p = " + std::to_string(c.p) + " is not prime");
  return ExtCtx(RingCtx::make(FieldCtx::make(c.p, c.f), c.precision), c.n,
                BasepointRule::kLeast, c.bound);
}

std::string mu_text(const FieldCtx& field, const std::optional<MuScalar>& s) {
  if (!s) return "-";
  return "zeta^" + std::to_string(s->exp()) + " = " + field.to_string(mu_embed(field, *s));
}

int cmd_symbol(const Config& c, const std::string& a_text, const std::string& b_text,
               std::ostream& out) {
  const ExtCtx ctx = make_ctx(c);
  const KElem a = parse_element(a_text, ctx.ring);
  const KElem b = parse_element(b_text, ctx.ring);
  if (c.precision > 0) {
    const int need = std::abs(a.val()) + std::abs(b.val()) + 2;
    if (c.precision < need) {
      throw PrecisionError("precision " + std::to_string(c.precision) +
                           " is below the required " + std::to_string(need));
    }
  }
  const SymbolReport r = crosscheck(ctx, a, b, parse_method(c.method));
  const FieldCtx& field = ctx.ring->field();
  if (c.format == "json") {
    out << report_to_json(field, r).dump() << "\n";
  } else {
    out << "p=" << r.p << " f=" << r.f << " n=" << r.n << " a=" << r.a << " b=" << r.b << "\n";
    out << "direct:    " << mu_text(field, r.direct) << "\n";
    out << "muset:     " << mu_text(field, r.muset) << "\n";
    out << "extension: " << mu_text(field, r.extension) << "\n";
    out << "agree:     " << (r.agree ? "yes" : "no") << "\n";
  }
  return r.agree ? 0 : 1;
}

int cmd_verify(const Config& c, bool p_given, const std::string& suite, std::ostream& out) {
  VerifyOptions o;
  if (p_given) {
    if (!is_prime(c.p)) throw DomainError("p = " + std::to_string(c.p) + " is not prime");
    o.p = c.p;
  }
  o.f = c.f;
  o.seed = c.seed;
  o.bound = c.bound;
  const VerifyReport report = run_verify(suite, o);
  if (c.format == "json") {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << "suite " << suite << " (seed " << c.seed << "): "
        << (report.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& [name, t] : report.properties()) {
      out << "  " << name << ": " << t.checked - t.failed << "/" << t.checked << " passed";
      if (t.skipped > 0) out << ", " << t.skipped << " skipped (enumeration bound)";
      out << "\n";
    }
    if (report.counterexample()) out << "counterexample: " << report.counterexample()->dump() << "\n";
  }
  return report.passed() ? 0 : 1;
}

int cmd_table(const Config& c, int vmax, std::uint64_t max_entries, std::ostream& out) {
  const ExtCtx ctx = make_ctx(c);
  const FieldCtx& field = ctx.ring->field();
  const std::uint64_t side = std::uint64_t{field.order() - 1} * (2 * static_cast<std::uint64_t>(vmax) + 1);
  if (side * side > max_entries) {
    throw DomainError("table of " + std::to_string(side * side) + " entries exceeds --max-entries " +
                      std::to_string(max_entries));
  }
  std::vector<KElem> elems;
  for (int v = -vmax; v <= vmax; ++v) {
    for (std::uint32_t u = 1; u < field.order(); ++u) {
      elems.push_back(KElem::uniformizer_power(ctx.ring, v) *
                      KElem::from_ring(ctx.ring, 0, ctx.ring->lift(FieldElem{u}),
                                       ctx.ring->precision()));
    }
  }
  const Method method = parse_method(c.method);
  const auto cell = [](const std::optional<MuScalar>& s) {
    return s ? std::to_string(s->exp()) : std::string();
  };
  bool all_agree = true;
  json rows = json::array();
  if (c.format == "csv") out << "a,b,direct,muset,extension,agree\n";
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      const SymbolReport r = crosscheck(ctx, a, b, method);
      all_agree = all_agree && r.agree;
      if (c.format == "csv") {
        out << '"' << r.a << "\",\"" << r.b << "\"," << cell(r.direct) << ',' << cell(r.muset)
            << ',' << cell(r.extension) << ',' << (r.agree ? "true" : "false") << "\n";
      } else {
        json row{{"a", r.a}, {"b", r.b}, {"agree", r.agree}};
        row["direct"] = r.direct ? json(r.direct->exp()) : json(nullptr);
        row["muset"] = r.muset ? json(r.muset->exp()) : json(nullptr);
        row["extension"] = r.extension ? json(r.extension->exp()) : json(nullptr);
        rows.push_back(std::move(row));
      }
    }
  }
  if (c.format == "json") {
    out << json{{"p", c.p}, {"f", c.f}, {"n", c.n}, {"vmax", vmax},
                {"zeta", field.to_string(mu_embed(field, MuScalar(c.n, 1)))},
                {"entries", std::move(rows)}}
               .dump()
        << "\n";
  }
  return all_agree ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"resforge: n-th power residue symbols over unramified local fields"};
  app.name("resforge");
  app.require_subcommand(1);

  Config c;
  std::string a_text, b_text, suite;
  int vmax = 1;
  std::uint64_t max_entries = 100000;

  auto* symbol = app.add_subcommand("symbol", "compute (a, b)_n by the requested methods");
  add_field_options(symbol, c, true);
  add_symbol_options(symbol, c);
  add_format_option(symbol, c, {"human", "json"});
  symbol->add_option("a", a_text, "first argument")->required();
  symbol->add_option("b", b_text, "second argument")->required();

  auto* verify = app.add_subcommand("verify", "run a property suite");
  add_field_options(verify, c, false);
  add_format_option(verify, c, {"human", "json"});
  verify->add_option("--seed", c.seed, "seed for randomized properties")
      ->envname("RESFORGE_SEED")
      ->capture_default_str();
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));

  auto* table = app.add_subcommand("table", "tabulate symbols over a grid of p^v u");
  add_field_options(table, c, true);
  add_symbol_options(table, c);
  std::string table_format = "csv";
  table->add_option("--format", table_format, "output format")
      ->envname("RESFORGE_FORMAT")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  table->add_option("--vmax", vmax, "valuations range over [-vmax, vmax]")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  table->add_option("--max-entries", max_entries, "refuse larger grids")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (symbol->parsed()) return cmd_symbol(c, a_text, b_text, out);
    if (verify->parsed()) {
      const bool p_given = verify->count("--p") > 0 || std::getenv("RESFORGE_P") != nullptr;
      return cmd_verify(c, p_given, suite, out);
    }
    c.format = table_format;
    return cmd_table(c, vmax, max_entries, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace resforge::cli
