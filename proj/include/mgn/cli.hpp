#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mgn/catalog.hpp"
#include "mgn/certify.hpp"
#include "mgn/divisor.hpp"
#include "mgn/symprod.hpp"
#include "mgn/verify.hpp"

/// Command-line front end. Exit codes: 0 success, 1 verification failure or
/// infeasible certificate, 2 usage error.
namespace mgn::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

namespace detail {

inline TestCurve curve_by_label(const std::string& name, int g, int n, std::optional<int> s) {
  if (name == "C_x") return curves::moving_point(g, n);
  if (name == "C_irr") return curves::irreducible_node(g, n);
  if (name == "ellpencil") return curves::elliptic_pencil(g, n);
  if (name == "Gamma") {
    require(s.has_value(), "curve Gamma needs --s");
    return curves::rational_tail(g, n, *s);
  }
  throw input_error("unknown curve: " + name + " (expected C_x, C_irr, ellpencil or Gamma)");
}

/// Partial classes know only lambda, psi, delta_irr and the delta_{0:s}.
inline void check_pairable(const TestCurve& c, const DivisorClass& d) {
  if (!d.is_partial()) return;
  for (const auto& [b, v] : c.boundary)
    if (b.i != 0)
      throw input_error("class is partial: its " + label(b) + " coefficient is unknown, and " + c.label + " meets it");
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mgncalc: exact divisor-class calculator for moduli of pointed curves"};
  app.name("mgncalc");
  app.require_subcommand(1, 1);

  int g = 0;
  std::optional<int> n, m, s, k, n_min;
  std::string name, format, suite = "all", curve, class_name, mode = "restricted", slope_text;
  int g_min = 12, g_max = 21;
  bool decimal_hint = false;

  auto* cls = app.add_subcommand("class", "print a catalog class");
  cls->add_option("name", name, "class name")->required()->check(CLI::IsMember(catalog_names()));
  cls->add_option("--g", g, "genus")->required();
  cls->add_option("--n", n, "number of marked points");
  cls->add_option("--m", m, "pencil parameter (F only)");
  cls->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* ver = app.add_subcommand("verify", "run cross-route invariant suites");
  std::vector<std::string> suites = verify::suite_names();
  suites.push_back("all");
  ver->add_option("--suite", suite, "grr | antram | f | symprod | cone | all")->check(CLI::IsMember(suites));

  auto* inter = app.add_subcommand("intersect", "intersect a test curve with a class");
  inter->add_option("--curve", curve, "C_x | C_irr | ellpencil | Gamma")
      ->required()
      ->check(CLI::IsMember({"C_x", "C_irr", "ellpencil", "Gamma"}));
  inter->add_option("--class", class_name, "class name")->required()->check(CLI::IsMember(catalog_names()));
  inter->add_option("--g", g, "genus")->required();
  inter->add_option("--n", n, "number of marked points");
  inter->add_option("--m", m, "pencil parameter (F only)");
  inter->add_option("--s", s, "points on the rational tail (Gamma only)");
  inter->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* cert = app.add_subcommand("certify", "cone-membership certificates");
  std::string what;
  cert->add_option("what", what, "theta | ngn")->required()->check(CLI::IsMember({"theta", "ngn"}));
  cert->add_option("--g", g, "genus")->required();
  cert->add_option("--n", n, "number of marked points (ngn)");
  cert->add_option("--slope", slope_text, "slope p/q (theta; default: registry)");
  cert->add_option("--mode", mode, "restricted | full")->check(CLI::IsMember({"restricted", "full"}));

  auto* table = app.add_subcommand("table", "general-type table");
  std::string table_name;
  table->add_option("which", table_name, "fg")->required()->check(CLI::IsMember({"fg"}));
  table->add_option("--g-min", g_min, "smallest genus")->capture_default_str();
  table->add_option("--g-max", g_max, "largest genus")->capture_default_str();
  table->add_option("--n-min", n_min, "smallest n (default: the table's f(g))");
  table->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  table->add_flag("--decimal-hint", decimal_hint, "append a non-authoritative float slope column");

  auto* sym = app.add_subcommand("symprod", "classes on the symmetric product");
  std::vector<std::string> sym_names = symprod::cd_class_names();
  sym_names.insert(sym_names.end(), {"extremal", "pullback", "eval"});
  sym->add_option("name", name, "class name, extremal, pullback or eval")->required()->check(CLI::IsMember(sym_names));
  sym->add_option("--g", g, "genus")->required();
  sym->add_option("--m", m, "pencil parameter")->required();
  sym->add_option("--k", k, "x power (eval only)");
  sym->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kUsage;
  }

  try {
    if (cls->parsed()) {
      DivisorClass d = catalog_class(name, g, n, m);
      if (format == "text") out << to_text(d);
      else detail::emit(out, to_json(d));
      return kOk;
    }
    if (ver->parsed()) {
      std::vector<std::string> run = suite == "all" ? verify::suite_names() : std::vector<std::string>{suite};
      bool ok = true;
      for (const auto& sname : run) {
        auto rep = verify::run_suite(sname);
        out << verify::format(rep);
        ok &= rep.passed();
      }
      out << (ok ? "all suites passed\n" : "verification FAILED\n");
      return ok ? kOk : kFailed;
    }
    if (inter->parsed()) {
      DivisorClass d = catalog_class(class_name, g, n, m);
      TestCurve c = detail::curve_by_label(curve, g, d.points(), s);
      detail::check_pairable(c, d);
      Rational v = pair(c, d);
      if (format == "text") {
        out << c.label << " . " << class_name << " = " << v << "\n";
      } else {
        detail::emit(out, json{{"curve", c.label}, {"class", class_name}, {"g", g}, {"n", d.points()}, {"value", v.str()}});
      }
      return kOk;
    }
    if (cert->parsed()) {
      if (what == "ngn") {
        require(n.has_value(), "certify ngn needs --n");
        auto c = cone::ngn_bigness(g, *n);
        detail::emit(out, cone::to_json(c));
        return c.feasible ? kOk : kFailed;
      }
      Rational slope = slope_text.empty() ? cone::registry().slope(g) : Rational::parse(slope_text);
      auto t = cone::certify_theta(g, slope, mode == "full" ? cone::Mode::full : cone::Mode::restricted);
      detail::emit(out, cone::to_json(t));
      return t.cert.feasible ? kOk : kFailed;
    }
    if (table->parsed()) {
      auto rows = cone::fg_table(g_min, g_max, n_min);
      if (format == "json") detail::emit(out, cone::table_json(rows));
      else out << cone::table_csv(rows, decimal_hint);
      bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return !r.asserted() || r.verdict == "pass"; });
      return ok ? kOk : kFailed;
    }
    if (sym->parsed()) {
      const bool text = format == "text";
      if (name == "extremal") {
        auto e = symprod::extremal_intersection(g, *m);
        if (text) out << "pairing " << e.pairing << ", closed form " << e.closed_form << (e.extension_used ? " (zero-binomial extension used)" : "") << "\n";
        else detail::emit(out, json{{"g", g}, {"m", *m}, {"pairing", e.pairing.str()}, {"closed_form", e.closed_form.str()}, {"extension_used", e.extension_used}});
        return e.pairing == e.closed_form ? kOk : kFailed;
      }
      if (name == "pullback") {
        auto p = symprod::pullback_consistency(g, *m);
        if (text) out << "descended " << symprod::to_text(p.descended) << ", expected " << symprod::to_text(p.expected) << (p.equal ? ": equal" : ": DIFFERENT") << "\n";
        else detail::emit(out, json{{"descended", symprod::to_json(p.descended)}, {"expected", symprod::to_json(p.expected)}, {"equal", p.equal}, {"numeric_comparison", p.numeric}});
        return p.equal ? kOk : kFailed;
      }
      if (name == "eval") {
        require(k.has_value(), "symprod eval needs --k");
        Rational v = symprod::eval_monomial(g, *m, *k);
        if (text) out << v << "\n";
        else detail::emit(out, json{{"g", g}, {"m", *m}, {"k", *k}, {"value", v.str()}});
        return kOk;
      }
      auto p = symprod::cd_class(name, g, *m);
      if (text) out << symprod::to_text(p) << "\n";
      else detail::emit(out, symprod::to_json(p));
      return kOk;
    }
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  err << app.help();
  return kUsage;
}

}  // namespace mgn::cli
