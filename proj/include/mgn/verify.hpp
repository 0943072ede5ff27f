#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mgn/catalog.hpp"
#include "mgn/certify.hpp"
#include "mgn/chern.hpp"
#include "mgn/enumerative.hpp"
#include "mgn/symprod.hpp"

/// Cross-route invariant suites behind `mgncalc verify`.
namespace mgn::verify {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& c : checks) f += !c.ok;
    return f;
  }

  void expect(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
  }
  /// Runs body; an exception counts as a failed check carrying its message.
  void run(std::string name, const std::function<std::string()>& body) {
    try {
      std::string why = body();
      expect(std::move(name), why.empty(), why);
    } catch (const std::exception& e) {
      expect(std::move(name), false, std::string("exception: ") + e.what());
    }
  }
};

inline std::string mismatch(std::string_view what, const std::string& got, const std::string& want) {
  return std::string(what) + ": got " + got + ", expected " + want;
}

inline std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
  return out;
}

// ---- grr --------------------------------------------------------------------

inline Report grr_suite() {
  using namespace chern;
  Report r{"grr", {}};
  for (int g : {5, 9, 12, 17, 21}) {
    const std::string at = " g=" + std::to_string(g);
    UniversalCurveModel model(g);
    const int n = model.n;
    auto K = [](int i) { return "K_" + std::to_string(i); };
    auto D = [](int i) { return "D_" + std::to_string(i) + "p"; };
    r.run("ch0 is the rank 2" + at, [&] {
      auto res = antram_grr(model);
      return res.ch0 == ChernExpr::constant(model.b, 2) ? "" : "ch0 = " + res.ch0.dump();
    });
    r.run("ch1 matches lambda - sum K_i - 3K_p + 2 sum D_ip" + at, [&] {
      ChernExpr want = ChernExpr::generator(model.b, "lam") + ChernExpr::generator(model.b, "K_p", -3);
      for (int i = 1; i <= n; ++i) want += ChernExpr::generator(model.b, K(i), -1) + ChernExpr::generator(model.b, D(i), 2);
      auto got = antram_grr(model).ch1;
      return got == want ? "" : mismatch("ch1", got.dump(), want.dump());
    });
    r.run("ch2 matches 5/2 K_p^2 + 1/2 sum K_i^2 - 2 sum (K_i + K_p) D_ip" + at, [&] {
      ChernExpr want(model.b);
      const auto kp = model.b->id("K_p");
      want.add({kp, kp}, Rational(5, 2));
      for (int i = 1; i <= n; ++i) {
        const auto ki = model.b->id(K(i)), di = model.b->id(D(i));
        want.add({ki, ki}, Rational(1, 2));
        want.add({ki, di}, -2);
        want.add({kp, di}, -2);
      }
      auto got = antram_grr(model).ch2;
      return got == want ? "" : mismatch("ch2", got.dump(), want.dump());
    });
    r.run("u-pushforwards of ch1^2 and ch2" + at, [&] {
      auto p = antram_interior_pushforwards(model);
      auto a = read_interior(model, p.ch1_squared), b = read_interior(model, p.ch2);
      InteriorClass want_a{Rational(-(8 * g - 116)), Rational(8 * g - 24)}, want_b{Rational(30), Rational(-4)};
      if (!(a == want_a)) return mismatch("u_*(ch1^2)", a.lam.str() + "," + a.psi.str(), want_a.lam.str() + "," + want_a.psi.str());
      if (!(b == want_b)) return mismatch("u_*(ch2)", b.lam.str() + "," + b.psi.str(), "30,-4");
      return std::string();
    });
    r.run("interior class equals closed-form lambda, psi" + at, [&] {
      auto ic = antram_interior_class(g);
      auto cf = antram(g);
      if (ic.lam != cf.lambda() || ic.psi != cf.psi())
        return mismatch("interior", ic.lam.str() + "," + ic.psi.str(), cf.lambda().str() + "," + cf.psi().str());
      return std::string();
    });
    r.run("C_irr pipeline" + at, [&] {
      auto res = c_irr_computation(g);
      TripleProductModel tm(g);
      ChernExpr want1 = ChernExpr::generator(tm.cc, "F1", -(g - 2)) + ChernExpr::generator(tm.cc, "F2", -4 * (g - 2)) +
                        ChernExpr::generator(tm.cc, "DiagCC", -2);
      if (!(res.ch0.terms() == ChernExpr::constant(tm.cc, -1).terms())) return "ch0 = " + res.ch0.dump();
      if (!(res.ch1.terms() == want1.terms())) return mismatch("ch1", res.ch1.dump(), want1.dump());
      if (res.ch2_degree != Rational(-2 * (g - 2))) return mismatch("deg ch2", res.ch2_degree.str(), std::to_string(-2 * (g - 2)));
      if (res.value != Rational(4L * (g - 2) * (g - 1))) return mismatch("c2", res.value.str(), std::to_string(4 * (g - 2) * (g - 1)));
      return std::string();
    });
  }
  r.run("unpinned pushforward rules are listed", [] {
    UniversalCurveModel m(5);
    auto un = m.q->unpinned_rules();
    return un == std::vector<std::string>{"omega_q"} ? "" : "unexpected unpinned set: " + join(un);
  });
  return r;
}

// ---- antram -----------------------------------------------------------------

inline Report antram_suite() {
  Report r{"antram", {}};
  r.expect("a_count(3,0) = 56", enumerative::a_count(3, 0) == 56);
  r.expect("a_count(4,0) = 324", enumerative::a_count(4, 0) == 324);
  for (int g = 5; g <= 21; ++g) {
    const std::string at = " g=" + std::to_string(g);
    r.run("solver table equals closed form" + at, [&] {
      auto t = enumerative::solve_antram_boundary(g);
      if (!t.consistent()) return "conflict: " + join(t.conflicts);
      auto diff = enumerative::compare(t, antram(g));
      if (!diff.empty()) return join(diff);
      if (t.entries.size() != boundary_indices(g, g - 1).size()) return std::string("table does not cover every boundary index");
      return std::string();
    });
    r.run("nodal pair gives b_irr = 2, b_1:0 = 4g-4" + at, [&] {
      auto t = enumerative::solve_antram_boundary(g);
      auto tag = t.delta_irr->provenance;
      if (t.delta_irr->coeff != Rational(-2) || t.b(1, 0) != Rational(4 * g - 4)) return std::string("wrong values");
      if ((g == 7) != (tag == enumerative::Provenance::closed_form)) return std::string("unexpected provenance");
      return std::string();
    });
  }
  r.run("recursion seed constant is +2", [] {
    for (int g = 5; g <= 21; ++g)
      for (int i = 2; i <= g; ++i) {
        long I = i;
        if (enumerative::recursion_step(g, i, 0, 0) != Rational(2 * I * I * I - 5 * I * I - 3 * I + 4L * g + 2))
          return "seed differs at g=" + std::to_string(g) + ", i=" + std::to_string(i);
      }
    return std::string();
  });
  return r;
}

// ---- f ----------------------------------------------------------------------

/// Coefficients of F_{g,1} as displayed for the m = 1 case.
inline DivisorClass f1_display(int g) {
  const int n = g - 2;
  DivisorClass d(g, n, Completeness::partial);
  d.set_lambda(-(g - 12)).set_psi(g - 3).set_delta_irr(-1);
  for (int s = 2; s <= n; ++s) d.set_boundary(0, s, -Rational(long(s) * (g - 4 + s * g - 2 * s), 2));
  return d;
}

inline Report f_suite() {
  Report r{"f", {}};
  for (int g = 5; g <= 21; ++g) {
    const std::string at = " g=" + std::to_string(g);
    r.run("f_class(g,1) equals the m=1 display" + at, [&] {
      auto a = f_class(g, 1), b = f1_display(g);
      return a == b ? "" : mismatch("F_{g,1}", to_text(a), to_text(b));
    });
    for (int m = 1; g - 2 * m >= 2; ++m)
      r.run("test-curve solve equals closed form g=" + std::to_string(g) + " m=" + std::to_string(m), [&] {
        auto t = enumerative::solve_f_boundary(g, m);
        return join(enumerative::compare(t, f_class(g, m)));
      });
  }
  return r;
}

// ---- symprod ----------------------------------------------------------------

inline Report symprod_suite() {
  Report r{"symprod", {}};
  r.run("hand instance (5,1) pairs to 0", [] {
    auto p = symprod::f_restricted(5, 1) * symprod::secant_porteous(5, 1);
    return symprod::evaluate(p).is_zero() ? "" : "pairing = " + symprod::evaluate(p).str();
  });
  for (int g = 5; g <= 21; ++g)
    for (int m = 1; m <= 5 && 2 * m < g; ++m) {
      const std::string at = " g=" + std::to_string(g) + " m=" + std::to_string(m);
      r.run("extremal pairing equals closed form" + at, [&] {
        auto e = symprod::extremal_intersection(g, m);
        if (e.pairing != e.closed_form) return mismatch("pairing", e.pairing.str(), e.closed_form.str());
        if (m == 1 && !e.pairing.is_zero()) return std::string("m = 1 pairing is not 0");
        return std::string();
      });
      r.run("pullback of the descended class" + at, [&] {
        auto pc = symprod::pullback_consistency(g, m);
        return pc.equal ? "" : mismatch("pullback", symprod::to_text(pc.descended), symprod::to_text(pc.expected));
      });
      r.run("F restricted lies in the fourth quadrant" + at, [&] {
        auto f = symprod::f_restricted(g, m);
        return f.at(0).sign() > 0 && f.at(1).sign() < 0 ? "" : "coefficients " + symprod::to_text(f);
      });
      r.run("monomial evaluation ratios" + at, [&] {
        for (int k = 0; k < g - 2 * m; ++k)
          if (symprod::eval_monomial(g, m, k) / symprod::eval_monomial(g, m, k + 1) != Rational(2 * m + k + 1))
            return "ratio fails at k=" + std::to_string(k);
        return std::string();
      });
    }
  return r;
}

// ---- cone -------------------------------------------------------------------

inline Report cone_suite() {
  using namespace cone;
  Report r{"cone", {}};
  r.expect("g=12 threshold is 823/119", theta_threshold(12) == Rational(823, 119));
  r.run("registry overrides are below the default for g = 12, 16", [] {
    for (int g : {12, 16})
      if (!(registry().slope(g) < SlopeRegistry::default_slope(g))) return "override not below default at g=" + std::to_string(g);
    return std::string();
  });
  for (int g = 12; g <= 21; ++g) {
    const Rational th = theta_threshold(g);
    for (const Rational& s : {registry().slope(g), th - Rational(1, 1000), th + Rational(1, 1000), SlopeRegistry::default_slope(g)})
      r.run("restricted verdict iff slope < threshold g=" + std::to_string(g) + " s=" + s.str(), [&] {
        auto c = certify_theta(g, s, Mode::restricted);
        if (c.cert.feasible != (s < th)) return std::string("verdict ") + (c.cert.feasible ? "feasible" : "infeasible");
        return join(verify_certificate(c.cert));
      });
  }
  r.run("explicit residual delta_0:2 = 0 and psi = 2/(6g-11), g = 5..30", [] {
    for (int g = 5; g <= 30; ++g) {
      auto res = explicit_residual(g, registry().slope(g));
      if (!res.boundary(0, 2).is_zero() || res.psi() != Rational(2, 6 * g - 11))
        return "fails at g=" + std::to_string(g) + ": " + res.boundary(0, 2).str() + ", " + res.psi().str();
    }
    return std::string();
  });
  r.run("N_{g,n} is big on 4 <= g <= 15", [] {
    for (int g = 4; g <= 15; ++g)
      for (int n = 1; n <= g - 1; ++n) {
        auto c = ngn_bigness(g, n);
        if (!c.feasible) return "infeasible at (" + std::to_string(g) + "," + std::to_string(n) + ")";
        if (c.multipliers[0].sign() <= 0) return std::string("kappa1 multiplier not positive");
        auto bad = verify_certificate(c);
        if (!bad.empty()) return join(bad);
      }
    return std::string();
  });
  r.run("general-type table: asserted rows pass", [] {
    std::string out;
    for (const auto& row : fg_table(12, 21))
      if (row.asserted() && row.verdict != "pass") out += "(" + std::to_string(row.g) + "," + std::to_string(row.n) + ") ";
    return out.empty() ? out : "failing rows " + out;
  });
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"grr", "antram", "f", "symprod", "cone"};
  return names;
}

inline Report run_suite(std::string_view name) {
  if (name == "grr") return grr_suite();
  if (name == "antram") return antram_suite();
  if (name == "f") return f_suite();
  if (name == "symprod") return symprod_suite();
  if (name == "cone") return cone_suite();
  throw input_error("unknown suite: " + std::string(name));
}

inline std::string format(const Report& r) {
  std::string out;
  for (const auto& c : r.checks) {
    out += (c.ok ? "PASS " : "FAIL ") + r.suite + ": " + c.name;
    if (!c.ok && !c.detail.empty()) out += " -- " + c.detail;
    out += "\n";
  }
  out += "suite " + r.suite + ": " + std::to_string(r.checks.size() - r.failures()) + "/" +
         std::to_string(r.checks.size()) + " passed\n";
  return out;
}

}  // namespace mgn::verify
