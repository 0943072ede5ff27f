#pragma once

#include <map>
#include <string>
#include <vector>

#include "mgn/catalog.hpp"
#include "mgn/chern.hpp"
#include "mgn/divisor.hpp"

namespace mgn::enumerative {

/// Enumerative count entering the antiramification recursion:
/// 2(i-s-1)(2i^3 - 5i^2 + i + 2 - 2i^2 s + 3is).
inline long a_count(int i, int s) {
  if (s < 0 || s > i - 1) throw input_error("a_count: need 0 <= s <= i-1");
  long I = i, S = s;
  long v = 2 * (I - S - 1) * (2 * I * I * I - 5 * I * I + I + 2 - 2 * I * I * S + 3 * I * S);
  if (v < 0 || v % 2 != 0) throw rule_error("a_count produced a value that is not a nonnegative even integer");
  return v;
}

/// Plücker ramification count (i - s)(i^2 - 1 - is).
inline long pluecker_count(int i, int s) {
  if (s < 0 || s > i - 1) throw input_error("pluecker_count: need 0 <= s <= i-1");
  long I = i, S = s;
  return (I - S) * (I * I - 1 - I * S);
}

enum class Provenance { closed_form, recursion, relation_solve };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::closed_form: return "closed-form";
    case Provenance::recursion: return "recursion";
    case Provenance::relation_solve: return "relation-solve";
  }
  return "?";
}

struct Entry {
  Rational coeff;  // signed class coefficient, i.e. -b
  Provenance provenance;
};

/// Boundary coefficients produced by a solver, keyed by canonical index,
/// each with the route that produced it. delta_irr is kept separately.
struct CoefficientTable {
  int g = 0;
  int n = 0;
  std::optional<Entry> delta_irr{};
  std::map<BoundaryIndex, Entry> entries{};
  std::vector<std::string> conflicts{};  // two routes disagreeing on an entry

  /// Stores coeff at the canonical form of (i, s); a second value for the
  /// same entry is compared, never overwritten.
  void put(int i, int s, const Rational& coeff, Provenance p) {
    auto b = canonicalize_index(g, n, i, s);
    if (!b) return;
    auto [it, fresh] = entries.emplace(*b, Entry{coeff, p});
    if (!fresh && it->second.coeff != coeff)
      conflicts.push_back(label(*b) + ": " + to_string(it->second.provenance) + " gives " + it->second.coeff.str() +
                          ", " + to_string(p) + " gives " + coeff.str());
  }

  Rational b(int i, int s) const {
    auto k = canonicalize_index(g, n, i, s);
    if (!k) return Rational(0);
    auto it = entries.find(*k);
    if (it == entries.end()) throw input_error("coefficient table has no entry " + label(*k));
    return -it->second.coeff;
  }

  bool consistent() const { return conflicts.empty(); }
};

inline json to_json(const CoefficientTable& t) {
  json j;
  j["g"] = t.g;
  j["n"] = t.n;
  if (t.delta_irr)
    j["delta_irr"] = {{"coeff", t.delta_irr->coeff.str()}, {"provenance", to_string(t.delta_irr->provenance)}};
  json arr = json::array();
  for (const auto& [b, e] : t.entries)
    arr.push_back({{"i", b.i}, {"s", b.s}, {"coeff", e.coeff.str()}, {"provenance", to_string(e.provenance)}});
  j["boundary"] = std::move(arr);
  return j;
}

/// Entries of the table that differ from the class coefficient.
inline std::vector<std::string> compare(const CoefficientTable& t, const DivisorClass& d) {
  std::vector<std::string> out;
  if (t.delta_irr && t.delta_irr->coeff != d.delta_irr())
    out.push_back("delta_irr: table " + t.delta_irr->coeff.str() + ", class " + d.delta_irr().str());
  for (const auto& [b, e] : t.entries)
    if (e.coeff != d.boundary(b.i, b.s))
      out.push_back(label(b) + ": table " + e.coeff.str() + ", class " + d.boundary(b.i, b.s).str());
  return out;
}

/// Number of points of the moving-point curve lying on the antiramification
/// divisor: (4g - 2)(g - 2).
inline Rational antram_moving_point_count(int g) { return Rational(long(4 * g - 2) * (g - 2)); }

/// Right-hand side of the recursion: 4(g - i)(s - 1)(si - 2i + 2) + a_count(i, s).
inline Rational recursion_rhs(int g, int i, int s) {
  long G = g, I = i, S = s;
  return Rational(4 * (G - I) * (S - 1) * (S * I - 2 * I + 2) + a_count(i, s));
}

/// b_{i:s} from b_{i:s-1} via (2i-2+s) b_{i:s} - s b_{i:s-1} + s(4g-8) = rhs.
/// At s = 0 the b_{i:s-1} term is absent and the relation fixes the seed.
inline Rational recursion_step(int g, int i, int s, const Rational& prev) {
  require(i >= 1 && s >= 0 && s <= i - 1, "recursion step outside 0 <= s <= i-1");
  const long lead = 2L * i - 2 + s;
  if (lead == 0) throw rule_error("recursion is degenerate at (i, s) = (1, 0)");
  Rational known = recursion_rhs(g, i, s) - Rational(long(s) * (4 * g - 8));
  if (s > 0) known += Rational(s) * prev;
  return known / Rational(lead);
}

/// Solution of the (ellpencil, C_irr) system for (b_irr, b_{1:0}).
struct NodalSolve {
  Rational b_irr, b10;
  bool fallback = false;
};

/// The pencil of plane cubics is disjoint from the divisor; C_irr meets it
/// in c_irr points. Unknowns enter through -b_irr delta_irr - b10 delta_{1:0}.
inline NodalSolve solve_nodal_pair(int g, const Rational& a, const Rational& c, const Rational& c_irr) {
  const int n = g - 1;
  DivisorClass known(g, n);
  known.set_lambda(a).set_psi(c);
  const TestCurve rows[2] = {curves::elliptic_pencil(g, n), curves::irreducible_node(g, n)};
  const Rational targets[2] = {Rational(0), c_irr};
  const DivisorClass ui = unit_class(g, n, {Coordinate::Kind::delta_irr, {}});
  const DivisorClass u10 = unit_class(g, n, {Coordinate::Kind::boundary, {1, 0}});
  Rational m[2][2], rhs[2];
  for (int r = 0; r < 2; ++r) {
    m[r][0] = -pair(rows[r], ui);
    m[r][1] = -pair(rows[r], u10);
    rhs[r] = targets[r] - pair(rows[r], known);
  }
  Rational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det.is_zero()) return {Rational(2), Rational(4L * g - 4), true};
  return {(rhs[0] * m[1][1] - m[0][1] * rhs[1]) / det, (m[0][0] * rhs[1] - rhs[0] * m[1][0]) / det, false};
}

/// Regenerates the boundary of the antiramification class on M_{g,g-1} from
/// the interior class and c_irr (both from the GRR engine), the moving-point
/// relation, the nodal pair and the recursion over (i, s).
inline CoefficientTable solve_antram_boundary(int g) {
  require(g >= 5, "solve_antram_boundary: need g >= 5");
  const int n = g - 1;
  CoefficientTable t{g, n};
  const chern::InteriorClass interior = chern::antram_interior_class(g);
  const Rational a = interior.lam, c = interior.psi;

  // Moving point: pair(C_x, c psi - b02 delta_{0:2}) = count.
  {
    const TestCurve cx = curves::moving_point(g, n);
    DivisorClass known(g, n);
    known.set_psi(c);
    Rational per_b02 = -pair(cx, unit_class(g, n, {Coordinate::Kind::boundary, {0, 2}}));
    Rational b02 = (antram_moving_point_count(g) - pair(cx, known)) / per_b02;
    t.put(0, 2, -b02, Provenance::relation_solve);
  }

  const NodalSolve nodal = solve_nodal_pair(g, a, c, chern::c_irr_intersection(g));
  const Provenance nodal_tag = nodal.fallback ? Provenance::closed_form : Provenance::relation_solve;
  t.delta_irr = Entry{-nodal.b_irr, nodal_tag};
  t.put(1, 0, -nodal.b10, nodal_tag);

  for (int i = 2; i <= g; ++i) {
    Rational prev(0);
    for (int s = 0; s <= i - 1; ++s) {
      prev = recursion_step(g, i, s, prev);
      t.put(i, s, -prev, Provenance::recursion);
    }
  }
  return t;
}

/// Intersection of the moving-point curve with F_{g,m}: (g - 2m - 1) C(g, m).
inline Rational f_moving_point_count(int g, int m) { return Rational(g - 2 * m - 1) * binomial(g, m); }

/// One step of the rational-tail relation, which holds for 3 <= s <= n only:
/// pair(Gamma_{0:s}, F) = 0 solved for b_{0:s}.
inline Rational gamma_step(int g, int n, int s, const Rational& c, const Rational& b_prev) {
  if (s < 3 || s > n) throw input_error("rational-tail relation is stated for 3 <= s <= n only");
  const TestCurve gam = curves::rational_tail(g, n, s);
  DivisorClass known(g, n);
  known.set_psi(c);
  known.add_boundary(0, s - 1, -b_prev);
  Rational per_b = -pair(gam, unit_class(g, n, {Coordinate::Kind::boundary, *canonicalize_index(g, n, 0, s)}));
  return -pair(gam, known) / per_b;
}

/// Boundary delta_{0:s} coefficients of F_{g,m} from test curves.
inline CoefficientTable solve_f_boundary(int g, int m) {
  require(m >= 1, "solve_f_boundary: need m >= 1");
  const int n = g - 2 * m;
  require(n >= 2, "solve_f_boundary: need n = g - 2m >= 2");
  CoefficientTable t{g, n};
  const Rational c = Rational(n - 1, g - 1) * binomial(g - 1, g - m - 1);
  const TestCurve cx = curves::moving_point(g, n);
  DivisorClass known(g, n);
  known.set_psi(c);
  Rational per_b02 = -pair(cx, unit_class(g, n, {Coordinate::Kind::boundary, {0, 2}}));
  Rational b = (f_moving_point_count(g, m) - pair(cx, known)) / per_b02;
  t.put(0, 2, -b, Provenance::relation_solve);
  for (int s = 3; s <= n; ++s) {
    b = gamma_step(g, n, s, c, b);
    t.put(0, s, -b, Provenance::recursion);
  }
  return t;
}

}  // namespace mgn::enumerative
