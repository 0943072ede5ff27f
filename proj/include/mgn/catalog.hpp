#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgn/divisor.hpp"

namespace mgn {

/// The four quantities entering the bigness inequalities, for a class
/// a*lambda + c*sum psi - b_irr*delta_irr - b02*delta_{0:2} - ...
struct ClassSummary {
  Rational a, c, b_irr, b02;
  friend bool operator==(const ClassSummary&, const ClassSummary&) = default;
};

inline ClassSummary summarize(const DivisorClass& d) {
  return {d.lambda(), d.psi(), -d.delta_irr(), -d.boundary(0, 2)};
}

/// K = 13 lambda + sum psi - 2 delta_irr - 2 sum delta_{i:T} - delta_{1:0}.
inline DivisorClass canonical_class(int g, int n) {
  DivisorClass k(g, n);
  k.set_lambda(13).set_psi(n > 0 ? 1 : 0).set_delta_irr(-2);
  for (const auto& b : boundary_indices(g, n)) k.set_boundary(b.i, b.s, -2);
  k.add_boundary(1, 0, -1);
  return k;
}

/// Pullback of the canonical class of the symmetric quotient: the quotient
/// map is branched along delta_{0:2}, so the pullback is K - delta_{0:2}.
inline DivisorClass symquot_canonical_pullback(int g, int n) {
  require(n >= 2, "symquot_canonical_pullback: need n >= 2");
  return canonical_class(g, n).add_boundary(0, 2, -1);
}

/// Polynomial coefficient b_{i:s} of the antiramification class, valid for
/// 0 <= s <= i - 1.
inline Rational antram_boundary_polynomial(int g, int i, int s) {
  require(s >= 0 && s <= i - 1, "antram polynomial evaluated outside 0 <= s <= i-1");
  long G = g, I = i, S = s;
  return Rational(2 * I * I * I - 5 * I * I - 3 * I + 4 * G - 4 * I * I * S + 14 * S * I - 6 * G * S - S +
                  2 * S * S * G - 3 * S * S + 2);
}

/// Representative of a canonical index on which the antram polynomial is
/// defined, i.e. with 1 <= i and 0 <= s <= i - 1 (n = g - 1). The explicitly
/// displayed delta_{0:2} term is handled by the caller.
inline BoundaryIndex antram_polynomial_representative(int g, const BoundaryIndex& b) {
  const int n = g - 1;
  if (b.i >= 1 && b.s <= b.i - 1) return b;
  BoundaryIndex p{g - b.i, n - b.s};
  if (p.i >= 1 && p.s >= 0 && p.s <= p.i - 1) return p;
  throw std::logic_error("no in-range representative for " + label(b));
}

/// Class of the closure of the antiramification locus on M_{g,g-1}.
inline DivisorClass antram(int g) {
  require(g >= 4, "antram: need g >= 4");
  const int n = g - 1;
  DivisorClass d(g, n);
  d.set_lambda(-4 * (g - 7)).set_psi(4 * (g - 2)).set_delta_irr(-2);
  for (const auto& b : boundary_indices(g, n)) {
    if (b == BoundaryIndex{0, 2}) {
      d.set_boundary(0, 2, -(12 * g - 22));
      continue;
    }
    auto r = antram_polynomial_representative(g, b);
    d.set_boundary(b.i, b.s, -antram_boundary_polynomial(g, r.i, r.s));
  }
  return d;
}

/// Class of the pencil-fibre divisor F_{g,m} on M_{g,g-2m}. Only lambda, psi,
/// delta_irr and the delta_{0:s} are known; the class is flagged partial.
inline DivisorClass f_class(int g, int m) {
  require(g >= 3, "f_class: need g >= 3");
  require(m >= 1 && 2 * m <= g - 1, "f_class: need 1 <= m and n = g - 2m >= 1");
  const int n = g - 2 * m, d = g - m;
  DivisorClass f(g, n, Completeness::partial);
  const Rational bin_g2 = binomial(g - 2, d - 1);
  f.set_lambda(Rational(10 * n, g - 2) * bin_g2 - Rational(n, g) * binomial(g, d));
  f.set_psi(Rational(n - 1, g - 1) * binomial(g - 1, d - 1));
  f.set_delta_irr(-Rational(n, g - 2) * bin_g2);
  const Rational bin_g1 = binomial(g - 1, d);
  for (int s = 2; s <= n; ++s) {
    long S = s, Nl = n;
    Rational num(S * (Nl * Nl - g + S * g * Nl - S * Nl));
    f.set_boundary(0, s, -(num / Rational(2L * (g - 1) * (g - d))) * bin_g1);
  }
  return f;
}

/// W = -lambda + C(g+1,2) psi - sum_j C(g-j+1,2) delta_{j:1}, the Weierstrass
/// divisor on the universal curve.
inline PointedClass weierstrass_pointed(int g) {
  PointedClass w;
  w.lam = Rational(-1);
  w.psi = binomial(g + 1, 2);
  for (int j = 1; j <= g - 1; ++j) w.d[j] = -binomial(g - j + 1, 2);
  return w;
}

/// Brill-Noether boundary profile on M_g, normalized to b_0 = 1:
/// b_i / b_0 = 6 i (g - i) / (g + 1).
inline Rational brill_noether_ratio(int g, int i) { return Rational(6L * i * (g - i), g + 1); }

/// phi^* of an effective divisor on M_g with the Brill-Noether profile and
/// lambda coefficient equal to the given slope (so b_0 = 1).
inline DivisorClass slope_divisor_pullback(int g, int n, const Rational& slope) {
  DivisorClass d(g, n);
  d.set_lambda(slope).set_delta_irr(-1);
  for (const auto& b : boundary_indices(g, n))
    if (b.i >= 1) d.set_boundary(b.i, b.s, -brill_noether_ratio(g, b.i));
  return d;
}

inline DivisorClass named_class(std::string_view name, int g, int n) {
  require(g >= 3 && n >= 0, "named_class: need g >= 3, n >= 0");
  auto need_points = [&] { require(n >= 1, std::string(name) + ": needs n >= 1"); };
  if (name == "psi_tilde_pullback") {
    need_points();
    DivisorClass d(g, n);
    d.set_psi(1);
    for (int s = 2; s <= n; ++s) d.add_boundary(0, s, -s);
    return d;
  }
  if (name == "kappa1_pullback") {
    DivisorClass d(g, n);
    d.set_lambda(12).set_psi(n > 0 ? 1 : 0).set_delta_irr(-1);
    for (const auto& b : boundary_indices(g, n)) d.set_boundary(b.i, b.s, -1);
    return d;
  }
  if (name == "ngn_pullback") {
    need_points();
    return DivisorClass(g, n).set_psi(1);
  }
  if (name == "weierstrass_pullback") {
    need_points();
    return symmetrized_forgetful_pullback(g, n, weierstrass_pointed(g));
  }
  if (name == "bn_divisor_pullback") {
    DivisorClass d(g, n);
    d.set_lambda(g + 3).set_delta_irr(-Rational(g + 1, 6));
    for (const auto& b : boundary_indices(g, n))
      if (b.i >= 1) d.set_boundary(b.i, b.s, -(b.i * (g - b.i)));
    return d;
  }
  throw input_error("unknown named class: " + std::string(name));
}

/// Average over j of the pushforward under the map forgetting x_j of
/// F . delta_{0:{j,n+1}}, for a class given on M_{g,n+1}.
///
/// Restriction to delta_{0:{j,n+1}} (a copy of M_{g,n} with the attaching
/// point relabelled j): lambda, delta_irr fixed; psi_k fixed for k outside
/// {j, n+1}; psi_j, psi_{n+1} -> 0; delta_{0:{j,n+1}} -> -psi_j; delta_{0:T}
/// -> delta_{0:T} for T disjoint from {j, n+1}, -> delta_{0:T - {n+1}} for T
/// containing both, -> 0 for T containing exactly one. Summation runs over
/// j = 1..n; the j = n+1 term names no divisor.
inline DivisorClass boundary_restriction_pushforward(const DivisorClass& f) {
  const int g = f.genus(), big_n = f.points(), n = big_n - 1;
  require(n >= 1, "boundary_restriction_pushforward: need at least two points");
  for (const auto& [b, v] : f.boundary())
    if (b.i != 0)
      throw rule_error("restriction rule table cannot resolve " + label(b) + " (coefficient " + v.str() + ")");
  DivisorClass e(g, n, Completeness::partial_rule_derived);
  const Rational w = Rational(1, n + 1);
  const Rational b2 = -f.boundary(0, 2);
  e.set_lambda(w * Rational(n) * f.lambda());
  e.set_psi(w * (Rational(n - 1) * f.psi() + b2));
  e.set_delta_irr(w * Rational(n) * f.delta_irr());
  for (int t = 2; t <= n; ++t) {
    Rational coeff = Rational(n - t) * f.boundary(0, t) + Rational(t) * f.boundary(0, t + 1);
    e.add_boundary(0, t, w * coeff);
  }
  return e;
}

/// E-class used for g - n odd: built from F_{g,m} on M_{g,n+1}, m = (g-n-1)/2.
inline DivisorClass e_class_odd(int g, int n) {
  require(n >= 1 && (g - n) % 2 != 0 && g - n >= 3, "e_class_odd: need g - n odd and >= 3");
  return boundary_restriction_pushforward(f_class(g, (g - n - 1) / 2));
}

/// Names accepted on the command line.
inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"K", "Ksym", "antram", "F", "psi_tilde",
                                              "kappa1", "N", "weierstrass", "BN", "E_odd"};
  return names;
}

/// Looks up a catalog class by its stable name. Classes parametrized by m
/// (F) take it from `m`; antram forces n = g - 1.
inline DivisorClass catalog_class(std::string_view name, int g, std::optional<int> n, std::optional<int> m) {
  auto need_n = [&] {
    require(n.has_value(), std::string(name) + " needs --n");
    return *n;
  };
  if (name == "K") return canonical_class(g, need_n());
  if (name == "Ksym") return symquot_canonical_pullback(g, need_n());
  if (name == "antram") {
    require(!n || *n == g - 1, "antram lives on M_{g,g-1}");
    return antram(g);
  }
  if (name == "F") {
    if (m) return f_class(g, *m);
    int nn = need_n();
    require((g - nn) % 2 == 0, "F needs g - n even");
    return f_class(g, (g - nn) / 2);
  }
  if (name == "psi_tilde") return named_class("psi_tilde_pullback", g, need_n());
  if (name == "kappa1") return named_class("kappa1_pullback", g, need_n());
  if (name == "N") return named_class("ngn_pullback", g, need_n());
  if (name == "weierstrass") return named_class("weierstrass_pullback", g, need_n());
  if (name == "BN") return named_class("bn_divisor_pullback", g, need_n());
  if (name == "E_odd") return e_class_odd(g, need_n());
  throw input_error("unknown catalog class: " + std::string(name));
}

}  // namespace mgn
