#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mgn/catalog.hpp"
#include "mgn/divisor.hpp"

/// Polynomials in theta and x on C_d, the d-th symmetric product of a general
/// genus-g curve, d = g - 2m.
namespace mgn::symprod {

/// Homogeneous polynomial of the given degree; coeff[k] multiplies
/// x^k theta^(degree - k).
struct SymProdPoly {
  int g = 0;
  int m = 0;
  int degree = 0;
  std::map<int, Rational> coeff;

  int dim() const { return g - 2 * m; }

  SymProdPoly& add(int k, const Rational& c) {
    require(k >= 0 && k <= degree, "x power outside 0..degree");
    if (c.is_zero()) return *this;
    auto& slot = coeff[k];
    slot += c;
    if (slot.is_zero()) coeff.erase(k);
    return *this;
  }
  Rational at(int k) const {
    auto it = coeff.find(k);
    return it == coeff.end() ? Rational(0) : it->second;
  }

  SymProdPoly& operator+=(const SymProdPoly& o) {
    check(o);
    require(degree == o.degree, "adding polynomials of different degrees");
    for (const auto& [k, c] : o.coeff) add(k, c);
    return *this;
  }
  SymProdPoly& operator*=(const Rational& r) {
    if (r.is_zero()) coeff.clear();
    for (auto& [k, c] : coeff) c *= r;
    return *this;
  }
  friend SymProdPoly operator+(SymProdPoly a, const SymProdPoly& b) { return a += b; }
  friend SymProdPoly operator*(SymProdPoly a, const Rational& r) { return a *= r; }
  friend SymProdPoly operator*(const Rational& r, SymProdPoly a) { return a *= r; }
  friend SymProdPoly operator*(const SymProdPoly& a, const SymProdPoly& b) {
    a.check(b);
    SymProdPoly out{a.g, a.m, a.degree + b.degree, {}};
    require(out.degree <= a.dim(), "product exceeds the dimension of the symmetric product");
    for (const auto& [i, ci] : a.coeff)
      for (const auto& [j, cj] : b.coeff) out.add(i + j, ci * cj);
    return out;
  }
  friend bool operator==(const SymProdPoly&, const SymProdPoly&) = default;

  void check(const SymProdPoly& o) const {
    if (g != o.g || m != o.m) throw input_error("polynomials on different symmetric products");
  }
};

inline void check_range(int g, int m) {
  require(m >= 1 && 2 * m < g, "symmetric product: need 1 <= m < g/2");
}

/// x^k theta^(g-2m-k) = g!/(2m+k)!.
inline Rational eval_monomial(int g, int m, int k) {
  check_range(g, m);
  require(k >= 0 && k <= g - 2 * m, "eval_monomial: need 0 <= k <= g-2m");
  return factorial(g) / factorial(2 * m + k);
}

/// Degree of a top-degree polynomial.
inline Rational evaluate(const SymProdPoly& p) {
  require(p.degree == p.dim(), "evaluate: polynomial is not of top degree");
  Rational total(0);
  for (const auto& [k, c] : p.coeff) total += c * eval_monomial(p.g, p.m, k);
  return total;
}

inline SymProdPoly linear(int g, int m, const Rational& theta, const Rational& x) {
  check_range(g, m);
  SymProdPoly p{g, m, 1, {}};
  return p.add(0, theta).add(1, x);
}

/// Diagonal of C_d in theta, x: -theta + (2g - 2m - 1) x.
inline SymProdPoly diagonal(int g, int m) { return linear(g, m, -1, 2 * g - 2 * m - 1); }

/// Pullback of the symmetrized psi: theta + delta_C + (2m - 1) x.
inline SymProdPoly psi_tilde_pull(int g, int m) {
  return linear(g, m, 1, 2 * m - 1) + diagonal(g, m);
}

inline SymProdPoly delta02_pull(int g, int m) { return diagonal(g, m); }

/// (1 - 2m/g) C(g, m) (theta - g/(g - 2m) x).
inline SymProdPoly f_restricted(int g, int m) {
  check_range(g, m);
  Rational lead = (Rational(1) - Rational(2 * m, g)) * binomial(g, m);
  return linear(g, m, lead, -lead * Rational(g, g - 2 * m));
}

/// Class of the secant locus: sum_j C(-m-1, j) x^j theta^(d-1-j) / (d-1-j)!.
inline SymProdPoly secant_porteous(int g, int m) {
  check_range(g, m);
  const int d = g - 2 * m;
  SymProdPoly p{g, m, d - 1, {}};
  for (int j = 0; j <= d - 1; ++j) p.add(j, binomial(-m - 1, j) / factorial(d - 1 - j));
  return p;
}

inline const std::vector<std::string>& cd_class_names() {
  static const std::vector<std::string> names{"F_restricted", "diagonal", "psi_tilde_pull", "delta02_pull",
                                              "secant_porteous"};
  return names;
}

inline SymProdPoly cd_class(std::string_view name, int g, int m) {
  if (name == "F_restricted") return f_restricted(g, m);
  if (name == "diagonal") return diagonal(g, m);
  if (name == "psi_tilde_pull") return psi_tilde_pull(g, m);
  if (name == "delta02_pull") return delta02_pull(g, m);
  if (name == "secant_porteous") return secant_porteous(g, m);
  throw input_error("unknown symmetric-product class: " + std::string(name));
}

struct Extremal {
  Rational pairing;      // F_restricted . secant, by evaluation
  Rational closed_form;  // (m - 1) C(g - m - 2, m) C(g, m)
  bool extension_used = false;  // C(g-m-2, m) with upper index below lower
};

inline Extremal extremal_intersection(int g, int m) {
  check_range(g, m);
  Extremal e;
  e.pairing = evaluate(f_restricted(g, m) * secant_porteous(g, m));
  e.extension_used = g - m - 2 < m;
  e.closed_form = Rational(m - 1) * binomial(g - m - 2, m) * binomial(g, m);
  return e;
}

struct PullbackCheck {
  SymProdPoly descended;  // u-pullback of the class read off f_class
  SymProdPoly expected;   // f_restricted
  bool equal = false;
  bool numeric = false;  // compared by degree on C_1, where theta = g x
};

/// Writes F_{g,m} on the symmetric quotient as c psi~ + (2c - b02) delta~_{0:2}
/// (the remaining generators restrict to zero on the open locus), pulls back
/// and compares with f_restricted.
inline PullbackCheck pullback_consistency(int g, int m) {
  check_range(g, m);
  const DivisorClass f = f_class(g, m);
  const ClassSummary s = summarize(f);
  PullbackCheck r;
  r.descended = s.c * psi_tilde_pull(g, m) + (Rational(2) * s.c - s.b02) * delta02_pull(g, m);
  r.expected = f_restricted(g, m);
  if (g - 2 * m == 1) {
    r.numeric = true;
    r.equal = evaluate(r.descended) == evaluate(r.expected);
  } else {
    r.equal = r.descended == r.expected;
  }
  return r;
}

inline json to_json(const SymProdPoly& p) {
  json j;
  j["g"] = p.g;
  j["m"] = p.m;
  j["degree"] = p.degree;
  json terms = json::array();
  for (const auto& [k, c] : p.coeff) terms.push_back({{"x_pow", k}, {"coeff", c.str()}});
  j["terms"] = std::move(terms);
  return j;
}

inline SymProdPoly poly_from_json(const json& j) {
  SymProdPoly p{j.at("g").get<int>(), j.at("m").get<int>(), j.value("degree", 1), {}};
  for (const auto& t : j.at("terms")) p.add(t.at("x_pow").get<int>(), Rational::parse(t.at("coeff").get<std::string>()));
  return p;
}

/// "10*theta - 12*x", highest theta power first.
inline std::string to_text(const SymProdPoly& p) {
  if (p.coeff.empty()) return "0";
  auto mono = [&](int k) {
    std::string out;
    auto power = [](const char* var, int e) {
      return e == 0 ? std::string() : e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
    };
    std::string t = power("theta", p.degree - k), x = power("x", k);
    out = t;
    if (!t.empty() && !x.empty()) out += "*";
    out += x;
    return out;
  };
  std::string out;
  for (const auto& [k, c] : p.coeff) {
    std::string mag = abs(c).str(), m = mono(k);
    std::string term = m.empty() ? mag : (mag == "1" ? m : mag + "*" + m);
    if (out.empty()) out = (c.sign() < 0 ? "-" : "") + term;
    else out += (c.sign() < 0 ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace mgn::symprod
