#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mgn/errors.hpp"
#include "mgn/rational.hpp"

namespace mgn {

using json = nlohmann::ordered_json;

/// Boundary divisor delta_{i:s}: reducible curves with a genus-i component
/// carrying s marked points. Only canonical representatives are stored.
struct BoundaryIndex {
  int i = 0;
  int s = 0;
  friend auto operator<=>(const BoundaryIndex&, const BoundaryIndex&) = default;
};

inline std::string label(const BoundaryIndex& b) {
  return "delta_" + std::to_string(b.i) + ":" + std::to_string(b.s);
}

namespace detail {
inline bool vanishes(int g, int n, int i, int s) {
  return i > g || s > n || (i == 0 && s < 2);
}
}  // namespace detail

/// Applies delta_{i:s} = delta_{g-i:n-s} and the vanishing conventions.
/// Returns nullopt when the index names the zero class.
inline std::optional<BoundaryIndex> canonicalize_index(int g, int n, int i, int s) {
  require(g >= 3 && n >= 0, "canonicalize_index: need g >= 3 and n >= 0");
  require(i >= 0 && s >= 0, "canonicalize_index: negative boundary index");
  if (detail::vanishes(g, n, i, s)) return std::nullopt;
  int pi = g - i, ps = n - s;
  if (detail::vanishes(g, n, pi, ps)) return std::nullopt;
  BoundaryIndex a{i, s}, b{pi, ps};
  return std::min(a, b);
}

/// Every canonical boundary index of the n-pointed genus-g moduli space.
inline std::vector<BoundaryIndex> boundary_indices(int g, int n) {
  std::set<BoundaryIndex> out;
  for (int i = 0; i <= g; ++i)
    for (int s = 0; s <= n; ++s)
      if (auto b = canonicalize_index(g, n, i, s)) out.insert(*b);
  return {out.begin(), out.end()};
}

/// Which coefficients of a class are actually known.
enum class Completeness {
  full,
  partial,              // genus >= 1 boundary coefficients not populated
  partial_rule_derived  // partial, and obtained from an uncited rule table
};

inline const char* to_string(Completeness c) {
  switch (c) {
    case Completeness::full: return "full";
    case Completeness::partial: return "partial";
    case Completeness::partial_rule_derived: return "partial, rule-derived";
  }
  return "?";
}

/// S_n-invariant divisor class on the n-pointed genus-g moduli space, in the
/// basis lambda, sum psi_i, delta_irr, delta_{i:s}. Coefficients are signed:
/// a class written a*lambda - b*delta_irr stores dirr = -b.
class DivisorClass {
 public:
  DivisorClass(int g, int n, Completeness c = Completeness::full) : g_(g), n_(n), completeness_(c) {
    require(g >= 3 && n >= 0, "DivisorClass: need g >= 3 and n >= 0");
  }

  int genus() const { return g_; }
  int points() const { return n_; }
  Completeness completeness() const { return completeness_; }
  bool is_partial() const { return completeness_ != Completeness::full; }

  const Rational& lambda() const { return lam_; }
  const Rational& psi() const { return psi_; }
  const Rational& delta_irr() const { return dirr_; }
  const std::map<BoundaryIndex, Rational>& boundary() const { return boundary_; }

  /// Coefficient of delta_{i:s}, after canonicalization. Zero indices read 0.
  Rational boundary(int i, int s) const {
    auto b = canonicalize_index(g_, n_, i, s);
    if (!b) return Rational(0);
    auto it = boundary_.find(*b);
    return it == boundary_.end() ? Rational(0) : it->second;
  }

  DivisorClass& set_lambda(Rational v) { lam_ = std::move(v); return *this; }
  DivisorClass& set_psi(Rational v) { psi_ = std::move(v); return *this; }
  DivisorClass& set_delta_irr(Rational v) { dirr_ = std::move(v); return *this; }
  DivisorClass& set_completeness(Completeness c) { completeness_ = c; return *this; }

  /// Adds v to delta_{i:s}; a Zero index absorbs the coefficient.
  DivisorClass& add_boundary(int i, int s, const Rational& v) {
    auto b = canonicalize_index(g_, n_, i, s);
    if (!b || v.is_zero()) return *this;
    auto& slot = boundary_[*b];
    slot += v;
    if (slot.is_zero()) boundary_.erase(*b);
    return *this;
  }

  DivisorClass& set_boundary(int i, int s, const Rational& v) {
    auto b = canonicalize_index(g_, n_, i, s);
    if (!b) return *this;
    if (v.is_zero()) boundary_.erase(*b);
    else boundary_[*b] = v;
    return *this;
  }

  bool is_zero() const {
    return lam_.is_zero() && psi_.is_zero() && dirr_.is_zero() && boundary_.empty();
  }

  DivisorClass& operator+=(const DivisorClass& o) {
    check_same_space(o);
    lam_ += o.lam_;
    psi_ += o.psi_;
    dirr_ += o.dirr_;
    for (const auto& [b, v] : o.boundary_) add_boundary(b.i, b.s, v);
    if (o.is_partial() && !is_partial()) completeness_ = o.completeness_;
    return *this;
  }
  DivisorClass& operator-=(const DivisorClass& o) { return *this += o * Rational(-1); }
  DivisorClass& operator*=(const Rational& k) {
    if (k.is_zero()) {
      lam_ = psi_ = dirr_ = Rational(0);
      boundary_.clear();
      return *this;
    }
    lam_ *= k;
    psi_ *= k;
    dirr_ *= k;
    for (auto& [b, v] : boundary_) v *= k;
    return *this;
  }

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(DivisorClass a, const Rational& k) { return a *= k; }
  friend DivisorClass operator*(const Rational& k, DivisorClass a) { return a *= k; }

  /// Equality of coefficients; the completeness flag is metadata.
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.g_ == b.g_ && a.n_ == b.n_ && a.lam_ == b.lam_ && a.psi_ == b.psi_ &&
           a.dirr_ == b.dirr_ && a.boundary_ == b.boundary_;
  }

  void check_same_space(const DivisorClass& o) const {
    if (g_ != o.g_ || n_ != o.n_)
      throw input_error("divisor classes live on different moduli spaces");
  }

 private:
  int g_;
  int n_;
  Completeness completeness_;
  Rational lam_, psi_, dirr_;
  std::map<BoundaryIndex, Rational> boundary_;
};

/// Coordinate of the lattice, used for LP rows and witness functionals.
struct Coordinate {
  enum Kind { lambda, psi, delta_irr, boundary } kind;
  BoundaryIndex index{};
  friend auto operator<=>(const Coordinate&, const Coordinate&) = default;
};

inline std::string label(const Coordinate& c) {
  switch (c.kind) {
    case Coordinate::lambda: return "lambda";
    case Coordinate::psi: return "psi";
    case Coordinate::delta_irr: return "delta_irr";
    case Coordinate::boundary: return label(c.index);
  }
  return "?";
}

inline Rational coordinate_value(const DivisorClass& d, const Coordinate& c) {
  switch (c.kind) {
    case Coordinate::lambda: return d.lambda();
    case Coordinate::psi: return d.psi();
    case Coordinate::delta_irr: return d.delta_irr();
    case Coordinate::boundary: return d.boundary(c.index.i, c.index.s);
  }
  return Rational(0);
}

/// All coordinates of the (g, n) lattice in canonical order.
inline std::vector<Coordinate> coordinates(int g, int n) {
  std::vector<Coordinate> out{{Coordinate::lambda}, {Coordinate::psi}, {Coordinate::delta_irr}};
  for (const auto& b : boundary_indices(g, n)) out.push_back({Coordinate::boundary, b});
  return out;
}

inline DivisorClass unit_class(int g, int n, const Coordinate& c) {
  DivisorClass d(g, n);
  switch (c.kind) {
    case Coordinate::lambda: d.set_lambda(1); break;
    case Coordinate::psi: d.set_psi(1); break;
    case Coordinate::delta_irr: d.set_delta_irr(1); break;
    case Coordinate::boundary: d.set_boundary(c.index.i, c.index.s, 1); break;
  }
  return d;
}

/// A one-parameter family, stored by its intersection numbers with the basis.
struct TestCurve {
  int g = 0;
  int n = 0;
  std::string label;
  Rational lam{}, psi_total{}, dirr{};
  std::map<BoundaryIndex, Rational> boundary{};

  TestCurve& with_boundary(int i, int s, const Rational& v) {
    if (auto b = canonicalize_index(g, n, i, s)) {
      boundary[*b] += v;
      if (boundary[*b].is_zero()) boundary.erase(*b);
    }
    return *this;
  }
};

/// Exact intersection number C . D.
inline Rational pair(const TestCurve& curve, const DivisorClass& cls) {
  if (curve.g != cls.genus() || curve.n != cls.points())
    throw input_error("pair: test curve " + curve.label + " and class live on different spaces");
  Rational r = curve.lam * cls.lambda() + curve.psi_total * cls.psi() + curve.dirr * cls.delta_irr();
  for (const auto& [b, v] : curve.boundary) {
    auto it = cls.boundary().find(b);
    if (it != cls.boundary().end()) r += v * it->second;
  }
  return r;
}

namespace curves {

/// Fibre of the map forgetting the last point over a general (n-1)-pointed curve.
inline TestCurve moving_point(int g, int n) {
  require(n >= 1, "moving_point curve needs n >= 1");
  TestCurve c{g, n, "C_x"};
  c.psi_total = Rational(2 * g - 2 + 2 * (n - 1));
  return c.with_boundary(0, 2, n - 1);
}

/// Genus g-1 curve with a point t glued to a fixed point q, t moving.
inline TestCurve irreducible_node(int g, int n) {
  TestCurve c{g, n, "C_irr"};
  c.psi_total = Rational(n);
  c.dirr = Rational(-(2 * g - 2));
  return c.with_boundary(1, 0, 1);
}

/// Pencil of plane cubics attached along a base-point section.
inline TestCurve elliptic_pencil(int g, int n) {
  TestCurve c{g, n, "ellpencil"};
  c.lam = Rational(1);
  c.dirr = Rational(12);
  return c.with_boundary(1, 0, -1);
}

/// Rational component carrying x_1..x_s with the attaching point moving on it.
inline TestCurve rational_tail(int g, int n, int s) {
  require(s >= 3 && s <= n, "rational_tail curve needs 3 <= s <= n");
  TestCurve c{g, n, "Gamma_0:" + std::to_string(s)};
  c.psi_total = Rational(s);
  c.with_boundary(0, s, -(s - 2));
  return c.with_boundary(0, s - 1, s);
}

}  // namespace curves

/// Class on the 1-pointed space: lam*lambda + psi*psi + dirr*delta_irr
/// + sum_j d[j] * delta_{j:1}, j = 1..g-1 (genus-j component holds the point).
struct PointedClass {
  Rational lam, psi, dirr;
  std::map<int, Rational> d;
};

/// sum_i sigma_i^* of a 1-pointed class, where sigma_i forgets all points but
/// the i-th. Pullback rules: lambda and delta_irr pull back to themselves,
/// psi to psi_i - sum_{T containing i} delta_{0:T}, and delta_{j:1} to
/// sum_{T containing i} delta_{j:T}. Summing over i counts each T once per
/// element, giving the factor s on delta_{j:s}.
inline DivisorClass symmetrized_forgetful_pullback(int g, int n, const PointedClass& w) {
  require(g >= 3 && n >= 1, "symmetrized_forgetful_pullback: need g >= 3 and n >= 1");
  DivisorClass out(g, n);
  out.set_lambda(w.lam * Rational(n));
  out.set_delta_irr(w.dirr * Rational(n));
  out.set_psi(w.psi);
  for (int s = 2; s <= n; ++s) out.add_boundary(0, s, -w.psi * Rational(s));
  for (const auto& [j, coeff] : w.d) {
    require(j >= 1 && j <= g - 1, "pointed class boundary index out of range");
    for (int s = 1; s <= n; ++s) out.add_boundary(j, s, coeff * Rational(s));
  }
  return out;
}

// ---- serialization ----------------------------------------------------------

inline json to_json(const DivisorClass& d) {
  json j;
  j["g"] = d.genus();
  j["n"] = d.points();
  j["lambda"] = d.lambda().str();
  j["psi"] = d.psi().str();
  j["delta_irr"] = d.delta_irr().str();
  json arr = json::array();
  for (const auto& [b, v] : d.boundary()) arr.push_back({{"i", b.i}, {"s", b.s}, {"coeff", v.str()}});
  j["boundary"] = std::move(arr);
  if (d.is_partial()) j["completeness"] = to_string(d.completeness());
  return j;
}

inline DivisorClass divisor_from_json(const json& j) {
  Completeness c = Completeness::full;
  if (j.contains("completeness")) {
    auto s = j.at("completeness").get<std::string>();
    if (s == "partial") c = Completeness::partial;
    else if (s == "partial, rule-derived") c = Completeness::partial_rule_derived;
    else if (s != "full") throw input_error("unknown completeness tag: " + s);
  }
  DivisorClass d(j.at("g").get<int>(), j.at("n").get<int>(), c);
  d.set_lambda(Rational::parse(j.at("lambda").get<std::string>()));
  d.set_psi(Rational::parse(j.at("psi").get<std::string>()));
  d.set_delta_irr(Rational::parse(j.at("delta_irr").get<std::string>()));
  for (const auto& e : j.at("boundary"))
    d.add_boundary(e.at("i").get<int>(), e.at("s").get<int>(), Rational::parse(e.at("coeff").get<std::string>()));
  return d;
}

/// Canonical compact JSON; byte-identical for equal classes.
inline std::string serialize(const DivisorClass& d) { return to_json(d).dump(); }

inline DivisorClass deserialize(const std::string& text) { return divisor_from_json(json::parse(text)); }

inline std::string to_text(const DivisorClass& d) {
  std::string out = "class on M_{" + std::to_string(d.genus()) + "," + std::to_string(d.points()) + "}";
  if (d.is_partial()) out += " [" + std::string(to_string(d.completeness())) + "]";
  out += "\n  lambda: " + d.lambda().str() + "\n  psi: " + d.psi().str() + "\n  delta_irr: " + d.delta_irr().str() + "\n";
  for (const auto& [b, v] : d.boundary()) out += "  " + label(b) + ": " + v.str() + "\n";
  return out;
}

}  // namespace mgn
