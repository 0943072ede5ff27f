#pragma once

#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgn/catalog.hpp"
#include "mgn/divisor.hpp"
#include "mgn/simplex.hpp"

namespace mgn::cone {

// ---- slopes ----------------------------------------------------------------

struct SlopeEntry {
  Rational value;
  std::string source;
};

/// Best slope bound used for each genus: the Brill-Noether value 6 + 12/(g+1)
/// unless a better divisor is known.
class SlopeRegistry {
 public:
  SlopeRegistry() {
    overrides_[12] = {Rational(4415, 642), "override: Koszul divisor"};
    overrides_[16] = {Rational(407, 61), "override: Koszul divisor"};
    overrides_[18] = {Rational(302, 45), "override: Gieseker-Petri divisor"};
  }

  static Rational default_slope(int g) { return Rational(6) + Rational(12, g + 1); }

  SlopeEntry entry(int g) const {
    require(g >= 2, "slope registry: need g >= 2");
    auto it = overrides_.find(g);
    if (it != overrides_.end()) return it->second;
    return {default_slope(g), "default: 6+12/(g+1)"};
  }
  Rational slope(int g) const { return entry(g).value; }
  bool has_override(int g) const { return overrides_.count(g) != 0; }
  const std::map<int, SlopeEntry>& overrides() const { return overrides_; }

 private:
  std::map<int, SlopeEntry> overrides_;
};

inline const SlopeRegistry& registry() {
  static const SlopeRegistry r;
  return r;
}

/// (84g - 185)/(12g - 25).
inline Rational theta_threshold(int g) {
  require(g >= 3, "theta_threshold: need g >= 3");
  return Rational(84L * g - 185, 12L * g - 25);
}

struct Conditions {
  bool cond1 = false;  // (a + s(2c - b_irr)) / (13c) < 1
  bool cond2 = false;  // b02 / (3c) > 1
  bool cond_necessary = false;
  Rational cond1_value, cond2_value;
};

inline Conditions sufficient_conditions(const ClassSummary& s, const Rational& slope) {
  if (s.c.sign() <= 0) throw input_error("sufficient_conditions: need c > 0 (got " + s.c.str() + ")");
  Conditions r;
  r.cond1_value = (s.a + slope * (Rational(2) * s.c - s.b_irr)) / (Rational(13) * s.c);
  r.cond2_value = s.b02 / (Rational(3) * s.c);
  r.cond1 = r.cond1_value < Rational(1);
  r.cond2 = r.cond2_value > Rational(1);
  r.cond_necessary = r.cond2;
  return r;
}

// ---- cone membership --------------------------------------------------------

enum class Constraint { strict_positive, nonnegative };

inline const char* to_string(Constraint c) { return c == Constraint::strict_positive ? "strict-positive" : "nonnegative"; }

struct Generator {
  std::string label;
  DivisorClass cls;
  Constraint constraint = Constraint::nonnegative;
};

struct ConeCertificate {
  DivisorClass target;
  std::vector<Coordinate> coords;  // coordinates the membership is decided in
  std::vector<Generator> generators;
  bool feasible = false;
  std::vector<Rational> multipliers;  // aligned with generators, when feasible
  std::vector<Rational> witness;      // aligned with coords, when infeasible
  std::vector<std::string> notes;

  explicit ConeCertificate(DivisorClass t) : target(std::move(t)) {}
};

namespace detail {

inline std::vector<Rational> project(const DivisorClass& d, const std::vector<Coordinate>& coords) {
  std::vector<Rational> v;
  v.reserve(coords.size());
  for (const auto& c : coords) v.push_back(coordinate_value(d, c));
  return v;
}

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational r(0);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero() && !b[k].is_zero()) r += a[k] * b[k];
  return r;
}

}  // namespace detail

/// Searches y with y.v >= 0 on every generator, y.t <= 0, and
/// sum_{strict} y.v_s - y.t = 1: a functional separating the target from the
/// cone with its strict part. Minimizes sum |y_j| for a sparse witness.
inline std::optional<std::vector<Rational>> find_witness(const DivisorClass& target,
                                                         const std::vector<Generator>& gens,
                                                         const std::vector<Coordinate>& coords) {
  const std::size_t d = coords.size(), k = gens.size();
  const auto t = detail::project(target, coords);
  std::vector<std::vector<Rational>> v;
  for (const auto& g : gens) v.push_back(detail::project(g.cls, coords));
  // Variables: y+ (d), y- (d), slack per generator (k), slack for target (1).
  const std::size_t nv = 2 * d + k + 1;
  lp::Matrix a;
  std::vector<Rational> b;
  for (std::size_t q = 0; q < k; ++q) {
    std::vector<Rational> row(nv);
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = v[q][j];
      row[d + j] = -v[q][j];
    }
    row[2 * d + q] = Rational(-1);
    a.push_back(std::move(row));
    b.emplace_back(0);
  }
  {
    std::vector<Rational> row(nv);
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = -t[j];
      row[d + j] = t[j];
    }
    row[2 * d + k] = Rational(-1);
    a.push_back(std::move(row));
    b.emplace_back(0);
  }
  {
    std::vector<Rational> row(nv);
    for (std::size_t j = 0; j < d; ++j) {
      Rational w = -t[j];
      for (std::size_t q = 0; q < k; ++q)
        if (gens[q].constraint == Constraint::strict_positive) w += v[q][j];
      row[j] = w;
      row[d + j] = -w;
    }
    a.push_back(std::move(row));
    b.emplace_back(1);
  }
  std::vector<Rational> cost(nv);
  for (std::size_t j = 0; j < 2 * d; ++j) cost[j] = Rational(-1);
  auto res = lp::maximize(a, b, cost);
  if (res.status != lp::Status::optimal) return std::nullopt;
  std::vector<Rational> y(d);
  for (std::size_t j = 0; j < d; ++j) y[j] = res.x[j] - res.x[d + j];
  return y;
}

/// Decides target in Q_{>0}<strict> + Q_{>=0}<nonnegative>, restricted to the
/// given coordinates (all coordinates when empty). Strict multipliers are
/// written eps + nu with eps <= 1, and eps is maximized; membership holds iff
/// the optimum is positive. When there are no strict generators, plain
/// feasibility decides.
inline ConeCertificate cone_feasible(const DivisorClass& target, const std::vector<Generator>& gens,
                                     std::vector<Coordinate> coords = {}) {
  const int g = target.genus(), n = target.points();
  if (target.is_partial()) throw input_error("cone_feasible: target class is partial");
  for (const auto& gen : gens) {
    if (gen.cls.genus() != g || gen.cls.points() != n)
      throw input_error("cone_feasible: generator " + gen.label + " lives on a different space");
    if (gen.cls.is_partial()) throw input_error("cone_feasible: generator " + gen.label + " is partial");
  }
  if (coords.empty()) coords = coordinates(g, n);
  ConeCertificate cert(target);
  cert.coords = coords;
  cert.generators = gens;

  const std::size_t d = coords.size(), k = gens.size();
  const auto t = detail::project(target, coords);
  bool any_strict = false;
  for (const auto& gen : gens) any_strict |= gen.constraint == Constraint::strict_positive;

  // Variables: eps, one per generator, cap slack.
  const std::size_t nv = k + 2;
  lp::Matrix a(d, std::vector<Rational>(nv));
  std::vector<Rational> b(t);
  for (std::size_t q = 0; q < k; ++q) {
    const auto v = detail::project(gens[q].cls, coords);
    for (std::size_t j = 0; j < d; ++j) {
      if (v[j].is_zero()) continue;
      a[j][1 + q] = v[j];
      if (gens[q].constraint == Constraint::strict_positive) a[j][0] += v[j];
    }
  }
  std::vector<Rational> cap(nv);
  cap[0] = Rational(1);
  cap[k + 1] = Rational(1);
  a.push_back(cap);
  b.emplace_back(1);
  std::vector<Rational> cost(nv);
  if (any_strict) cost[0] = Rational(1);

  auto res = lp::maximize(a, b, cost);
  if (res.status == lp::Status::optimal && (!any_strict || res.x[0].sign() > 0)) {
    cert.feasible = true;
    cert.multipliers.resize(k);
    for (std::size_t q = 0; q < k; ++q)
      cert.multipliers[q] = res.x[1 + q] + (gens[q].constraint == Constraint::strict_positive ? res.x[0] : Rational(0));
    return cert;
  }
  if (res.status == lp::Status::optimal)
    cert.notes.push_back("target lies on the closed cone but every strict multiplier is forced to 0");
  if (auto y = find_witness(target, gens, coords)) cert.witness = std::move(*y);
  else cert.notes.push_back("no separating functional found");
  return cert;
}

/// Independent check of a certificate: exact reconstruction and sign
/// constraints when feasible, separation when infeasible. Returns the list of
/// failures.
inline std::vector<std::string> verify_certificate(const ConeCertificate& cert) {
  std::vector<std::string> bad;
  const auto t = detail::project(cert.target, cert.coords);
  if (cert.feasible) {
    if (cert.multipliers.size() != cert.generators.size()) return {"multiplier count mismatch"};
    DivisorClass sum(cert.target.genus(), cert.target.points());
    for (std::size_t q = 0; q < cert.generators.size(); ++q) {
      const auto& m = cert.multipliers[q];
      const auto& gen = cert.generators[q];
      if (m.sign() < 0) bad.push_back(gen.label + ": negative multiplier " + m.str());
      if (gen.constraint == Constraint::strict_positive && m.sign() <= 0)
        bad.push_back(gen.label + ": strict multiplier is not positive");
      sum += gen.cls * m;
    }
    for (const auto& c : cert.coords)
      if (coordinate_value(sum, c) != coordinate_value(cert.target, c))
        bad.push_back("reconstruction differs at " + label(c) + ": " + coordinate_value(sum, c).str() + " vs " +
                      coordinate_value(cert.target, c).str());
    return bad;
  }
  if (cert.witness.size() != cert.coords.size()) return {"infeasible certificate without a witness"};
  Rational strict_sum(0);
  for (const auto& gen : cert.generators) {
    Rational val = detail::dot(cert.witness, detail::project(gen.cls, cert.coords));
    if (val.sign() < 0) bad.push_back("witness is negative on " + gen.label);
    if (gen.constraint == Constraint::strict_positive) strict_sum += val;
  }
  Rational tv = detail::dot(cert.witness, t);
  if (tv.sign() > 0) bad.push_back("witness is positive on the target");
  if ((strict_sum - tv).sign() <= 0) bad.push_back("witness does not separate strictly");
  return bad;
}

inline json to_json(const ConeCertificate& c) {
  json j;
  j["target"] = to_json(c.target);
  j["verdict"] = c.feasible ? "feasible" : "infeasible";
  json coords = json::array();
  for (const auto& co : c.coords) coords.push_back(label(co));
  j["coordinates"] = std::move(coords);
  json gens = json::array();
  for (std::size_t q = 0; q < c.generators.size(); ++q) {
    json e{{"label", c.generators[q].label}, {"constraint", to_string(c.generators[q].constraint)}};
    if (c.feasible) e["multiplier"] = c.multipliers[q].str();
    gens.push_back(std::move(e));
  }
  j["generators"] = std::move(gens);
  if (c.feasible) {
    json m;
    for (std::size_t q = 0; q < c.generators.size(); ++q) m[c.generators[q].label] = c.multipliers[q].str();
    j["multipliers"] = std::move(m);
  } else if (!c.witness.empty()) {
    json w;
    for (std::size_t k = 0; k < c.coords.size(); ++k)
      if (!c.witness[k].is_zero()) w[label(c.coords[k])] = c.witness[k].str();
    j["witness"] = std::move(w);
  }
  if (!c.notes.empty()) j["notes"] = c.notes;
  return j;
}

// ---- canonical class certificates -------------------------------------------

enum class Mode { restricted, full };

inline const char* to_string(Mode m) { return m == Mode::restricted ? "restricted" : "full"; }

/// Residual of the explicit combination
/// K - (1/(6g-11)) ((3/2) A - (12g-25) D - sum psi - ((84g-185) - (12g-25) s) lambda),
/// with K the pulled-back canonical class of the symmetric quotient, A the
/// antiramification class and D the slope-s Brill-Noether-profile divisor.
inline DivisorClass explicit_residual(int g, const Rational& slope) {
  require(g >= 5, "explicit_residual: need g >= 5");
  const int n = g - 1;
  DivisorClass inner = antram(g) * Rational(3, 2);
  inner -= slope_divisor_pullback(g, n, slope) * Rational(12L * g - 25);
  inner -= DivisorClass(g, n).set_psi(1);
  inner -= DivisorClass(g, n).set_lambda(Rational(84L * g - 185) - Rational(12L * g - 25) * slope);
  return symquot_canonical_pullback(g, n) - inner * Rational(1, 6L * g - 11);
}

inline std::vector<Coordinate> restricted_coordinates() {
  return {{Coordinate::lambda}, {Coordinate::psi}, {Coordinate::delta_irr}, {Coordinate::boundary, {0, 2}}};
}

struct ThetaCertificate {
  ConeCertificate cert;
  Mode mode;
  Rational slope, threshold;
  DivisorClass residual;
  std::vector<std::string> violated;  // full mode, infeasible: support of the witness
};

/// Bigness certificate for the canonical class of the symmetric quotient of
/// M_{g,g-1}.
///
/// restricted: coordinates (lambda, psi, delta_irr, delta_{0:2}); generators
/// sum psi and lambda (both strict), antram, the slope divisor and delta_irr.
/// full: every coordinate; generators sum psi (strict), lambda, antram, the
/// slope divisor, delta_irr and every boundary divisor.
inline ThetaCertificate certify_theta(int g, const Rational& slope, Mode mode) {
  require(g >= 5, "certify_theta: need g >= 5");
  const int n = g - 1;
  const DivisorClass target = symquot_canonical_pullback(g, n);
  std::vector<Generator> gens{
      {"sum_psi", DivisorClass(g, n).set_psi(1), Constraint::strict_positive},
      {"lambda", DivisorClass(g, n).set_lambda(1),
       mode == Mode::restricted ? Constraint::strict_positive : Constraint::nonnegative},
      {"antram", antram(g), Constraint::nonnegative},
      {"slope_divisor", slope_divisor_pullback(g, n, slope), Constraint::nonnegative},
      {"delta_irr", DivisorClass(g, n).set_delta_irr(1), Constraint::nonnegative},
  };
  std::vector<Coordinate> coords;
  if (mode == Mode::restricted) {
    coords = restricted_coordinates();
  } else {
    for (const auto& b : boundary_indices(g, n)) gens.push_back({label(b), unit_class(g, n, {Coordinate::boundary, b})});
  }
  ThetaCertificate out{cone_feasible(target, gens, coords), mode, slope, theta_threshold(g), explicit_residual(g, slope), {}};
  if (!out.cert.feasible) {
    if (slope == out.threshold) out.cert.notes.push_back("slope equals the threshold: boundary equality is infeasible");
    for (std::size_t k = 0; k < out.cert.witness.size(); ++k)
      if (!out.cert.witness[k].is_zero()) out.violated.push_back(label(out.cert.coords[k]));
  }
  return out;
}

inline json to_json(const ThetaCertificate& t) {
  json j = to_json(t.cert);
  j["mode"] = to_string(t.mode);
  j["slope"] = t.slope.str();
  j["threshold"] = t.threshold.str();
  j["slope_below_threshold"] = t.slope < t.threshold;
  j["explicit_residual"] = to_json(t.residual);
  if (!t.violated.empty()) j["obstructing_coordinates"] = t.violated;
  return j;
}

/// sum psi on M_{g,n} as kappa1 (strict) + Weierstrass + boundary.
inline ConeCertificate ngn_bigness(int g, int n) {
  require(g >= 3 && n >= 1 && n <= g - 1, "ngn_bigness: need g >= 3 and 1 <= n <= g-1");
  std::vector<Generator> gens{
      {"kappa1", named_class("kappa1_pullback", g, n), Constraint::strict_positive},
      {"weierstrass", named_class("weierstrass_pullback", g, n), Constraint::nonnegative},
      {"delta_irr", DivisorClass(g, n).set_delta_irr(1), Constraint::nonnegative},
  };
  for (const auto& b : boundary_indices(g, n)) gens.push_back({label(b), unit_class(g, n, {Coordinate::boundary, b})});
  return cone_feasible(named_class("ngn_pullback", g, n), gens);
}

// ---- general-type table -----------------------------------------------------

/// Smallest n for which the table claims general type, g = 12..21.
inline int table_f(int g) {
  static const std::map<int, int> f{{12, 10}, {13, 11}, {14, 10}, {15, 10}, {16, 9},
                                    {17, 9},  {18, 9},  {19, 7},  {20, 6},  {21, 4}};
  auto it = f.find(g);
  if (it == f.end()) throw input_error("general-type table covers 12 <= g <= 21 only");
  return it->second;
}

struct TableRow {
  int g = 0, n = 0;
  std::string parity;  // "even" | "odd"
  std::string source;  // class the conditions were evaluated on
  std::optional<ClassSummary> summary;
  Rational slope;
  std::optional<Conditions> conditions;
  std::string verdict;  // pass | fail | diagnostic-pass | diagnostic-fail | diagnostic-only
  bool asserted() const { return verdict == "pass" || verdict == "fail"; }
};

inline TableRow table_row(int g, int n) {
  TableRow row;
  row.g = g;
  row.n = n;
  row.parity = (g - n) % 2 == 0 ? "even" : "odd";
  row.slope = registry().slope(g);
  bool diagnostic = false;
  try {
    DivisorClass cls = [&] {
      if (n == g - 1) {
        row.source = "antram";
        return antram(g);
      }
      if ((g - n) % 2 == 0) {
        row.source = "F_" + std::to_string((g - n) / 2);
        return f_class(g, (g - n) / 2);
      }
      diagnostic = true;
      row.source = "E_odd";
      return e_class_odd(g, n);
    }();
    row.summary = summarize(cls);
    row.conditions = sufficient_conditions(*row.summary, row.slope);
    const bool ok = row.conditions->cond1 && row.conditions->cond2;
    row.verdict = std::string(diagnostic ? "diagnostic-" : "") + (ok ? "pass" : "fail");
  } catch (const std::exception&) {
    if (!diagnostic) throw;
    row.verdict = "diagnostic-only";
  }
  return row;
}

/// Rows for g_min <= g <= g_max and n_min (default f(g)) <= n <= g - 1.
inline std::vector<TableRow> fg_table(int g_min, int g_max, std::optional<int> n_min = std::nullopt) {
  require(12 <= g_min && g_min <= g_max && g_max <= 21, "fg_table: need 12 <= g_min <= g_max <= 21");
  std::vector<TableRow> rows;
  for (int g = g_min; g <= g_max; ++g) {
    const int lo = n_min ? std::max(1, *n_min) : table_f(g);
    for (int n = lo; n <= g - 1; ++n) rows.push_back(table_row(g, n));
  }
  return rows;
}

inline std::string table_csv(const std::vector<TableRow>& rows, bool decimal_hint = false) {
  std::string out = "g,n,parity,a,c,b_irr,b02,slope,cond1,cond2,verdict";
  if (decimal_hint) out += ",slope_approx";
  out += "\n";
  auto opt = [](const std::optional<ClassSummary>& s, Rational ClassSummary::*f) { return s ? (*s.*f).str() : ""; };
  for (const auto& r : rows) {
    out += std::to_string(r.g) + "," + std::to_string(r.n) + "," + r.parity + "," + opt(r.summary, &ClassSummary::a) +
           "," + opt(r.summary, &ClassSummary::c) + "," + opt(r.summary, &ClassSummary::b_irr) + "," +
           opt(r.summary, &ClassSummary::b02) + "," + r.slope.str() + "," +
           (r.conditions ? (r.conditions->cond1 ? "true" : "false") : "") + "," +
           (r.conditions ? (r.conditions->cond2 ? "true" : "false") : "") + "," + r.verdict;
    if (decimal_hint) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", r.slope.to_double());
      out += std::string(",") + buf;
    }
    out += "\n";
  }
  return out;
}

inline json table_json(const std::vector<TableRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j{{"g", r.g}, {"n", r.n}, {"parity", r.parity}, {"class", r.source}};
    if (r.summary) {
      j["a"] = r.summary->a.str();
      j["c"] = r.summary->c.str();
      j["b_irr"] = r.summary->b_irr.str();
      j["b02"] = r.summary->b02.str();
    }
    j["slope"] = r.slope.str();
    if (r.conditions) {
      j["cond1"] = r.conditions->cond1;
      j["cond2"] = r.conditions->cond2;
      j["cond1_value"] = r.conditions->cond1_value.str();
      j["cond2_value"] = r.conditions->cond2_value.str();
    }
    j["verdict"] = r.verdict;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace mgn::cone
