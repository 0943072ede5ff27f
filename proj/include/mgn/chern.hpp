#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mgn/errors.hpp"
#include "mgn/rational.hpp"

/// Graded rewriting engine for the Grothendieck-Riemann-Roch computations on
/// universal-curve total spaces and on products of a fixed curve.
namespace mgn::chern {

/// Relative position of a generator with respect to the space's projection.
enum class Role { base, fiber };

struct Generator {
  std::string name;
  int degree = 1;
  Role role = Role::base;
};

/// Sorted multiset of generator ids.
using Monomial = std::vector<std::uint16_t>;

inline constexpr int kMaxDegree = 3;

class ChernExpr;

/// A closed universe of generators together with an ordered relation table.
/// Immutable once built; expressions hold it by shared pointer.
class Space {
 public:
  explicit Space(std::string tag) : tag_(std::move(tag)) {}

  const std::string& tag() const { return tag_; }
  std::size_t size() const { return gens_.size(); }
  const Generator& generator(std::uint16_t id) const { return gens_.at(id); }

  std::uint16_t add_generator(std::string name, int degree, Role role) {
    if (index_.count(name)) throw std::logic_error("duplicate generator " + name);
    auto id = static_cast<std::uint16_t>(gens_.size());
    index_.emplace(name, id);
    gens_.push_back({std::move(name), degree, role});
    return id;
  }

  std::uint16_t id(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw input_error("space " + tag_ + " has no generator " + std::string(name));
    return it->second;
  }

  int degree(const Monomial& m) const {
    int d = 0;
    for (auto g : m) d += gens_.at(g).degree;
    return d;
  }

  std::string render(const Monomial& m) const {
    if (m.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k) out += "*";
      out += gens_.at(m[k]).name;
    }
    return out;
  }

  /// Registers pattern -> replacement. Earlier rules take priority when
  /// several patterns divide the same monomial.
  void add_rule(Monomial pattern, std::vector<std::pair<Monomial, Rational>> replacement) {
    std::sort(pattern.begin(), pattern.end());
    for (auto& [m, c] : replacement) std::sort(m.begin(), m.end());
    if (rules_.count(pattern)) throw std::logic_error("duplicate rule for " + render(pattern));
    rules_.emplace(pattern, Rule{next_priority_++, std::move(replacement)});
  }

  struct Rule {
    int priority;
    std::vector<std::pair<Monomial, Rational>> replacement;
  };

  /// Highest-priority rule whose pattern divides m, with the cofactor.
  std::optional<std::pair<const Rule*, Monomial>> match(const Monomial& m) const {
    const Rule* best = nullptr;
    Monomial best_rest;
    auto consider = [&](const Monomial& pattern, const Monomial& rest) {
      auto it = rules_.find(pattern);
      if (it == rules_.end()) return;
      if (!best || it->second.priority < best->priority) {
        best = &it->second;
        best_rest = rest;
      }
    };
    for (std::size_t a = 0; a < m.size(); ++a) {
      if (a > 0 && m[a] == m[a - 1]) continue;
      Monomial rest = m;
      rest.erase(rest.begin() + static_cast<long>(a));
      consider({m[a]}, rest);
      for (std::size_t b = a + 1; b < m.size(); ++b) {
        if (b > a + 1 && m[b] == m[b - 1]) continue;
        Monomial rest2 = m;
        rest2.erase(rest2.begin() + static_cast<long>(b));
        rest2.erase(rest2.begin() + static_cast<long>(a));
        consider({m[a], m[b]}, rest2);
      }
    }
    if (!best) return std::nullopt;
    return std::make_pair(best, best_rest);
  }

 private:
  std::string tag_;
  std::vector<Generator> gens_;
  std::unordered_map<std::string, std::uint16_t> index_;
  std::map<Monomial, Rule> rules_;
  int next_priority_ = 0;
};

inline Monomial merge(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Formal rational combination of monomials on a fixed space.
class ChernExpr {
 public:
  explicit ChernExpr(std::shared_ptr<const Space> space) : space_(std::move(space)) {}

  static ChernExpr constant(std::shared_ptr<const Space> space, const Rational& c) {
    ChernExpr e(std::move(space));
    e.add({}, c);
    return e;
  }
  static ChernExpr generator(std::shared_ptr<const Space> space, std::string_view name,
                             const Rational& c = Rational(1)) {
    ChernExpr e(space);
    e.add({space->id(name)}, c);
    return e;
  }

  const Space& space() const { return *space_; }
  const std::shared_ptr<const Space>& space_ptr() const { return space_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    Monomial k = m;
    std::sort(k.begin(), k.end());
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational coefficient(std::initializer_list<std::string_view> names) const {
    Monomial m;
    for (auto n : names) m.push_back(space_->id(n));
    return coefficient(m);
  }

  void add(Monomial m, const Rational& c) {
    if (c.is_zero()) return;
    std::sort(m.begin(), m.end());
    auto& slot = terms_[m];
    slot += c;
    if (slot.is_zero()) terms_.erase(m);
  }

  int max_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, space_->degree(m));
    return d;
  }

  /// Homogeneous part of the given degree.
  ChernExpr part(int degree) const {
    ChernExpr out(space_);
    for (const auto& [m, c] : terms_)
      if (space_->degree(m) == degree) out.terms_.emplace(m, c);
    return out;
  }

  ChernExpr& operator+=(const ChernExpr& o) {
    check_space(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  ChernExpr& operator-=(const ChernExpr& o) {
    check_space(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  ChernExpr& operator*=(const Rational& k) {
    if (k.is_zero()) terms_.clear();
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }
  friend ChernExpr operator+(ChernExpr a, const ChernExpr& b) { return a += b; }
  friend ChernExpr operator-(ChernExpr a, const ChernExpr& b) { return a -= b; }
  friend ChernExpr operator*(ChernExpr a, const Rational& k) { return a *= k; }
  friend ChernExpr operator*(const Rational& k, ChernExpr a) { return a *= k; }

  friend bool operator==(const ChernExpr& a, const ChernExpr& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  void check_space(const ChernExpr& o) const {
    if (space_ != o.space_) throw input_error("expressions on different spaces: " + space_->tag() + " vs " + o.space_->tag());
  }

  /// Stable text form: one "coeff monomial" line per term, ordered by
  /// degree then monomial.
  std::string dump() const {
    std::vector<std::pair<int, const std::pair<const Monomial, Rational>*>> order;
    for (const auto& t : terms_) order.push_back({space_->degree(t.first), &t});
    std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::string out;
    for (const auto& [d, t] : order) out += t->second.str() + " " + space_->render(t->first) + "\n";
    return out.empty() ? "0\n" : out;
  }

 private:
  std::shared_ptr<const Space> space_;
  std::map<Monomial, Rational> terms_;
};

/// Rewrites every monomial with the space's relation table until no pattern
/// applies. Inputs of degree above kMaxDegree are rejected.
inline ChernExpr normal_form(const ChernExpr& e) {
  const Space& sp = e.space();
  ChernExpr out(e.space_ptr());
  std::vector<std::pair<Monomial, Rational>> work(e.terms().begin(), e.terms().end());
  std::size_t steps = 0;
  while (!work.empty()) {
    auto [m, c] = std::move(work.back());
    work.pop_back();
    if (sp.degree(m) > kMaxDegree)
      throw degree_overflow("monomial " + sp.render(m) + " exceeds degree " + std::to_string(kMaxDegree));
    if (++steps > 1'000'000) throw rule_error("relation table does not terminate on " + sp.render(m));
    auto hit = sp.match(m);
    if (!hit) {
      out.add(m, c);
      continue;
    }
    for (const auto& [rm, rc] : hit->first->replacement) work.emplace_back(merge(rm, hit->second), c * rc);
  }
  return out;
}

/// Product truncated above max_degree, without rewriting. The relation
/// table is not confluent, so callers normalize once at the end when the
/// exact displayed form matters.
inline ChernExpr raw_multiply(const ChernExpr& a, const ChernExpr& b, int max_degree = kMaxDegree) {
  a.check_space(b);
  const Space& sp = a.space();
  ChernExpr raw(a.space_ptr());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = merge(ma, mb);
      if (sp.degree(m) <= max_degree) raw.add(std::move(m), ca * cb);
    }
  return raw;
}

inline ChernExpr multiply(const ChernExpr& a, const ChernExpr& b, int max_degree = kMaxDegree) {
  return normal_form(raw_multiply(a, b, max_degree));
}

/// sum_{k <= max_degree} x^k / k!, unnormalized.
inline ChernExpr exp_truncated(const ChernExpr& x, int max_degree = kMaxDegree) {
  ChernExpr total = ChernExpr::constant(x.space_ptr(), 1);
  ChernExpr power = ChernExpr::constant(x.space_ptr(), 1);
  for (int k = 1; k <= max_degree; ++k) {
    power = raw_multiply(power, x, max_degree) * Rational(1, k);
    total += power;
  }
  return total;
}

/// Proper pushforward along a map of relative dimension one. A source
/// monomial splits as (base part) * (fiber part); the base part is carried
/// over by `base_map`, the fiber part is looked up in the rule table.
class Pushforward {
 public:
  Pushforward(std::string tag, std::shared_ptr<const Space> source, std::shared_ptr<const Space> target)
      : tag_(std::move(tag)), source_(std::move(source)), target_(std::move(target)) {
    base_map_.assign(source_->size(), -1);
  }

  const std::string& tag() const { return tag_; }
  const std::shared_ptr<const Space>& source() const { return source_; }
  const std::shared_ptr<const Space>& target() const { return target_; }

  void map_base(std::string_view from, std::string_view to) {
    auto f = source_->id(from);
    if (source_->generator(f).role != Role::base) throw std::logic_error("map_base on a fiber generator");
    base_map_[f] = target_->id(to);
  }

  /// fiber monomial (source ids) -> class on the target. `pinned` records
  /// whether an independently displayed result exercises the rule.
  void add_rule(Monomial fiber, ChernExpr value, bool pinned = true) {
    if (value.space_ptr() != target_) throw std::logic_error("rule value on wrong space");
    std::sort(fiber.begin(), fiber.end());
    rules_.insert_or_assign(fiber, Entry{std::move(value), pinned});
  }

  std::vector<std::string> unpinned_rules() const {
    std::vector<std::string> out;
    for (const auto& [m, e] : rules_)
      if (!e.pinned) out.push_back(source_->render(m));
    return out;
  }

  ChernExpr apply(const ChernExpr& expr) const {
    if (expr.space_ptr() != source_) throw input_error(tag_ + "-pushforward applied to expression on " + expr.space().tag());
    ChernExpr in = normal_form(expr);
    ChernExpr out(target_);
    for (const auto& [m, c] : in.terms()) {
      Monomial base, fiber;
      for (auto g : m) (source_->generator(g).role == Role::fiber ? fiber : base).push_back(g);
      if (fiber.empty()) continue;  // pulled back from the target: fibre dimension kills it
      auto it = rules_.find(fiber);
      if (it == rules_.end())
        throw rule_error(tag_ + "-pushforward has no rule for fiber monomial " + source_->render(fiber) +
                         " (in " + source_->render(m) + ")");
      Monomial mapped;
      for (auto g : base) {
        if (base_map_[g] < 0) throw rule_error(tag_ + "-pushforward cannot carry generator " + source_->generator(g).name);
        mapped.push_back(static_cast<std::uint16_t>(base_map_[g]));
      }
      std::sort(mapped.begin(), mapped.end());
      ChernExpr pulled(target_);
      pulled.add(mapped, c);
      out += multiply(pulled, it->second.value);
    }
    return normal_form(out);
  }

 private:
  struct Entry {
    ChernExpr value;
    bool pinned;
  };
  std::string tag_;
  std::shared_ptr<const Space> source_, target_;
  std::vector<int> base_map_;
  std::map<Monomial, Entry> rules_;
};

// ---------------------------------------------------------------------------
// Universal curve over the (g-1)-pointed universal curve
// ---------------------------------------------------------------------------

/// Spaces and maps for the antiramification computation:
///   X --q--> B = universal curve over M_{g,g-1} --u--> M = M_{g,g-1}.
/// X carries E_i, E_p, omega_q over B; B carries K_p, D_ip over M.
struct UniversalCurveModel {
  int g = 0;
  int n = 0;
  std::shared_ptr<Space> x, b, m;
  std::unique_ptr<Pushforward> q, u;

  explicit UniversalCurveModel(int genus) : g(genus), n(genus - 1) {
    require(g >= 4, "universal curve model: need g >= 4");
    x = std::make_shared<Space>("X");
    b = std::make_shared<Space>("B");
    m = std::make_shared<Space>("M");
    auto idx = [](const char* p, int i, const char* suffix = "") { return std::string(p) + std::to_string(i) + suffix; };

    // M: interior classes, psi_i identified with K_i.
    m->add_generator("lam", 1, Role::base);
    for (int i = 1; i <= n; ++i) m->add_generator(idx("psi_", i), 1, Role::base);

    // B: lam, K_i pulled back along u; K_p, D_ip genuine.
    for (auto* s : {b.get(), x.get()}) {
      s->add_generator("lam", 1, Role::base);
      for (int i = 1; i <= n; ++i) s->add_generator(idx("K_", i), 1, Role::base);
    }
    b->add_generator("K_p", 1, Role::fiber);
    for (int i = 1; i <= n; ++i) b->add_generator(idx("D_", i, "p"), 1, Role::fiber);

    // X: everything from B is a base class for q.
    x->add_generator("K_p", 1, Role::base);
    for (int i = 1; i <= n; ++i) x->add_generator(idx("D_", i, "p"), 1, Role::base);
    for (int i = 1; i <= n; ++i) x->add_generator(idx("E_", i), 1, Role::fiber);
    x->add_generator("E_p", 1, Role::fiber);
    x->add_generator("omega_q", 1, Role::fiber);

    auto X = [&](const std::string& s) { return x->id(s); };
    const auto Ep = X("E_p"), Kp = X("K_p"), w = X("omega_q");
    // Rule order: E_i E_j first, then squares, then E_i E_p, then E . omega.
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) x->add_rule({X(idx("E_", i)), X(idx("E_", j))}, {});
    for (int i = 1; i <= n; ++i) x->add_rule({X(idx("E_", i)), X(idx("E_", i))}, {{{X(idx("E_", i)), X(idx("K_", i))}, Rational(-1)}});
    x->add_rule({Ep, Ep}, {{{Ep, Kp}, Rational(-1)}});
    for (int i = 1; i <= n; ++i) x->add_rule({X(idx("E_", i)), Ep}, {{{X(idx("E_", i)), X(idx("D_", i, "p"))}, Rational(1)}});
    for (int i = 1; i <= n; ++i) x->add_rule({X(idx("E_", i)), w}, {{{X(idx("E_", i)), X(idx("K_", i))}, Rational(1)}});
    x->add_rule({Ep, w}, {{{Ep, Kp}, Rational(1)}});

    std::shared_ptr<const Space> xc = x, bc = b, mc = m;
    q = std::make_unique<Pushforward>("q", xc, bc);
    for (std::uint16_t id = 0; id < x->size(); ++id)
      if (x->generator(id).role == Role::base) q->map_base(x->generator(id).name, x->generator(id).name);
    for (int i = 1; i <= n; ++i) q->add_rule({X(idx("E_", i))}, ChernExpr::constant(bc, 1));
    q->add_rule({Ep}, ChernExpr::constant(bc, 1));
    q->add_rule({w}, ChernExpr::constant(bc, 2 * g - 2), false);  // only enters ch_0
    q->add_rule({w, w}, ChernExpr::generator(bc, "lam", 12));

    u = std::make_unique<Pushforward>("u", bc, mc);
    u->map_base("lam", "lam");
    for (int i = 1; i <= n; ++i) u->map_base(idx("K_", i), idx("psi_", i));
    auto B = [&](const std::string& s) { return b->id(s); };
    const auto bKp = B("K_p");
    u->add_rule({bKp}, ChernExpr::constant(mc, 2 * g - 2));
    u->add_rule({bKp, bKp}, ChernExpr::generator(mc, "lam", 12));
    for (int i = 1; i <= n; ++i) {
      auto D = B(idx("D_", i, "p"));
      u->add_rule({D}, ChernExpr::constant(mc, 1));
      u->add_rule({D, bKp}, ChernExpr::generator(mc, idx("psi_", i)));
      u->add_rule({D, D}, ChernExpr::generator(mc, idx("psi_", i), -1));
      for (int j = i + 1; j <= n; ++j) u->add_rule({D, B(idx("D_", j, "p"))}, ChernExpr(mc));
    }
  }

  /// sum_i E_i + 2 E_p on X.
  ChernExpr section_divisor() const {
    ChernExpr e(x);
    for (int i = 1; i <= n; ++i) e.add({x->id("E_" + std::to_string(i))}, 1);
    e.add({x->id("E_p")}, 2);
    return e;
  }

  /// Todd class of the relative tangent bundle: 1 - omega/2 + omega^2/12.
  ChernExpr todd() const {
    ChernExpr t = ChernExpr::constant(x, 1);
    t.add({x->id("omega_q")}, Rational(-1, 2));
    t.add({x->id("omega_q"), x->id("omega_q")}, Rational(1, 12));
    return t;
  }
};

struct GrrResult {
  ChernExpr ch0, ch1, ch2;
};

/// ch_k(q_! O(sum E_i + 2 E_p)) for k = 0, 1, 2, by GRR along q.
inline GrrResult antram_grr(const UniversalCurveModel& model) {
  ChernExpr integrand = multiply(exp_truncated(model.section_divisor()), model.todd());
  return {model.q->apply(integrand.part(1)), model.q->apply(integrand.part(2)), model.q->apply(integrand.part(3))};
}

/// The two degree-two pushforwards u_*(ch_1^2) and u_*(ch_2).
struct InteriorPushforwards {
  ChernExpr ch1_squared, ch2;
};

inline InteriorPushforwards antram_interior_pushforwards(const UniversalCurveModel& model) {
  GrrResult r = antram_grr(model);
  return {model.u->apply(multiply(r.ch1, r.ch1)), model.u->apply(r.ch2)};
}

struct InteriorClass {
  Rational lam, psi;
  friend bool operator==(const InteriorClass&, const InteriorClass&) = default;
};

/// Reads (lambda, psi) off a symmetric degree-one class on M.
inline InteriorClass read_interior(const UniversalCurveModel& model, const ChernExpr& e) {
  InteriorClass out{e.coefficient({"lam"}), e.coefficient({"psi_1"})};
  for (int i = 2; i <= model.n; ++i)
    if (e.coefficient({"psi_" + std::to_string(i)}) != out.psi) throw rule_error("interior class is not symmetric in the points");
  for (const auto& [m, c] : e.terms())
    if (e.space().degree(m) != 1) throw rule_error("interior class has a term of degree != 1");
  return out;
}

/// Interior antiramification class: u_*((ch_1^2 - 2 ch_2)/2).
inline InteriorClass antram_interior_class(int g) {
  UniversalCurveModel model(g);
  InteriorPushforwards p = antram_interior_pushforwards(model);
  ChernExpr cls = (p.ch1_squared - p.ch2 * Rational(2)) * Rational(1, 2);
  return read_interior(model, cls);
}

// ---------------------------------------------------------------------------
// Triple product of a fixed curve of genus g - 1
// ---------------------------------------------------------------------------

/// C x C x C --f--> C x C, f(x, t, p) = (t, p), for a curve C of genus g - 1.
/// Cohomology relations use K_C = (2g - 4) pt numerically.
struct TripleProductModel {
  int g = 0;
  std::shared_ptr<Space> ccc, cc;
  std::unique_ptr<Pushforward> f;
  std::map<Monomial, Rational> top;  // evaluation of degree-2 monomials on C x C

  explicit TripleProductModel(int genus) : g(genus) {
    require(g >= 4, "triple product model: need g >= 4 (fixed curve of genus >= 3)");
    const long kc = 2L * g - 4;  // degree of K_C
    ccc = std::make_shared<Space>("CCC");
    cc = std::make_shared<Space>("CC");
    const auto e1 = ccc->add_generator("eta1", 1, Role::fiber);
    const auto e2 = ccc->add_generator("eta2", 1, Role::base);
    const auto e3 = ccc->add_generator("eta3", 1, Role::base);
    const auto d12 = ccc->add_generator("D12", 1, Role::fiber);
    const auto d13 = ccc->add_generator("D13", 1, Role::fiber);
    const auto d23 = ccc->add_generator("D23", 1, Role::base);
    const auto k1 = ccc->add_generator("K1", 1, Role::fiber);

    ccc->add_rule({k1}, {{{e1}, Rational(kc)}});
    for (auto e : {e1, e2, e3}) ccc->add_rule({e, e}, {});
    ccc->add_rule({d12, d12}, {{{d12, e2}, Rational(-kc)}});
    ccc->add_rule({d13, d13}, {{{d13, e3}, Rational(-kc)}});
    ccc->add_rule({d23, d23}, {{{d23, e2}, Rational(-kc)}});
    ccc->add_rule({d12, d13}, {{{d12, d23}, Rational(1)}});
    ccc->add_rule({d13, d23}, {{{d12, d23}, Rational(1)}});
    ccc->add_rule({d12, e1}, {{{d12, e2}, Rational(1)}});
    ccc->add_rule({d13, e1}, {{{d13, e3}, Rational(1)}});
    ccc->add_rule({d23, e3}, {{{d23, e2}, Rational(1)}});

    const auto f1 = cc->add_generator("F1", 1, Role::base);
    const auto f2 = cc->add_generator("F2", 1, Role::base);
    const auto dc = cc->add_generator("DiagCC", 1, Role::base);
    const auto kt = cc->add_generator("Kt", 1, Role::base);
    const auto kp = cc->add_generator("Kp2", 1, Role::base);
    cc->add_rule({kt}, {{{f1}, Rational(kc)}});
    cc->add_rule({kp}, {{{f2}, Rational(kc)}});

    std::shared_ptr<const Space> src = ccc, dst = cc;
    f = std::make_unique<Pushforward>("f", src, dst);
    f->map_base("eta2", "F1");
    f->map_base("eta3", "F2");
    f->map_base("D23", "DiagCC");
    f->add_rule({e1}, ChernExpr::constant(dst, 1));
    f->add_rule({d12}, ChernExpr::constant(dst, 1));
    f->add_rule({d13}, ChernExpr::constant(dst, 1));

    auto sorted = [](Monomial m) { std::sort(m.begin(), m.end()); return m; };
    top[sorted({f1, f2})] = Rational(1);
    top[sorted({f1, f1})] = Rational(0);
    top[sorted({f2, f2})] = Rational(0);
    top[sorted({dc, f1})] = Rational(1);
    top[sorted({dc, f2})] = Rational(1);
    top[sorted({dc, dc})] = Rational(4 - 2 * g);
  }

  /// Degree of a top-degree class on C x C.
  Rational evaluate(const ChernExpr& e) const {
    Rational total(0);
    const ChernExpr nf = normal_form(e);
    for (const auto& [m, c] : nf.terms()) {
      auto it = top.find(m);
      if (it == top.end()) throw rule_error("cannot evaluate " + cc->render(m) + " on C x C");
      total += c * it->second;
    }
    return total;
  }

  /// p_1^*(A) + D12 - 2 D13 with deg A = g - 2.
  ChernExpr bundle_class() const {
    ChernExpr e(ccc);
    e.add({ccc->id("eta1")}, g - 2);
    e.add({ccc->id("D12")}, 1);
    e.add({ccc->id("D13")}, -2);
    return e;
  }

  ChernExpr todd() const {
    ChernExpr t = ChernExpr::constant(ccc, 1);
    t.add({ccc->id("K1")}, Rational(-1, 2));
    return t;
  }
};

struct IrreducibleNodeResult {
  ChernExpr ch0, ch1, ch2;
  Rational ch2_degree;
  Rational value;  // c_2 = (ch_1^2 + 2 ch_2)/2
};

/// Intersection of the antiramification divisor with the C_irr test curve.
inline IrreducibleNodeResult c_irr_computation(int g) {
  TripleProductModel model(g);
  ChernExpr integrand = multiply(exp_truncated(model.bundle_class()), model.todd());
  ChernExpr ch0 = model.f->apply(integrand.part(1));
  ChernExpr ch1 = model.f->apply(integrand.part(2));
  ChernExpr ch2 = model.f->apply(integrand.part(3));
  Rational ch2_deg = model.evaluate(ch2);
  Rational value = (model.evaluate(multiply(ch1, ch1)) + Rational(2) * ch2_deg) * Rational(1, 2);
  return {ch0, ch1, ch2, ch2_deg, value};
}

inline Rational c_irr_intersection(int g) { return c_irr_computation(g).value; }

}  // namespace mgn::chern
