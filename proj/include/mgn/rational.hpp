#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "mgn/errors.hpp"

namespace mgn {

/// Exact rational number in lowest terms with positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. The wrapper exists so that no
/// gmpxx expression template ever escapes into calling code, and so that
/// every constructor path canonicalizes.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw input_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(const mpz_class& z) : q_(z) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "-p", "p/q" (q nonzero). Whitespace is not accepted.
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw input_error("empty rational literal");
    auto valid_int = [](std::string_view t) {
      if (t.empty()) return false;
      std::size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
      if (k == t.size()) return false;
      for (; k < t.size(); ++k)
        if (t[k] < '0' || t[k] > '9') return false;
      return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
      throw input_error("malformed rational literal: " + s);
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw input_error("rational with zero denominator: " + s);
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw input_error("division by zero rational");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// n! for n >= 0.
inline Rational factorial(long n) {
  require(n >= 0, "factorial of negative integer");
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(z);
}

/// Binomial coefficient C(a, k) with the conventions used throughout:
/// C(a, k) = 0 for k < 0, C(a, k) = 0 for k > a >= 0, and for a < 0 the
/// negative-upper-index identity C(a, k) = (-1)^k C(k - a - 1, k).
inline Rational binomial(long a, long k) {
  if (k < 0) return Rational(0);
  if (a >= 0 && k > a) return Rational(0);
  mpz_class z;
  if (a >= 0) {
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
    return Rational(z);
  }
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(k - a - 1), static_cast<unsigned long>(k));
  if (k % 2 != 0) z = -z;
  return Rational(z);
}

}  // namespace mgn
