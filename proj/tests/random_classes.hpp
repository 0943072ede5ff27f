#pragma once

#include <random>

#include "mgn/divisor.hpp"

namespace testing_support {

inline mgn::Rational random_rational(std::mt19937_64& rng, long span = 50, long max_den = 12) {
  std::uniform_int_distribution<long> num(-span, span), den(1, max_den);
  return mgn::Rational(num(rng), den(rng));
}

/// Sparse random class: each coordinate is populated with probability 1/2.
inline mgn::DivisorClass random_class(std::mt19937_64& rng, int g, int n) {
  std::bernoulli_distribution coin(0.5);
  mgn::DivisorClass d(g, n);
  if (coin(rng)) d.set_lambda(random_rational(rng));
  if (n > 0 && coin(rng)) d.set_psi(random_rational(rng));
  if (coin(rng)) d.set_delta_irr(random_rational(rng));
  for (const auto& b : mgn::boundary_indices(g, n))
    if (coin(rng)) d.set_boundary(b.i, b.s, random_rational(rng));
  return d;
}

inline mgn::TestCurve random_curve(std::mt19937_64& rng, int g, int n) {
  mgn::TestCurve c{g, n, "random"};
  c.lam = random_rational(rng);
  c.psi_total = random_rational(rng);
  c.dirr = random_rational(rng);
  for (const auto& b : mgn::boundary_indices(g, n)) c.with_boundary(b.i, b.s, random_rational(rng));
  return c;
}

}  // namespace testing_support
