// Sweeps slopes around the general-type threshold for one genus and prints
// the verdict of the restricted certificate next to the comparison it should
// reproduce.
#include <cstdlib>
#include <iostream>

#include "mgn/certify.hpp"

int main(int argc, char** argv) {
  using mgn::Rational;
  const int g = argc > 1 ? std::atoi(argv[1]) : 12;
  const Rational th = mgn::cone::theta_threshold(g);
  std::cout << "g = " << g << ", threshold " << th << "\n";
  for (const Rational& s : {mgn::cone::registry().slope(g), mgn::cone::SlopeRegistry::default_slope(g),
                            th - Rational(1, 1000), th, th + Rational(1, 1000)}) {
    auto c = mgn::cone::certify_theta(g, s, mgn::cone::Mode::restricted);
    std::cout << "  slope " << s << ": " << (c.cert.feasible ? "feasible" : "infeasible")
              << (s < th ? "  (below threshold)" : "  (not below threshold)") << "\n";
  }
}
