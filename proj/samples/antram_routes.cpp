// Computes the antiramification class on M_{g,g-1} three ways and prints
// where they agree: the closed form, the GRR pipeline for (lambda, psi), and
// the test-curve solver for the boundary.
#include <cstdlib>
#include <iostream>

#include "mgn/catalog.hpp"
#include "mgn/chern.hpp"
#include "mgn/enumerative.hpp"

int main(int argc, char** argv) {
  const int g = argc > 1 ? std::atoi(argv[1]) : 12;
  const mgn::DivisorClass closed = mgn::antram(g);
  const auto interior = mgn::chern::antram_interior_class(g);
  const auto table = mgn::enumerative::solve_antram_boundary(g);

  std::cout << mgn::to_text(closed);
  std::cout << "GRR interior: lambda " << interior.lam << ", psi " << interior.psi << "\n";
  std::cout << "solver: delta_irr " << table.delta_irr->coeff << " ("
            << mgn::enumerative::to_string(table.delta_irr->provenance) << "), " << table.entries.size()
            << " boundary entries\n";
  const auto diff = mgn::enumerative::compare(table, closed);
  const bool same = diff.empty() && interior.lam == closed.lambda() && interior.psi == closed.psi();
  std::cout << (same ? "all routes agree\n" : "routes DISAGREE\n");
  for (const auto& d : diff) std::cout << "  " << d << "\n";
  return same ? 0 : 1;
}
