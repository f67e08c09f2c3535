#pragma once

#include <string>
#include <vector>

#include "lle/catalog.hpp"
#include "lle/diff_operator.hpp"

namespace lle {

// Certificate for the sufficient symmetry condition: the bracket of the wave
// operator with A equals Lambda(t,x) * Omega (commutator kind) or
// Gamma(t,x) * Omega (anticommutator kind), with a matrix multiplier whose
// entries are coordinate polynomials of bounded degree. The verdict is
// positive exactly when the residual bracket - multiplier * Omega vanishes.
struct SymmetryVerdict {
  BracketKind kind = BracketKind::Commutator;
  bool certified = false;
  DiffOperator multiplier;  // derivative-free; meaningful when certified
  bool ambiguous = false;   // multiplier ansatz was linearly dependent
};

// Finds the multiplier by posing its entries as unknowns and solving the
// exact linear system; one-sided division by Omega is ill-posed because the
// leading coefficients are nilpotent.
SymmetryVerdict check_symmetry(const DiffOperator& omega, const DiffOperator& a, BracketKind kind,
                               int max_multiplier_degree = 1);

// Independent validation channel: apply A to the on-shell plane-wave family
// of Omega (symbolic wave vector) and test that the images are annihilated.
bool plane_wave_validate(const DiffOperator& omega, const DiffOperator& a);

struct SecondOrderEntry {
  std::string name;
  SymmetryVerdict verdict;
};

// Certifies every second-order generator, trying the commutator condition
// first and the anticommutator condition when that fails.
std::vector<SecondOrderEntry> check_second_order_set(const GeneratorCatalog& catalog,
                                                     int max_multiplier_degree = 1);

SymmetryVerdict check_symmetry_auto(const DiffOperator& omega, const DiffOperator& a,
                                    int max_multiplier_degree = 1);

}  // namespace lle
