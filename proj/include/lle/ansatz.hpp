#pragma once

#include <string>
#include <vector>

#include "lle/catalog.hpp"
#include "lle/diff_operator.hpp"

namespace lle {

struct AnsatzBounds {
  int derivative_order = 1;
  int coord_degree = 2;       // K needs coordinate degree 2
  int multiplier_degree = 1;
};

struct AnsatzSolution {
  BracketKind kind = BracketKind::Commutator;
  AnsatzBounds bounds;
  std::vector<DiffOperator> basis;  // operator parts of the kernel
  int dimension = 0;
};

// Solves bracket(Omega, A) = multiplier * Omega jointly in the unknown
// operator coefficients and multiplier entries, exactly. Returns a basis of
// the operator-part solution space (the multiplier is determined by the
// operator part, since multiplier * Omega = 0 forces multiplier = 0).
AnsatzSolution solve_symmetry_ansatz(const DiffOperator& omega, BracketKind kind,
                                     AnsatzBounds bounds = {});

struct UniquenessStage {
  std::string name;
  int dimension;
};

struct UniquenessVerdict {
  AnsatzBounds bounds;
  bool conclusive = false;
  bool exists = false;
  std::vector<UniquenessStage> stages;
  std::vector<std::vector<DiffOperator>> stage_bases;  // basis after each linear stage
  std::vector<DiffOperator> solutions;                 // nonempty only when exists
  std::string note;
};

// Mechanical test for a second supercharge: intersect the anticommutator
// certificate space with the linear constraints [D,Qbar] = -Qbar,
// [J_jk, Qbar] = 0 and {Q, Qbar} = 0, then solve the quadratic normalization
// {Qbar, Qbar} = 2H on the residual parameter space by linearizing the
// coefficient products and testing the resulting symmetric matrix for a
// rank-one square decomposition. The expected outcome is an empty solution
// set; a residual space too entangled to decide is reported as inconclusive
// rather than guessed at.
UniquenessVerdict supercharge_uniqueness(const GeneratorCatalog& catalog, AnsatzBounds bounds = {},
                                         int residual_cap = 6);

}  // namespace lle
