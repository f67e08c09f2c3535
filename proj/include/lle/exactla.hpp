#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "lle/matrices.hpp"

namespace lle {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RrefResult {
  KMatrix mat;
  int rank = 0;
  std::vector<int> pivot_cols;
};

// Reduced row-echelon form over K. Pivoting is deterministic: the first
// nonzero entry in column order, lowest row index first, so repeated runs
// are bit-identical.
RrefResult rref(KMatrix a);

struct SolutionSpace {
  std::optional<KVector> particular;
  std::vector<KVector> nullspace;
  int rank = 0;

  bool consistent() const { return particular.has_value(); }
};

// Full solution set of A x = b: a particular solution (free variables zero)
// plus a nullspace basis. Inconsistency is reported, not thrown.
SolutionSpace solve(const KMatrix& a, const KVector& b);

// Exact coefficients c with sum_i c_i basis_i = v, when they exist. With a
// linearly dependent spanning set the expansion over the earliest independent
// subset is returned.
std::optional<KVector> in_span(const KVector& v, const std::vector<KVector>& basis);

}  // namespace lle
