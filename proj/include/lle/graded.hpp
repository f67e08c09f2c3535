#pragma once

#include <map>
#include <string>
#include <vector>

#include "lle/catalog.hpp"
#include "lle/diff_operator.hpp"

namespace lle {

// Which generators participate and with which degree. The superalgebra is
// driven by the same machinery with parities embedded as (p, 0) degrees;
// its closure is tested against the full basis, while the Z2xZ2 rule
// restricts every expansion to the component selected by the degree sum.
struct AlgebraSpec {
  enum class Rule { Super, Z2Z2 };

  std::string name;
  Rule rule;
  std::vector<std::string> generators;
  std::map<std::string, GradedDegree> degree;

  GradedDegree degree_of(const std::string& g) const { return degree.at(g); }
};

// Super Schroedinger algebra: the Schroedinger generators and M even,
// Q, S, X_j odd. The epsilon-contracted Xt_j are left out: they arise from
// commutators of the odd translations, which the superalgebra bracket does
// not contain, and adjoining them provably breaks closure.
AlgebraSpec super_spec();

// The Z2xZ2 grading: g00 = <H, D, K, J, Xt, W, Pt, Gt>, g01 = <P, G>,
// g10 = <Q, S, Y, Z>, g11 = <X>; M drops out.
AlgebraSpec z2z2_spec();

struct BracketEntry {
  std::string left, right;
  BracketKind kind;
  bool closed = false;
  std::vector<std::pair<std::string, Scalar>> expansion;  // nonzero coefficients
  DiffOperator residual;                                  // nonzero only when !closed
};

struct StructureConstants {
  std::string algebra;
  std::vector<BracketEntry> entries;  // all ordered pairs, listing order
  bool all_closed = true;
  int antisymmetry_violations = 0;

  const BracketEntry& at(const std::string& left, const std::string& right) const;
};

// Every pairwise graded bracket, expanded exactly over the designated basis.
// Non-closure is data, not an error. The signed swap identity is checked on
// the same products at no extra cost.
StructureConstants bracket_table(const AlgebraSpec& spec, const GeneratorCatalog& catalog);

struct JacobiViolation {
  std::string a, b, c;
  DiffOperator residual;
};

enum class JacobiMode {
  Direct,   // six raw operator products per triple
  Rewrite,  // assemble both sides from verified exact pair expansions
};

// Graded Jacobi identity over all ordered triples, evaluated at the operator
// level. Rewrite mode replaces inner brackets by their verified expansions
// (exact operator identities) before bracketing again; Direct mode multiplies
// everything out and is used for cross-checks and as a fallback for any pair
// that failed to close.
std::vector<JacobiViolation> jacobi_check(const AlgebraSpec& spec, const GeneratorCatalog& catalog,
                                          JacobiMode mode = JacobiMode::Rewrite);

// Single triple, always by direct products.
DiffOperator jacobi_residual_direct(const AlgebraSpec& spec, const GeneratorCatalog& catalog,
                                    const std::string& a, const std::string& b,
                                    const std::string& c);

struct PairViolation {
  std::string a, b;
  DiffOperator residual;
};

// Signed swap identity for all pairs (structural for commutators and
// anticommutators, verified anyway).
std::vector<PairViolation> antisymmetry_check(const AlgebraSpec& spec,
                                              const GeneratorCatalog& catalog);

// True iff all pairwise brackets of the subset expand over the subset.
bool subalgebra_check(const AlgebraSpec& spec, const GeneratorCatalog& catalog,
                      const std::vector<std::string>& subset);

struct Divergence {
  std::string left, right;
  BracketKind super_kind, z2z2_kind;
  std::vector<std::pair<std::string, Scalar>> super_expansion;
  std::vector<std::pair<std::string, Scalar>> z2z2_expansion;
};

// Pairs shared by both algebras whose bracket kind differs, with both
// results; substantiates that neither algebra embeds in the other even
// though the generators coincide.
std::vector<Divergence> compare_algebras(const GeneratorCatalog& catalog);

struct RankReport {
  int total_z2z2 = 0;                      // rank of the 59 graded generators
  int total_with_m = 0;                    // including M
  std::map<std::string, int> by_component; // "g00", "g01", "g10", "g11"
  std::map<std::string, int> members;      // generator count per component
};

RankReport rank_report(const GeneratorCatalog& catalog);

std::string kind_name(BracketKind k);

}  // namespace lle
