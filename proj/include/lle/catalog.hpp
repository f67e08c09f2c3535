#pragma once

#include <map>
#include <string>
#include <vector>

#include "lle/clifford.hpp"
#include "lle/diff_operator.hpp"

namespace lle {

// The wave operator: Omega = -2i alpha d_t + i gamma_j d_j + 2m beta.
DiffOperator build_lle(const GammaRep& rep);

// Every named symmetry generator, normal-ordered, in a fixed listing order:
// first order P_j, G_j, M, H, D, K, J_jk (j<k), Xt_j (the epsilon-contracted
// rotations of the fermionic sector), the odd set Q, S, X_j, and the second
// order anticommutator set Pt_jk (j<=k), Gt_jk (j<=k), W_jk, Y_jk, Z_jk.
class GeneratorCatalog {
 public:
  explicit GeneratorCatalog(GammaRep rep);

  const GammaRep& rep() const { return rep_; }
  const DiffOperator& omega() const { return omega_; }

  const std::vector<std::string>& names() const { return order_; }
  bool has(const std::string& name) const { return ops_.count(name) != 0; }
  const DiffOperator& at(const std::string& name) const;

 private:
  void put(std::string name, DiffOperator op);

  GammaRep rep_;
  DiffOperator omega_;
  std::vector<std::string> order_;
  std::map<std::string, DiffOperator> ops_;
};

int levi_civita(int j, int k, int n);  // indices in {1,2,3}

}  // namespace lle
