#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "lle/matrices.hpp"

namespace lle {

struct CliffordViolation : std::runtime_error {
  int mu, nu;
  CliffordViolation(int mu_, int nu_)
      : std::runtime_error("Clifford relation violated for (gamma_" + std::to_string(mu_) +
                           ", gamma_" + std::to_string(nu_) + ")"),
        mu(mu_),
        nu(nu_) {}
};

// Concrete 4x4 realization of {gamma_mu, gamma_nu} = 2 g_mu_nu with
// g = diag(+,-,-,-), plus the derived elements
//   gamma4 = gamma0 gamma1 gamma2 gamma3,  alpha = (gamma0+gamma4)/2,
//   beta = (gamma0-gamma4)/2.
// The relations are verified at construction; building from matrices that
// break them throws CliffordViolation naming the offending pair.
class GammaRep {
 public:
  static GammaRep dirac();
  static GammaRep chiral();
  static GammaRep from_matrices(std::array<Mat4, 4> gammas, std::string name = "custom");
  // Plain-text format: four 4x4 blocks of comma-separated scalar expressions,
  // one matrix row per line; blank lines and '#' comments ignored.
  static GammaRep from_text(const std::string& text);
  static GammaRep from_file(const std::string& path);
  static GammaRep named(const std::string& name);  // "dirac", "chiral", or a file path

  const std::string& name() const { return name_; }
  const Mat4& gamma(int mu) const { return gamma_[mu]; }
  const Mat4& gamma4() const { return gamma4_; }
  const Mat4& alpha() const { return alpha_; }
  const Mat4& beta() const { return beta_; }

  static int metric(int mu, int nu) { return mu != nu ? 0 : (mu == 0 ? 1 : -1); }

  // The 16 products of distinct gamma matrices, a basis of all 4x4 matrices.
  // Index 0 is the identity; index 15 the quadruple product (= gamma4).
  const Mat4& basis(int k) const { return basis_[k]; }
  const std::string& basis_name(int k) const { return basis_names_[k]; }

  // Exact expansion coefficients of an arbitrary matrix over that basis.
  std::array<Scalar, 16> decompose(const Mat4& m) const;

 private:
  GammaRep() = default;
  void finish(std::string name);  // validates, derives, builds the basis

  std::string name_;
  std::array<Mat4, 4> gamma_;
  Mat4 gamma4_, alpha_, beta_;
  std::array<Mat4, 16> basis_;
  std::array<std::string, 16> basis_names_;
  KMatrix basis_inverse_;  // 16x16, maps vec(M) to basis coefficients
};

struct IdentityCheck {
  std::string name;
  bool ok;
};

// alpha^2 = 0, beta^2 = 0, {alpha,beta} = 1, gamma4^2 = -1, and the
// anticommutation of alpha, beta with the spatial gammas. Failures are
// reported, not thrown.
std::vector<IdentityCheck> derived_identities(const GammaRep& rep);

}  // namespace lle
