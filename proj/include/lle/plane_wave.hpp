#pragma once

#include <array>
#include <map>

#include "lle/diff_operator.hpp"

namespace lle {

// Exponent vector for polynomials in (t, x1, x2, x3, E, k1, k2, k3).
struct PWExp {
  std::array<int16_t, 8> e{};

  friend bool operator==(const PWExp& a, const PWExp& b) { return a.e == b.e; }
  friend bool operator<(const PWExp& a, const PWExp& b) { return a.e < b.e; }
};

inline constexpr int kVarT = 0, kVarX1 = 1, kVarE = 4, kVarK1 = 5;

// Polynomial over K in the four coordinates and the formal wave parameters
// E, k1, k2, k3. Used for states of the form (polynomial) * exp(i(k.x - E t)).
class PWPoly {
 public:
  PWPoly() = default;
  PWPoly(Scalar c) {
    if (!c.is_zero()) terms_.emplace(PWExp{}, std::move(c));
  }

  static PWPoly var(int v, int exp = 1) {
    PWExp w;
    w.e[v] = static_cast<int16_t>(exp);
    PWPoly p;
    p.terms_.emplace(w, Scalar(1));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<PWExp, Scalar>& terms() const { return terms_; }

  void add_term(const PWExp& w, const Scalar& c);

  friend PWPoly operator-(const PWPoly& p);
  friend PWPoly operator+(const PWPoly& a, const PWPoly& b);
  friend PWPoly operator-(const PWPoly& a, const PWPoly& b);
  friend PWPoly operator*(const PWPoly& a, const PWPoly& b);
  friend PWPoly operator*(const Scalar& c, const PWPoly& p);
  friend bool operator==(const PWPoly& a, const PWPoly& b) { return a.terms_ == b.terms_; }

  PWPoly& operator+=(const PWPoly& b);

  PWPoly derivative(int v) const;          // formal d/dv, v in {t, x1..x3}
  PWPoly shifted(int v, int exp) const;    // multiply by v^exp
  PWPoly substitute_energy(const PWPoly& value) const;  // E -> value

  int degree_in(int v) const;

 private:
  std::map<PWExp, Scalar> terms_;
};

// Four-component state u(t,x,E,k) * exp(i(k.x - E t)). Derivatives act
// through the phase: d_t adds t_shift * u, d_xj adds x_shift[j] * u, so a
// state with E specialized to a dispersion value carries its own shifts.
struct PlaneWaveState {
  std::array<PWPoly, 4> comp;
  PWPoly t_shift;
  std::array<PWPoly, 3> x_shift;

  bool is_zero() const {
    for (const auto& c : comp)
      if (!c.is_zero()) return false;
    return true;
  }
  friend bool operator==(const PlaneWaveState& a, const PlaneWaveState& b) {
    return a.comp == b.comp && a.t_shift == b.t_shift && a.x_shift == b.x_shift;
  }
};

// Generic plane wave with formal E: shifts are -iE and +i k_j.
PlaneWaveState plane_wave(const std::array<Scalar, 4>& spinor);

PlaneWaveState apply(const DiffOperator& op, const PlaneWaveState& psi);

using SymbolMatrix = std::array<std::array<PWPoly, 4>, 4>;

// Symbol of a constant-coefficient operator: d_t -> -iE, d_xj -> i k_j.
// Throws std::invalid_argument when a coordinate coefficient is present.
SymbolMatrix symbol(const DiffOperator& op);

// On-shell plane-wave family derived from the operator itself: the square of
// the symbol must be a scalar q(E,k) * I4 of degree one in E; the energy is
// solved from q = 0 and the spinors are the nonzero columns of the symbol on
// that locus (the symbol squares to zero there, so its columns are in the
// kernel).
struct KernelFamily {
  PWPoly energy;                        // polynomial in k over K
  std::vector<PlaneWaveState> states;   // at least one, each annihilated by op
};
KernelFamily kernel_family(const DiffOperator& omega);

}  // namespace lle
