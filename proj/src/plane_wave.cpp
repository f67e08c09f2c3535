#include "lle/plane_wave.hpp"

#include <stdexcept>

namespace lle {

void PWPoly::add_term(const PWExp& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PWPoly operator-(const PWPoly& p) {
  PWPoly r;
  for (const auto& [w, c] : p.terms_) r.terms_.emplace(w, -c);
  return r;
}

PWPoly operator+(const PWPoly& a, const PWPoly& b) {
  PWPoly r = a;
  r += b;
  return r;
}

PWPoly& PWPoly::operator+=(const PWPoly& b) {
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

PWPoly operator-(const PWPoly& a, const PWPoly& b) { return a + (-b); }

PWPoly operator*(const PWPoly& a, const PWPoly& b) {
  PWPoly r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Scalar c = ca * cb;
      if (c.is_zero()) continue;
      PWExp w;
      for (int v = 0; v < 8; ++v) w.e[v] = static_cast<int16_t>(wa.e[v] + wb.e[v]);
      r.add_term(w, c);
    }
  return r;
}

PWPoly operator*(const Scalar& c, const PWPoly& p) {
  PWPoly r;
  if (c.is_zero()) return r;
  for (const auto& [w, pc] : p.terms_) r.add_term(w, c * pc);
  return r;
}

PWPoly PWPoly::derivative(int v) const {
  PWPoly r;
  for (const auto& [w, c] : terms_) {
    if (w.e[v] == 0) continue;
    PWExp d = w;
    d.e[v] -= 1;
    r.add_term(d, Scalar(long(w.e[v])) * c);
  }
  return r;
}

PWPoly PWPoly::shifted(int v, int exp) const {
  PWPoly r;
  for (const auto& [w, c] : terms_) {
    PWExp d = w;
    d.e[v] = static_cast<int16_t>(d.e[v] + exp);
    r.terms_.emplace(d, c);
  }
  return r;
}

PWPoly PWPoly::substitute_energy(const PWPoly& value) const {
  PWPoly r;
  for (const auto& [w, c] : terms_) {
    PWExp base = w;
    int n = base.e[kVarE];
    base.e[kVarE] = 0;
    PWPoly piece(c);
    for (int q = 0; q < n; ++q) piece = piece * value;
    for (const auto& [pw, pc] : piece.terms()) {
      PWExp w2 = pw;
      for (int v = 0; v < 8; ++v) w2.e[v] = static_cast<int16_t>(w2.e[v] + base.e[v]);
      r.add_term(w2, pc);
    }
  }
  return r;
}

int PWPoly::degree_in(int v) const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max<int>(d, w.e[v]);
  return d;
}

PlaneWaveState plane_wave(const std::array<Scalar, 4>& spinor) {
  PlaneWaveState psi;
  for (int c = 0; c < 4; ++c) psi.comp[c] = PWPoly(spinor[c]);
  psi.t_shift = (-Scalar::i()) * PWPoly::var(kVarE);
  for (int j = 0; j < 3; ++j) psi.x_shift[j] = Scalar::i() * PWPoly::var(kVarK1 + j);
  return psi;
}

PlaneWaveState apply(const DiffOperator& op, const PlaneWaveState& psi) {
  PlaneWaveState out;
  out.t_shift = psi.t_shift;
  out.x_shift = psi.x_shift;
  for (const auto& [mono, mat] : op.terms()) {
    // Twisted derivatives first, then coordinate factors, then the matrix.
    std::array<PWPoly, 4> v = psi.comp;
    for (int axis = 0; axis < kAxes; ++axis) {
      const PWPoly& shift = axis == 0 ? psi.t_shift : psi.x_shift[axis - 1];
      for (int n = 0; n < mono.deriv[axis]; ++n)
        for (auto& c : v) c = c.derivative(axis) + shift * c;
    }
    for (int axis = 0; axis < kAxes; ++axis)
      if (mono.coord[axis])
        for (auto& c : v) c = c.shifted(axis, mono.coord[axis]);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        const Scalar& entry = mat(r, c);
        if (!entry.is_zero()) out.comp[r] += entry * v[c];
      }
  }
  return out;
}

SymbolMatrix symbol(const DiffOperator& op) {
  if (!op.is_constant_coefficient())
    throw std::invalid_argument("symbol: operator has coordinate-dependent coefficients");
  SymbolMatrix sym{};
  const Scalar i = Scalar::i();
  for (const auto& [mono, mat] : op.terms()) {
    PWPoly piece(Scalar(1));
    for (int n = 0; n < mono.deriv[0]; ++n) piece = piece * ((-i) * PWPoly::var(kVarE));
    for (int j = 0; j < 3; ++j)
      for (int n = 0; n < mono.deriv[1 + j]; ++n) piece = piece * (i * PWPoly::var(kVarK1 + j));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (!mat(r, c).is_zero()) sym[r][c] += mat(r, c) * piece;
  }
  return sym;
}

KernelFamily kernel_family(const DiffOperator& omega) {
  SymbolMatrix s = symbol(omega);
  SymbolMatrix s2{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int k = 0; k < 4; ++k) s2[r][c] += s[r][k] * s[k][c];
  // The square must be q(E,k) * I4 with q linear in E; its zero locus is the
  // zero-determinant locus of the symbol.
  const PWPoly& q = s2[0][0];
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      bool ok = r == c ? s2[r][c] == q : s2[r][c].is_zero();
      if (!ok) throw std::invalid_argument("kernel_family: symbol square is not scalar");
    }
  if (q.degree_in(kVarE) != 1)
    throw std::invalid_argument("kernel_family: dispersion is not linear in E");
  Scalar c_e(0);
  PWPoly rest;
  for (const auto& [w, c] : q.terms()) {
    if (w.e[kVarE] == 1) {
      PWExp base = w;
      base.e[kVarE] = 0;
      for (int v = 0; v < 8; ++v)
        if (base.e[v] != 0)
          throw std::invalid_argument("kernel_family: E coefficient is not constant");
      c_e = c;
    } else {
      rest.add_term(w, c);
    }
  }
  if (c_e.is_zero()) throw std::invalid_argument("kernel_family: singular dispersion");

  KernelFamily fam;
  fam.energy = (-c_e.inv()) * rest;

  // On the locus the symbol squares to zero, so its columns span a subspace
  // of the kernel; the nonzero ones give exact plane-wave solutions.
  PWPoly minus_i_e0 = (-Scalar::i()) * fam.energy;
  for (int col = 0; col < 4; ++col) {
    PlaneWaveState psi;
    psi.t_shift = minus_i_e0;
    for (int j = 0; j < 3; ++j) psi.x_shift[j] = Scalar::i() * PWPoly::var(kVarK1 + j);
    for (int r = 0; r < 4; ++r) psi.comp[r] = s[r][col].substitute_energy(fam.energy);
    if (!psi.is_zero()) fam.states.push_back(std::move(psi));
  }
  if (fam.states.empty())
    throw std::invalid_argument("kernel_family: symbol vanishes on the dispersion locus");
  return fam;
}

}  // namespace lle
