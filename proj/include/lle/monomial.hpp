#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace lle {

// Coordinates are indexed 0=t, 1=x1, 2=x2, 3=x3.
inline constexpr int kAxes = 4;

// Normal-ordered Weyl-algebra monomial: all coordinates to the left of all
// derivatives, z^e d^d. The total order is lexicographic on the 8-tuple.
struct Monomial {
  std::array<int16_t, kAxes> coord{};  // t, x1, x2, x3 exponents
  std::array<int16_t, kAxes> deriv{};  // dt, d1, d2, d3 exponents

  static Monomial unit() { return {}; }
  static Monomial coordinate(int axis, int p = 1) {
    Monomial m;
    m.coord[axis] = static_cast<int16_t>(p);
    return m;
  }
  static Monomial derivative(int axis, int p = 1) {
    Monomial m;
    m.deriv[axis] = static_cast<int16_t>(p);
    return m;
  }

  bool is_unit() const {
    for (int a = 0; a < kAxes; ++a)
      if (coord[a] || deriv[a]) return false;
    return true;
  }
  int coordinate_degree() const {
    int d = 0;
    for (int a = 0; a < kAxes; ++a) d += coord[a];
    return d;
  }
  int derivative_order() const {
    int d = 0;
    for (int a = 0; a < kAxes; ++a) d += deriv[a];
    return d;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.coord == b.coord && a.deriv == b.deriv;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.coord != b.coord) return a.coord < b.coord;
    return a.deriv < b.deriv;
  }
};

std::string to_string(const Monomial& m);  // "t^2*x1*dt" etc., "1" for the unit

}  // namespace lle
