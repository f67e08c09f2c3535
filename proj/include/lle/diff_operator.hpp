#pragma once

#include <map>
#include <optional>
#include <tuple>

#include "lle/matrices.hpp"
#include "lle/monomial.hpp"

namespace lle {

// Z2 x Z2 degree. The superalgebra case is embedded as (parity, 0).
struct GradedDegree {
  int a = 0;
  int b = 0;

  friend GradedDegree operator+(GradedDegree x, GradedDegree y) {
    return {(x.a + y.a) & 1, (x.b + y.b) & 1};
  }
  friend bool operator==(GradedDegree x, GradedDegree y) { return x.a == y.a && x.b == y.b; }
  friend bool operator<(GradedDegree x, GradedDegree y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  }
  int dot(GradedDegree y) const { return (a * y.a + b * y.b) & 1; }
};

enum class BracketKind { Commutator, Anticommutator };

// A coefficient slot of an operator: (monomial, row, col), ordered
// lexicographically. The span engine pivots on the first nonzero slot.
using Slot = std::tuple<Monomial, int, int>;

// Matrix-valued differential operator in normal-ordered form. The term map
// keyed by monomial, with no zero matrices stored, is a unique representation:
// two operators are equal iff their maps are equal.
class DiffOperator {
 public:
  DiffOperator() = default;

  static DiffOperator zero() { return {}; }
  static DiffOperator identity() { return from_matrix(mat_identity()); }
  static DiffOperator scalar_op(const Scalar& c);
  static DiffOperator from_matrix(const Mat4& m);
  static DiffOperator term(const Monomial& mono, const Mat4& m);
  static DiffOperator coordinate(int axis) {
    return term(Monomial::coordinate(axis), mat_identity());
  }
  static DiffOperator derivative(int axis) {
    return term(Monomial::derivative(axis), mat_identity());
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Mat4>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  int max_derivative_order() const;
  int max_coordinate_degree() const;

  // True when no monomial carries a coordinate factor (constant coefficients).
  bool is_constant_coefficient() const;

  Mat4 coeff(const Monomial& mono) const;

  void add_term(const Monomial& mono, const Mat4& m);
  void add_scaled(const Scalar& c, const DiffOperator& other);  // *this += c * other

  friend DiffOperator operator-(const DiffOperator& x);
  friend DiffOperator operator+(const DiffOperator& x, const DiffOperator& y);
  friend DiffOperator operator-(const DiffOperator& x, const DiffOperator& y);
  friend DiffOperator operator*(const DiffOperator& x, const DiffOperator& y);
  friend DiffOperator operator*(const Scalar& c, const DiffOperator& x);
  friend bool operator==(const DiffOperator& x, const DiffOperator& y);

  DiffOperator& operator+=(const DiffOperator& y);
  DiffOperator& operator-=(const DiffOperator& y);

 private:
  std::map<Monomial, Mat4> terms_;
};

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);
DiffOperator anticommutator(const DiffOperator& a, const DiffOperator& b);

// Commutator when deg_a . deg_b is even, anticommutator when odd.
DiffOperator graded_bracket(const DiffOperator& a, GradedDegree deg_a, const DiffOperator& b,
                            GradedDegree deg_b);
BracketKind graded_kind(GradedDegree deg_a, GradedDegree deg_b);

}  // namespace lle
