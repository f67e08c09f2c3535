#pragma once

#include <Eigen/Dense>

#include "lle/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<lle::Scalar> {
  using Real = lle::Scalar;
  using NonInteger = lle::Scalar;
  using Literal = lle::Scalar;
  using Nested = lle::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 200,
  };
  static inline lle::Scalar epsilon() { return lle::Scalar(0); }
  static inline lle::Scalar dummy_precision() { return lle::Scalar(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace lle {

using Mat4 = Eigen::Matrix<Scalar, 4, 4>;
using KMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using KVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline Mat4 mat_zero() { return Mat4::Constant(Scalar(0)); }

inline Mat4 mat_identity() {
  Mat4 m = mat_zero();
  for (int k = 0; k < 4; ++k) m(k, k) = Scalar(1);
  return m;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) return false;
  return true;
}

template <typename Derived>
bool exact_equal(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Derived>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      if (!(a(r, c) == b(r, c))) return false;
  return true;
}

// Product that skips zero entries; the gamma-matrix coefficients this engine
// multiplies all day are 4-sparse, so the generic kernel wastes most of its work.
inline Mat4 mat_mul_sparse(const Mat4& a, const Mat4& b) {
  Mat4 r = mat_zero();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < 4; ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        r(i, j) += aik * bkj;
      }
    }
  return r;
}

}  // namespace lle
