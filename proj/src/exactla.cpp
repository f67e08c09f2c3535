#include "lle/exactla.hpp"

namespace lle {

RrefResult rref(KMatrix a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  Eigen::Index lead = 0;
  for (Eigen::Index col = 0; col < cols && lead < rows; ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index r = lead; r < rows; ++r) {
      if (!a(r, col).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != lead) a.row(p).swap(a.row(lead));
    Scalar inv = a(lead, col).inv();
    for (Eigen::Index c = col; c < cols; ++c) a(lead, c) = inv * a(lead, c);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const Scalar f = a(r, col);
      if (f.is_zero()) continue;
      for (Eigen::Index c = col; c < cols; ++c) a(r, c) -= f * a(lead, c);
    }
    pivots.push_back(static_cast<int>(col));
    ++lead;
  }
  return {std::move(a), static_cast<int>(pivots.size()), std::move(pivots)};
}

SolutionSpace solve(const KMatrix& a, const KVector& b) {
  if (a.rows() != b.rows())
    throw DimensionMismatch("solve: A has " + std::to_string(a.rows()) + " rows, b has " +
                            std::to_string(b.rows()));
  const Eigen::Index rows = a.rows(), cols = a.cols();
  KMatrix aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  RrefResult red = rref(std::move(aug));

  SolutionSpace out;
  bool inconsistent = !red.pivot_cols.empty() && red.pivot_cols.back() == static_cast<int>(cols);
  std::vector<int> pivots = red.pivot_cols;
  if (inconsistent) pivots.pop_back();
  out.rank = static_cast<int>(pivots.size());

  std::vector<int> pivot_of_col(cols, -1);
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i) pivot_of_col[pivots[i]] = i;

  if (!inconsistent) {
    KVector x = KVector::Constant(cols, Scalar(0));
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) x(pivots[i]) = red.mat(i, cols);
    out.particular = std::move(x);
  }
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    KVector n = KVector::Constant(cols, Scalar(0));
    n(free_col) = Scalar(1);
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
      n(pivots[i]) = -red.mat(i, free_col);
    out.nullspace.push_back(std::move(n));
  }
  return out;
}

std::optional<KVector> in_span(const KVector& v, const std::vector<KVector>& basis) {
  const Eigen::Index n = v.rows();
  for (const auto& b : basis)
    if (b.rows() != n) throw DimensionMismatch("in_span: vector lengths differ");
  KMatrix a(n, static_cast<Eigen::Index>(basis.size()));
  for (Eigen::Index j = 0; j < a.cols(); ++j) a.col(j) = basis[j];
  SolutionSpace s = solve(a, v);
  if (!s.consistent()) return std::nullopt;
  return s.particular;
}

}  // namespace lle
