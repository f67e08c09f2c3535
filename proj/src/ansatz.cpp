#include "lle/ansatz.hpp"

#include <functional>

#include "lle/operator_span.hpp"

namespace lle {

namespace {

std::vector<Monomial> ansatz_monomials(int deriv_order, int coord_degree) {
  std::vector<Monomial> out;
  std::array<int16_t, kAxes> c{}, d{};
  // enumerate coordinate exponents with total degree <= coord_degree,
  // derivative exponents with total order <= deriv_order
  for (c[0] = 0; c[0] <= coord_degree; ++c[0])
    for (c[1] = 0; c[0] + c[1] <= coord_degree; ++c[1])
      for (c[2] = 0; c[0] + c[1] + c[2] <= coord_degree; ++c[2])
        for (c[3] = 0; c[0] + c[1] + c[2] + c[3] <= coord_degree; ++c[3])
          for (d[0] = 0; d[0] <= deriv_order; ++d[0])
            for (d[1] = 0; d[0] + d[1] <= deriv_order; ++d[1])
              for (d[2] = 0; d[0] + d[1] + d[2] <= deriv_order; ++d[2])
                for (d[3] = 0; d[0] + d[1] + d[2] + d[3] <= deriv_order; ++d[3]) {
                  Monomial m;
                  m.coord = c;
                  m.deriv = d;
                  out.push_back(m);
                }
  std::sort(out.begin(), out.end());
  return out;
}

DiffOperator unit_op(const Monomial& mono, int row, int col, const Scalar& value) {
  Mat4 u = mat_zero();
  u(row, col) = value;
  return DiffOperator::term(mono, u);
}

// Kernel of c -> sum_i c_i columns[i], as coefficient vectors.
std::vector<std::vector<Scalar>> column_kernel(const std::vector<DiffOperator>& columns) {
  OperatorSpan span;
  for (const auto& col : columns) span.insert(col);
  return span.kernel();
}

std::vector<DiffOperator> combine(const std::vector<DiffOperator>& basis,
                                  const std::vector<std::vector<Scalar>>& coeffs) {
  std::vector<DiffOperator> out;
  out.reserve(coeffs.size());
  for (const auto& k : coeffs) {
    DiffOperator acc;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!k[i].is_zero()) acc.add_scaled(k[i], basis[i]);
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

AnsatzSolution solve_symmetry_ansatz(const DiffOperator& omega, BracketKind kind,
                                     AnsatzBounds bounds) {
  AnsatzSolution sol;
  sol.kind = kind;
  sol.bounds = bounds;

  std::vector<Monomial> op_monos = ansatz_monomials(bounds.derivative_order, bounds.coord_degree);
  std::vector<Monomial> mult_monos = ansatz_monomials(0, bounds.multiplier_degree);

  struct Column {
    bool is_multiplier;
    Monomial mono;
    int row, col;
  };
  std::vector<Column> columns;
  OperatorSpan span;
  auto push = [&](bool is_mult, const Monomial& mono, int row, int col, DiffOperator image) {
    columns.push_back({is_mult, mono, row, col});
    span.insert(image);
  };

  // Multiplier unknowns first: their images are -(monomial E_rc) * Omega.
  for (const auto& mono : mult_monos)
    for (int row = 0; row < 4; ++row)
      for (int col = 0; col < 4; ++col)
        push(true, mono, row, col, -(unit_op(mono, row, col, Scalar(1)) * omega));
  for (const auto& mono : op_monos)
    for (int row = 0; row < 4; ++row)
      for (int col = 0; col < 4; ++col) {
        DiffOperator u = unit_op(mono, row, col, Scalar(1));
        DiffOperator image =
            kind == BracketKind::Commutator ? commutator(omega, u) : anticommutator(omega, u);
        push(false, mono, row, col, std::move(image));
      }

  for (const auto& k : span.kernel()) {
    DiffOperator a;
    for (std::size_t u = 0; u < columns.size(); ++u) {
      if (columns[u].is_multiplier || k[u].is_zero()) continue;
      a += unit_op(columns[u].mono, columns[u].row, columns[u].col, k[u]);
    }
    if (!a.is_zero()) sol.basis.push_back(std::move(a));
  }
  sol.dimension = static_cast<int>(sol.basis.size());
  return sol;
}

UniquenessVerdict supercharge_uniqueness(const GeneratorCatalog& catalog, AnsatzBounds bounds,
                                         int residual_cap) {
  UniquenessVerdict verdict;
  verdict.bounds = bounds;

  AnsatzSolution anti = solve_symmetry_ansatz(catalog.omega(), BracketKind::Anticommutator, bounds);
  std::vector<DiffOperator> space = anti.basis;
  verdict.stages.push_back({"anticommutator certificate", static_cast<int>(space.size())});
  verdict.stage_bases.push_back(space);

  // Linear constraints, applied one at a time to the running basis.
  struct Constraint {
    std::string name;
    std::function<DiffOperator(const DiffOperator&)> map;
  };
  const DiffOperator& d_op = catalog.at("D");
  const DiffOperator& q_op = catalog.at("Q");
  std::vector<Constraint> constraints;
  constraints.push_back(
      {"[D, Qbar] = -Qbar", [&](const DiffOperator& v) { return commutator(d_op, v) + v; }});
  for (const char* j : {"J12", "J13", "J23"}) {
    const DiffOperator& jop = catalog.at(j);
    constraints.push_back({std::string("[") + j + ", Qbar] = 0",
                           [&jop](const DiffOperator& v) { return commutator(jop, v); }});
  }
  constraints.push_back(
      {"{Q, Qbar} = 0", [&](const DiffOperator& v) { return anticommutator(q_op, v); }});

  for (const auto& constraint : constraints) {
    std::vector<DiffOperator> images;
    images.reserve(space.size());
    for (const auto& b : space) images.push_back(constraint.map(b));
    space = combine(space, column_kernel(images));
    verdict.stages.push_back({constraint.name, static_cast<int>(space.size())});
    verdict.stage_bases.push_back(space);
  }

  const int r = static_cast<int>(space.size());
  const DiffOperator target = Scalar(2) * catalog.at("H");

  if (r == 0) {
    // Only Qbar = 0 remains and it misses the normalization.
    verdict.conclusive = true;
    verdict.exists = target.is_zero();
    verdict.stages.push_back({"{Qbar, Qbar} = 2H", 0});
    return verdict;
  }
  if (r > residual_cap) {
    verdict.note = "residual space dimension " + std::to_string(r) +
                   " exceeds the quadratic-stage cap " + std::to_string(residual_cap);
    return verdict;
  }

  // Linearize the products mu_ij = c_i c_j (i <= j) and solve
  //   sum_i mu_ii {B_i,B_i} + sum_{i<j} 2 mu_ij {B_i,B_j} = 2H.
  std::vector<std::pair<int, int>> pairs;
  std::vector<DiffOperator> cols;
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      pairs.emplace_back(i, j);
      DiffOperator br = anticommutator(space[i], space[j]);
      cols.push_back(i == j ? br : Scalar(2) * br);
    }
  OperatorSpan span;
  int dependent = 0;
  for (const auto& c : cols)
    if (!span.insert(c)) ++dependent;
  auto mu = span.reduce(target);
  if (!mu) {
    verdict.conclusive = true;
    verdict.exists = false;
    verdict.stages.push_back({"{Qbar, Qbar} = 2H", 0});
    return verdict;
  }
  if (dependent > 0) {
    verdict.note = "quadratic stage has a positive-dimensional multiplier family";
    return verdict;
  }

  // Unique mu: it must factor as an outer square mu = c c^T.
  auto mu_at = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (pairs[p] == std::make_pair(i, j)) return (*mu)[p];
    return Scalar(0);
  };
  int pivot = -1;
  for (int i = 0; i < r && pivot < 0; ++i)
    if (!mu_at(i, i).is_zero()) pivot = i;
  if (pivot < 0) {
    // all c_i^2 vanish, so c = 0, contradicting a nonzero right-hand side
    verdict.conclusive = true;
    verdict.exists = false;
    verdict.stages.push_back({"{Qbar, Qbar} = 2H", 0});
    return verdict;
  }
  auto root = mu_at(pivot, pivot).sqrt_exact();
  if (!root) {
    verdict.conclusive = true;
    verdict.exists = false;
    verdict.note = "normalization requires a square root that does not exist in the field";
    verdict.stages.push_back({"{Qbar, Qbar} = 2H", 0});
    return verdict;
  }
  std::vector<Scalar> c(r, Scalar(0));
  c[pivot] = *root;
  Scalar inv = root->inv();
  for (int i = 0; i < r; ++i)
    if (i != pivot) c[i] = mu_at(pivot, i) * inv;
  bool consistent = true;
  for (int i = 0; i < r && consistent; ++i)
    for (int j = i; j < r && consistent; ++j) consistent = (c[i] * c[j] == mu_at(i, j));
  verdict.conclusive = true;
  if (!consistent) {
    verdict.exists = false;
    verdict.stages.push_back({"{Qbar, Qbar} = 2H", 0});
    return verdict;
  }
  DiffOperator qbar;
  for (int i = 0; i < r; ++i)
    if (!c[i].is_zero()) qbar.add_scaled(c[i], space[i]);
  verdict.exists = true;
  verdict.solutions.push_back(std::move(qbar));
  verdict.stages.push_back({"{Qbar, Qbar} = 2H", 1});
  return verdict;
}

}  // namespace lle
