#include "lle/catalog.hpp"

#include <stdexcept>

namespace lle {

int levi_civita(int j, int k, int n) {
  if (j == k || k == n || j == n) return 0;
  // even permutations of (1,2,3)
  if ((j == 1 && k == 2) || (j == 2 && k == 3) || (j == 3 && k == 1)) return 1;
  return -1;
}

DiffOperator build_lle(const GammaRep& rep) {
  const Scalar i = Scalar::i(), two_m = Scalar(2) * Scalar::m();
  DiffOperator omega;
  omega.add_term(Monomial::derivative(0), Scalar(-2) * i * rep.alpha());
  for (int j = 1; j <= 3; ++j) omega.add_term(Monomial::derivative(j), i * rep.gamma(j));
  omega.add_term(Monomial::unit(), two_m * rep.beta());
  return omega;
}

GeneratorCatalog::GeneratorCatalog(GammaRep rep) : rep_(std::move(rep)) {
  omega_ = build_lle(rep_);

  const Scalar i = Scalar::i();
  const Scalar im = i * Scalar::m();
  const Scalar s_inv = Scalar::s().inv();
  const Mat4 id = mat_identity();
  const DiffOperator dt = DiffOperator::derivative(0);
  const DiffOperator t = DiffOperator::coordinate(0);
  auto dx = [](int j) { return DiffOperator::derivative(j); };
  auto x = [](int j) { return DiffOperator::coordinate(j); };
  auto mat = [](const Mat4& m) { return DiffOperator::from_matrix(m); };
  auto smul = [](const Scalar& c, const Mat4& m) { return Mat4(c * m); };

  for (int j = 1; j <= 3; ++j) put("P" + std::to_string(j), dx(j));
  for (int j = 1; j <= 3; ++j) {
    DiffOperator g = t * dx(j);
    g += DiffOperator::term(Monomial::coordinate(j), smul(Scalar(2) * im, id));
    g += mat(mat_mul_sparse(rep_.alpha(), rep_.gamma(j)));
    put("G" + std::to_string(j), g);
  }
  put("M", DiffOperator::scalar_op(Scalar(2) * im));
  put("H", dt);

  DiffOperator euler;  // x_j d_j
  for (int j = 1; j <= 3; ++j) euler += x(j) * dx(j);
  DiffOperator d_op = Scalar(2) * (t * dt);
  d_op += euler;
  d_op += DiffOperator::scalar_op(Scalar(2));
  d_op -= mat(smul(Scalar(make_rational(1, 2)), mat_mul_sparse(rep_.gamma(0), rep_.gamma4())));
  put("D", d_op);

  // K = t D - t^2 d_t + i m x_j x_j + alpha x_j gamma_j, products expanded
  // by the engine in the written order.
  DiffOperator k_op = t * d_op;
  k_op -= (t * t) * dt;
  for (int j = 1; j <= 3; ++j) {
    k_op += DiffOperator::term(Monomial::coordinate(j, 2), smul(im, id));
    k_op += DiffOperator::term(Monomial::coordinate(j),
                               mat_mul_sparse(rep_.alpha(), rep_.gamma(j)));
  }
  put("K", k_op);

  for (int j = 1; j <= 3; ++j)
    for (int k = j + 1; k <= 3; ++k) {
      DiffOperator jjk = x(j) * dx(k);
      jjk -= x(k) * dx(j);
      jjk -= mat(smul(Scalar(make_rational(1, 2)), mat_mul_sparse(rep_.gamma(j), rep_.gamma(k))));
      put("J" + std::to_string(j) + std::to_string(k), jjk);
    }

  // Xt_j = -eps_jkn ( [alpha, gamma_k] d_n + (i m / 2) [gamma_k, gamma_n] )
  const Scalar im_half = im * Scalar(make_rational(1, 2));
  for (int j = 1; j <= 3; ++j) {
    DiffOperator xt;
    for (int k = 1; k <= 3; ++k)
      for (int n = 1; n <= 3; ++n) {
        int eps = levi_civita(j, k, n);
        if (eps == 0) continue;
        Mat4 ag = mat_mul_sparse(rep_.alpha(), rep_.gamma(k)) -
                  mat_mul_sparse(rep_.gamma(k), rep_.alpha());
        Mat4 gg = mat_mul_sparse(rep_.gamma(k), rep_.gamma(n)) -
                  mat_mul_sparse(rep_.gamma(n), rep_.gamma(k));
        xt -= DiffOperator::term(Monomial::derivative(n), smul(Scalar(eps), ag));
        xt -= mat(smul(Scalar(eps) * im_half, gg));
      }
    put("Xt" + std::to_string(j), xt);
  }

  // Odd sector: Q, S, X_j with s = sqrt(-i m).
  const Mat4 alpha_over_s = smul(s_inv, rep_.alpha());
  DiffOperator q = DiffOperator::term(Monomial::derivative(0), alpha_over_s);
  q += mat(smul(Scalar::s(), rep_.beta()));
  put("Q", q);

  DiffOperator dilat = t * dt;  // t d_t + x_j d_j + 3/2
  dilat += euler;
  dilat += DiffOperator::scalar_op(Scalar(make_rational(3, 2)));
  DiffOperator s_op = mat(alpha_over_s) * dilat;
  s_op += t * mat(smul(Scalar::s(), rep_.beta()));
  for (int j = 1; j <= 3; ++j)
    s_op += DiffOperator::term(Monomial::coordinate(j), smul(Scalar::s(), rep_.gamma(j)));
  put("S", s_op);

  for (int j = 1; j <= 3; ++j) {
    DiffOperator xj = DiffOperator::term(Monomial::derivative(j), alpha_over_s);
    xj += mat(smul(Scalar::s(), rep_.gamma(j)));
    put("X" + std::to_string(j), xj);
  }

  // Second-order set, built as the stated anticommutators.
  for (int j = 1; j <= 3; ++j)
    for (int k = j; k <= 3; ++k)
      put("Pt" + std::to_string(j) + std::to_string(k),
          anticommutator(at("P" + std::to_string(j)), at("P" + std::to_string(k))));
  for (int j = 1; j <= 3; ++j)
    for (int k = j; k <= 3; ++k)
      put("Gt" + std::to_string(j) + std::to_string(k),
          anticommutator(at("G" + std::to_string(j)), at("G" + std::to_string(k))));
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k)
      put("W" + std::to_string(j) + std::to_string(k),
          anticommutator(at("P" + std::to_string(j)), at("G" + std::to_string(k))));
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k)
      put("Y" + std::to_string(j) + std::to_string(k),
          anticommutator(at("P" + std::to_string(j)), at("X" + std::to_string(k))));
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k)
      put("Z" + std::to_string(j) + std::to_string(k),
          anticommutator(at("G" + std::to_string(j)), at("X" + std::to_string(k))));
}

void GeneratorCatalog::put(std::string name, DiffOperator op) {
  order_.push_back(name);
  ops_.emplace(std::move(name), std::move(op));
}

const DiffOperator& GeneratorCatalog::at(const std::string& name) const {
  auto it = ops_.find(name);
  if (it == ops_.end()) throw std::invalid_argument("unknown generator: " + name);
  return it->second;
}

}  // namespace lle
