#include "lle/diff_operator.hpp"

#include <vector>

namespace lle {

std::string to_string(const Monomial& m) {
  static const char* names[kAxes] = {"t", "x1", "x2", "x3"};
  static const char* dnames[kAxes] = {"dt", "d1", "d2", "d3"};
  std::string out;
  auto emit = [&out](const char* sym, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += sym;
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (int a = 0; a < kAxes; ++a) emit(names[a], m.coord[a]);
  for (int a = 0; a < kAxes; ++a) emit(dnames[a], m.deriv[a]);
  return out.empty() ? "1" : out;
}

DiffOperator DiffOperator::scalar_op(const Scalar& c) {
  Mat4 m = mat_zero();
  for (int k = 0; k < 4; ++k) m(k, k) = c;
  return from_matrix(m);
}

DiffOperator DiffOperator::from_matrix(const Mat4& m) { return term(Monomial::unit(), m); }

DiffOperator DiffOperator::term(const Monomial& mono, const Mat4& m) {
  DiffOperator op;
  op.add_term(mono, m);
  return op;
}

int DiffOperator::max_derivative_order() const {
  int d = 0;
  for (const auto& [mono, mat] : terms_) d = std::max(d, mono.derivative_order());
  return d;
}

int DiffOperator::max_coordinate_degree() const {
  int d = 0;
  for (const auto& [mono, mat] : terms_) d = std::max(d, mono.coordinate_degree());
  return d;
}

bool DiffOperator::is_constant_coefficient() const {
  for (const auto& [mono, mat] : terms_)
    if (mono.coordinate_degree() > 0) return false;
  return true;
}

Mat4 DiffOperator::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? mat_zero() : it->second;
}

void DiffOperator::add_term(const Monomial& mono, const Mat4& m) {
  if (lle::is_zero(m)) return;
  auto [it, inserted] = terms_.try_emplace(mono, m);
  if (!inserted) {
    it->second += m;
    if (lle::is_zero(it->second)) terms_.erase(it);
  }
}

void DiffOperator::add_scaled(const Scalar& c, const DiffOperator& other) {
  if (c.is_zero()) return;
  for (const auto& [mono, mat] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(mono, mat_zero());
    for (int col = 0; col < 4; ++col)
      for (int row = 0; row < 4; ++row)
        if (!mat(row, col).is_zero()) it->second(row, col) += c * mat(row, col);
    if (lle::is_zero(it->second)) terms_.erase(it);
  }
}

DiffOperator operator-(const DiffOperator& x) {
  DiffOperator r;
  for (const auto& [mono, mat] : x.terms_) r.terms_.emplace(mono, -mat);
  return r;
}

DiffOperator operator+(const DiffOperator& x, const DiffOperator& y) {
  DiffOperator r = x;
  r += y;
  return r;
}

DiffOperator operator-(const DiffOperator& x, const DiffOperator& y) {
  DiffOperator r = x;
  r -= y;
  return r;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& y) {
  for (const auto& [mono, mat] : y.terms_) add_term(mono, mat);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& y) {
  for (const auto& [mono, mat] : y.terms_) add_term(mono, -mat);
  return *this;
}

DiffOperator operator*(const Scalar& c, const DiffOperator& x) {
  DiffOperator r;
  r.add_scaled(c, x);
  return r;
}

bool operator==(const DiffOperator& x, const DiffOperator& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  auto ix = x.terms_.begin();
  auto iy = y.terms_.begin();
  for (; ix != x.terms_.end(); ++ix, ++iy) {
    if (!(ix->first == iy->first)) return false;
    if (!exact_equal(ix->second, iy->second)) return false;
  }
  return true;
}

namespace {

// Binomial table; exponents stay tiny in every sweep this engine runs.
long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
  return r;
}

long factorial(int n) {
  long r = 1;
  for (int j = 2; j <= n; ++j) r *= j;
  return r;
}

// Distribute d^n z^m = sum_k k! C(n,k) C(m,k) z^(m-k) d^(n-k) over all
// four coordinates, accumulating into `out` with the fixed matrix coefficient.
void emit_normal_ordered(const Monomial& left, const Monomial& right, const Mat4& coeff,
                         DiffOperator& out) {
  std::array<int, kAxes> kmax{};
  for (int a = 0; a < kAxes; ++a) kmax[a] = std::min<int>(left.deriv[a], right.coord[a]);

  std::array<int, kAxes> k{};
  for (;;) {
    long factor = 1;
    for (int a = 0; a < kAxes; ++a)
      factor *= factorial(k[a]) * binom(left.deriv[a], k[a]) * binom(right.coord[a], k[a]);
    Monomial mono;
    for (int a = 0; a < kAxes; ++a) {
      mono.coord[a] = static_cast<int16_t>(left.coord[a] + right.coord[a] - k[a]);
      mono.deriv[a] = static_cast<int16_t>(left.deriv[a] + right.deriv[a] - k[a]);
    }
    if (factor == 1) {
      out.add_term(mono, coeff);
    } else {
      Mat4 scaled = mat_zero();
      Scalar f = Scalar(factor);
      for (int col = 0; col < 4; ++col)
        for (int row = 0; row < 4; ++row)
          if (!coeff(row, col).is_zero()) scaled(row, col) = f * coeff(row, col);
      out.add_term(mono, scaled);
    }
    int a = 0;
    while (a < kAxes && k[a] == kmax[a]) k[a++] = 0;
    if (a == kAxes) break;
    ++k[a];
  }
}

}  // namespace

DiffOperator operator*(const DiffOperator& x, const DiffOperator& y) {
  DiffOperator r;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      Mat4 coeff = mat_mul_sparse(cx, cy);
      if (lle::is_zero(coeff)) continue;
      emit_normal_ordered(mx, my, coeff, r);
    }
  }
  return r;
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) { return a * b - b * a; }

DiffOperator anticommutator(const DiffOperator& a, const DiffOperator& b) { return a * b + b * a; }

BracketKind graded_kind(GradedDegree deg_a, GradedDegree deg_b) {
  return deg_a.dot(deg_b) ? BracketKind::Anticommutator : BracketKind::Commutator;
}

DiffOperator graded_bracket(const DiffOperator& a, GradedDegree deg_a, const DiffOperator& b,
                            GradedDegree deg_b) {
  return graded_kind(deg_a, deg_b) == BracketKind::Commutator ? commutator(a, b)
                                                              : anticommutator(a, b);
}

}  // namespace lle
