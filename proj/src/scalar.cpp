#include "lle/scalar.hpp"

#include <algorithm>

namespace lle {

bool rational_sqrt(const Rational& q, Rational& out) {
  if (sgn(q) < 0) return false;
  if (sgn(q) == 0) {
    out = 0;
    return true;
  }
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  out = Rational(rn, rd);
  return true;
}

bool gaussian_sqrt(const GaussianRational& z, GaussianRational& out) {
  if (z.is_zero()) {
    out = GaussianRational();
    return true;
  }
  if (z.is_real()) {
    Rational r;
    if (sgn(z.re) > 0 && rational_sqrt(z.re, r)) {
      out = GaussianRational(r);
      return true;
    }
    if (sgn(z.re) < 0 && rational_sqrt(-z.re, r)) {
      out = GaussianRational(Rational(0), r);
      return true;
    }
    return false;
  }
  // (c + d i)^2 = z requires |z| rational and (re + |z|)/2 a rational square.
  Rational n;
  if (!rational_sqrt(z.norm(), n)) return false;
  Rational half = (z.re + n) / 2;
  Rational c;
  if (!rational_sqrt(half, c) || sgn(c) == 0) return false;
  Rational d = z.im / (2 * c);
  GaussianRational cand(c, d);
  if (cand * cand == z) {
    out = cand;
    return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Poly

const GaussianRational& Poly::leading_coeff() const {
  static const GaussianRational zero;
  return terms_.empty() ? zero : terms_.back().second;
}

GaussianRational Poly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return GaussianRational();
}

Poly operator-(const Poly& p) {
  Poly r = p;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      r.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->first < ia->first) {
      r.terms_.push_back(*ib++);
    } else {
      GaussianRational c = ia->second + ib->second;
      if (!c.is_zero()) r.terms_.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  Poly r;
  for (const auto& [ea, ca] : a.terms_) {
    Poly part;
    part.terms_.reserve(b.terms_.size());
    for (const auto& [eb, cb] : b.terms_) {
      GaussianRational c = ca * cb;
      if (!c.is_zero()) part.terms_.emplace_back(ea + eb, std::move(c));
    }
    r = r + part;
  }
  return r;
}

Poly Poly::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return Poly();
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::shifted(int exp) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.first += exp;
  return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
  if (d.is_zero()) throw DivisionByZero();
  Poly q, r = *this;
  const GaussianRational lc_inv = d.leading_coeff().inverse();
  const int dd = d.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    GaussianRational c = r.leading_coeff() * lc_inv;
    int e = r.degree() - dd;
    Poly t = Poly::term(e, c);
    q = q + t;
    r = r - d * t;
  }
  return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
  // Constants are units; shortcut the common cases before running Euclid.
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::one();
  while (!b.is_zero()) {
    Poly r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r).monic();
  }
  return a.monic();
}

Poly Poly::monic(GaussianRational* lead) const {
  if (is_zero()) {
    if (lead) *lead = GaussianRational(1);
    return *this;
  }
  GaussianRational lc = leading_coeff();
  if (lead) *lead = lc;
  if (lc.is_one()) return *this;
  return scaled(lc.inverse());
}

Poly Poly::pow(int n) const {
  Poly r = Poly::one(), base = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) r = r * base;
    if (n > 1) base = base * base;
  }
  return r;
}

std::complex<double> Poly::eval(const std::complex<double>& m) const {
  std::complex<double> acc(0.0);
  for (const auto& [e, c] : terms_) acc += c.to_complex() * std::pow(m, e);
  return acc;
}

std::optional<Poly> Poly::sqrt_exact() const {
  if (is_zero()) return Poly();
  int deg = degree();
  if (deg % 2 != 0) return std::nullopt;
  if (terms_.front().first % 2 != 0) return std::nullopt;
  GaussianRational lc2;
  if (!gaussian_sqrt(leading_coeff(), lc2)) return std::nullopt;
  // Build the candidate root from the top coefficient down.
  int half = deg / 2;
  Poly q = Poly::term(half, lc2);
  Poly q2 = q * q;
  const GaussianRational two_lc_inv = (GaussianRational(2) * lc2).inverse();
  for (int e = deg - 1; e >= half; --e) {
    GaussianRational c = (coeff(e) - q2.coeff(e)) * two_lc_inv;
    if (c.is_zero()) continue;
    Poly t = Poly::term(e - half, c);
    q2 = q2 + (q * t).scaled(GaussianRational(2)) + t * t;
    q = q + t;
  }
  if (q2 == *this) return q;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// RatFun

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero() || den_.is_one()) {
    den_ = Poly();
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divrem(g).first;
    den_ = den_.divrem(g).first;
  }
  GaussianRational lc;
  den_ = den_.monic(&lc);
  if (!lc.is_one()) num_ = num_.scaled(lc.inverse());
  if (den_.is_one()) den_ = Poly();
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatFun(den(), num_);
}

RatFun operator-(const RatFun& x) {
  RatFun r = x;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_zero()) {
      RatFun r(a.num_ + b.num_);
      return r;
    }
    return RatFun(a.num_ + b.num_, a.den_);
  }
  return RatFun(a.num_ * b.den() + b.num_ * a.den(), a.den() * b.den());
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.den_is_one() && b.den_is_one()) {
    RatFun r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  // Cross-reduce first to keep intermediate degrees down.
  Poly g1 = Poly::gcd(a.num_, b.den());
  Poly g2 = Poly::gcd(b.num_, a.den());
  Poly n1 = g1.is_one() ? a.num_ : a.num_.divrem(g1).first;
  Poly d2 = g1.is_one() ? b.den() : b.den().divrem(g1).first;
  Poly n2 = g2.is_one() ? b.num_ : b.num_.divrem(g2).first;
  Poly d1 = g2.is_one() ? a.den() : a.den().divrem(g2).first;
  return RatFun(n1 * n2, d1 * d2);
}

std::complex<double> RatFun::eval(const std::complex<double>& m) const {
  std::complex<double> n = num_.eval(m);
  return den_is_one() ? n : n / den_.eval(m);
}

std::optional<RatFun> RatFun::sqrt_exact() const {
  auto n = num_.sqrt_exact();
  if (!n) return std::nullopt;
  auto d = den().sqrt_exact();
  if (!d) return std::nullopt;
  return RatFun(std::move(*n), std::move(*d));
}

// ---------------------------------------------------------------------------
// Scalar

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (x.is_zero() || y.is_zero()) return Scalar();
  if (!x.has_s_part() && !y.has_s_part()) return Scalar(x.a_ * y.a_);
  // (a + b s)(c + d s) = (ac - i m b d) + (ad + bc) s
  static const RatFun minus_im = RatFun(Poly::var().scaled(GaussianRational(Rational(0), Rational(-1))));
  RatFun a = x.a_ * y.a_ + minus_im * (x.b_ * y.b_);
  RatFun b = x.a_ * y.b_ + x.b_ * y.a_;
  return {std::move(a), std::move(b)};
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (!has_s_part()) return Scalar(a_.inverse());
  // 1/(a + b s) = (a - b s) / (a^2 + i m b^2); the norm is nonzero because
  // s^2 = -i m is not a square in Q(i)(m).
  RatFun im = RatFun(Poly::var().scaled(GaussianRational::unit_i()));
  RatFun norm = a_ * a_ + im * (b_ * b_);
  RatFun ninv = norm.inverse();
  return {a_ * ninv, -(b_ * ninv)};
}

Scalar Scalar::pow(int n) const {
  if (n < 0) return inv().pow(-n);
  Scalar r(1), base = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) r = r * base;
    if (n > 1) base = base * base;
  }
  return r;
}

std::complex<double> Scalar::eval(const std::complex<double>& m) const {
  const std::complex<double> s = std::sqrt(std::complex<double>(0.0, -1.0) * m);
  return a_.eval(m) + b_.eval(m) * s;
}

std::optional<Scalar> Scalar::sqrt_exact() const {
  if (is_zero()) return Scalar();
  const RatFun im = RatFun(Poly::var().scaled(GaussianRational::unit_i()));
  if (b_.is_zero()) {
    if (auto r = a_.sqrt_exact()) return Scalar(*r);
    // Maybe a pure s-multiple squares to it: (x s)^2 = -i m x^2.
    if (auto r = (a_ / (-im)).sqrt_exact()) return Scalar(RatFun(), *r);
    return std::nullopt;
  }
  // x0^2 solves y^2 - a y - i m b^2 / 4 = 0.
  RatFun disc = a_ * a_ + im * (b_ * b_);
  auto sd = disc.sqrt_exact();
  if (!sd) return std::nullopt;
  const RatFun half = RatFun(GaussianRational(make_rational(1, 2)));
  for (const RatFun& y : {(a_ + *sd) * half, (a_ - *sd) * half}) {
    auto x0 = y.sqrt_exact();
    if (!x0 || x0->is_zero()) continue;
    RatFun x1 = b_ * (*x0 + *x0).inverse();
    Scalar cand(*x0, std::move(x1));
    if (cand * cand == *this) return cand;
  }
  return std::nullopt;
}

}  // namespace lle
