#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>

#include "lle/rational_function.hpp"

namespace lle {

// Element of the coefficient field K = Q(i)(m)[s] / (s^2 + i*m).
// Stored in the unique normal form a + b*s with a, b in Q(i)(m); the
// rewrite s^2 -> -i*m is applied on every multiplication, so equality
// is component-wise equality of reduced fractions.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int n) : a_(long(n)) {}
  Scalar(long n) : a_(n) {}
  Scalar(Rational r) : a_(GaussianRational(std::move(r))) {}
  Scalar(GaussianRational c) : a_(std::move(c)) {}
  Scalar(RatFun a) : a_(std::move(a)) {}
  Scalar(RatFun a, RatFun b) : a_(std::move(a)), b_(std::move(b)) {}

  static Scalar i() { return Scalar(GaussianRational::unit_i()); }
  static Scalar m(int exp = 1) { return Scalar(RatFun(Poly::var(exp))); }
  static Scalar s() { return Scalar(RatFun(), RatFun::one()); }
  static Scalar rat(long num, long den = 1) { return Scalar(make_rational(num, den)); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool has_s_part() const { return !b_.is_zero(); }

  const RatFun& s_free() const { return a_; }
  const RatFun& s_part() const { return b_; }

  Scalar inv() const;
  Scalar pow(int n) const;

  friend Scalar operator-(const Scalar& x) { return {-x.a_, -x.b_}; }
  friend Scalar operator+(const Scalar& x, const Scalar& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend Scalar operator-(const Scalar& x, const Scalar& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }
  friend bool operator==(const Scalar& x, const Scalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  Scalar& operator+=(const Scalar& y) {
    a_ += y.a_;
    b_ += y.b_;
    return *this;
  }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  // Evaluation at a numeric mass, with s mapped to the principal sqrt(-i*m).
  // Any branch is a field homomorphism; tests use it as a float oracle.
  std::complex<double> eval(const std::complex<double>& m) const;

  std::optional<Scalar> sqrt_exact() const;

 private:
  RatFun a_;
  RatFun b_;
};

// Report-grammar rendering, e.g. "1 + i/m*s". Parsed back by parse_scalar
// (operator_io.hpp); round-trips exactly.
std::string to_string(const Scalar& x);

}  // namespace lle
