#pragma once

#include <complex>
#include <string>
#include <utility>

#include "lle/rational.hpp"

namespace lle {

// Element of Q(i): re + im*i with rational components.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(long r) : re(r) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational n = norm();
    return {re / n, -im / n};
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  friend GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }
  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
    return x * y.inverse();
  }
  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re == y.re && x.im == y.im;
  }

  GaussianRational& operator+=(const GaussianRational& y) {
    re += y.re;
    im += y.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& y) { return *this = *this * y; }
};

// Square root in Q(i) when one exists.
bool gaussian_sqrt(const GaussianRational& z, GaussianRational& out);

}  // namespace lle
