#pragma once

#include <complex>
#include <optional>
#include <utility>

#include "lle/polynomial.hpp"

namespace lle {

// Element of Q(i)(m), kept in canonical form: denominator monic and
// coprime to the numerator, zero stored as 0/1. A trivial denominator is
// stored as the empty polynomial so that zeros cost no allocations.
class RatFun {
 public:
  RatFun() = default;
  RatFun(Poly num) : num_(std::move(num)) {}
  RatFun(GaussianRational c) : num_(std::move(c)) {}
  RatFun(long n) : num_(n) {}
  RatFun(Poly num, Poly den);

  static RatFun one() { return RatFun(Poly::one()); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_zero(); }

  const Poly& num() const { return num_; }
  const Poly& den() const {
    static const Poly kOne = Poly::one();
    return den_.is_zero() ? kOne : den_;
  }
  bool den_is_one() const { return den_.is_zero(); }

  RatFun inverse() const;

  friend RatFun operator-(const RatFun& x);
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun& operator*=(const RatFun& b) { return *this = *this * b; }

  std::complex<double> eval(const std::complex<double>& m) const;

  std::optional<RatFun> sqrt_exact() const;

 private:
  Poly num_;
  Poly den_;
};

}  // namespace lle
