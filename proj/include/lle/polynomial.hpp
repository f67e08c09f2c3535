#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "lle/gaussian.hpp"

namespace lle {

// Univariate polynomial in the mass symbol m over Q(i).
// Terms are kept sorted by ascending exponent with no zero coefficients,
// so equality is representation equality.
class Poly {
 public:
  using Term = std::pair<int, GaussianRational>;

  Poly() = default;
  Poly(GaussianRational c) {
    if (!c.is_zero()) terms_.emplace_back(0, std::move(c));
  }
  Poly(long n) : Poly(GaussianRational(n)) {}

  static Poly one() { return Poly(GaussianRational(1)); }
  static Poly var(int exp = 1) {
    Poly p;
    p.terms_.emplace_back(exp, GaussianRational(1));
    return p;
  }
  static Poly term(int exp, GaussianRational c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace_back(exp, std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one(); }
  int degree() const { return terms_.empty() ? -1 : terms_.back().first; }

  const GaussianRational& leading_coeff() const;
  GaussianRational coeff(int exp) const;
  const std::vector<Term>& terms() const { return terms_; }

  friend Poly operator-(const Poly& p);
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scaled(const GaussianRational& c) const;
  Poly shifted(int exp) const;  // multiply by m^exp

  // Euclidean division by a nonzero divisor: *this = q*d + r, deg r < deg d.
  std::pair<Poly, Poly> divrem(const Poly& d) const;

  // Monic gcd; gcd(0,0) = 0.
  static Poly gcd(Poly a, Poly b);

  // Divide by leading coefficient; optionally reports it.
  Poly monic(GaussianRational* lead = nullptr) const;

  Poly pow(int n) const;

  std::complex<double> eval(const std::complex<double>& m) const;

  // Exact square root if the polynomial is a perfect square over Q(i).
  std::optional<Poly> sqrt_exact() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace lle
