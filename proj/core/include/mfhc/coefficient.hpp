#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "mfhc/half_integer.hpp"
#include "mfhc/rational.hpp"

namespace mfhc {
namespace qexp {

// re + i*im with exact rational parts.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const GaussianRational&) const = default;
};

// A basis monomial pi^(pi_pow) * sqrt(radicand); radicand is squarefree >= 1.
// The pair (0, 1) is the rational unit.
struct CoeffMonomial {
  HalfInteger pi_pow;
  long radicand = 1;
  auto operator<=>(const CoeffMonomial&) const = default;
};

// Exact element of the ring generated by Q(i), half-integer powers of pi and
// square roots of squarefree positive integers.  Values are finite sums of
// monomials with Gaussian-rational scalars; products of radicals normalize by
// extracting integer square factors, so equality is canonical.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(const Rational& r);  // implicit, rationals embed in the ring
  Coefficient(long n) : Coefficient(Rational(n)) {}
  Coefficient(int n) : Coefficient(Rational(n)) {}

  static Coefficient gaussian(const Rational& re, const Rational& im);
  static Coefficient imaginary_unit() { return gaussian(0, 1); }
  static Coefficient i_pow(long e);               // i^e, e may be negative
  static Coefficient pi_pow(HalfInteger s);       // pi^s
  static Coefficient sqrt_int(long n);            // sqrt(n), n >= 1
  static Coefficient sqrt_rational(const Rational& r);  // sqrt(r), r > 0
  // (4*pi*ell)^s with the branch (-1)^s := e^{i pi s} when ell < 0.
  static Coefficient four_pi_ell_pow(HalfInteger s, const Rational& ell);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  Coefficient conj() const;
  std::complex<double> to_complex() const;

  Coefficient operator-() const;
  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }
  bool operator==(const Coefficient&) const = default;

  const std::map<CoeffMonomial, GaussianRational>& monomials() const { return terms_; }
  std::string str() const;

 private:
  void add(const CoeffMonomial& key, const GaussianRational& value);
  std::map<CoeffMonomial, GaussianRational> terms_;  // zero values never stored
};

inline Coefficient operator*(const Rational& r, const Coefficient& c) { return Coefficient(r) * c; }

std::string gaussian_str(const GaussianRational& g);

}  // namespace qexp
}  // namespace mfhc
