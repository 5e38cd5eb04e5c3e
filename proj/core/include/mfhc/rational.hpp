#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "mfhc/half_integer.hpp"

namespace mfhc {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p/q" or "p"; GMP accepts both but does not canonicalize for us.
inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("cannot parse rational: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rational_str(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("rational " + r.get_str() + " is not an integer");
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("rational too large for long");
  return r.get_num().get_si();
}

inline Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (base == 0) throw std::domain_error("0 raised to a negative power");
    return Rational(1) / rational_pow(base, -e);
  }
  Rational out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  out.canonicalize();
  return out;
}

inline Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

inline Rational half_integer_to_rational(HalfInteger h) { return make_rational(h.twice, 2); }

}  // namespace mfhc
