#pragma once

#include <complex>
#include <vector>

#include "mfhc/half_integer.hpp"
#include "mfhc/rational.hpp"

namespace mfhc {
namespace arith {

// Sum of divisors of n.
long sigma1(long n);

// Hurwitz class number H(D) for D >= 0 by enumeration of reduced
// positive-definite binary quadratic forms of discriminant -D, with the
// classes of x^2+y^2 and x^2+xy+y^2 weighted 1/2 and 1/3.  H(0) = -1/12 and
// H(D) = 0 when -D is not a discriminant.
Rational hurwitz(long D);

// H(0..D_max]; fans out across threads, each value independent.
std::vector<Rational> hurwitz_table(long D_max);

// Upper incomplete gamma Gamma(s, x) = int_x^inf e^-t t^(s-1) dt for x > 0
// (x = 0 allowed when s > 0), relative error ~1e-14 at desk scale.
double inc_gamma(double s, double x);

// Continuation to x < 0 with the branch x^s := e^{i pi s} |x|^s.  For
// positive integer s the value is real (the function is entire); nonpositive
// integer s with x < 0 is the excluded singular combination.
std::complex<double> inc_gamma_neg(double s, double x);

// Either sign of argument through one entry point.
std::complex<double> inc_gamma_any(double s, double x);

// e^x Gamma(s, x) for x > 0; stays representable for large x, where
// Gamma(s, x) itself underflows.  Term evaluation combines this with the
// q-power exponentials in log space.
double inc_gamma_scaled(double s, double x);

// beta_{3/2}(s) = int_1^inf e^{-st} t^{-3/2} dt = sqrt(s)*Gamma(-1/2, s) for
// s > 0, and 2 at s = 0.
double beta32(double s);

// W_k(x) = Re(Gamma(1-k, -2x)) for integral k, plus the case constant
// (-1)^{1-k} pi/(k-1)! when x > 0 and k >= 1.  For k <= 0 the constant is
// read through 1/Gamma(k) = 0, so the gamma term alone is the value.
double w_kernel(HalfInteger k, double x);

// theta(tau) = sum_n e^{2 pi i n^2 tau}, truncated so the dropped tail is
// below 1e-14.
std::complex<double> theta_eval(std::complex<double> tau);

bool is_fundamental_discriminant(long delta);

}  // namespace arith
}  // namespace mfhc
