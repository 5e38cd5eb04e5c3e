#include "mfhc/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "mfhc/errors.hpp"

namespace mfhc {
namespace arith {

namespace {
constexpr double kPi = std::numbers::pi;
}

long sigma1(long n) {
  if (n <= 0) throw std::domain_error("sigma1 needs n >= 1");
  long acc = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    acc += d;
    if (d != n / d) acc += n / d;
  }
  return acc;
}

Rational hurwitz(long D) {
  if (D < 0) throw std::domain_error("hurwitz needs D >= 0");
  if (D == 0) return make_rational(-1, 12);
  const long m = D % 4;
  if (m == 1 || m == 2) return Rational(0);

  // Reduced forms a x^2 + b x y + c y^2, b^2 - 4ac = -D, |b| <= a <= c,
  // and b >= 0 whenever a == c or |b| == a.
  Rational acc(0);
  for (long b = (D % 2 == 0) ? 0 : 1; b * b <= D / 3; b += 2) {
    const long heads = (b == 0) ? 1 : 2;  // b and -b
    const long num = (b * b + D) / 4;     // = a*c
    for (long a = std::max<long>(b, 1); a * a <= num; ++a) {
      if (num % a != 0) continue;
      const long c = num / a;
      for (long sign = 0; sign < heads; ++sign) {
        const long bb = (sign == 0) ? b : -b;
        if (bb < 0 && (a == c || bb == -a)) continue;  // excluded by reduction
        if (bb == 0 && a == c)
          acc += make_rational(1, 2);  // proportional to x^2 + y^2
        else if (a == bb && a == c)
          acc += make_rational(1, 3);  // proportional to x^2 + xy + y^2
        else
          acc += 1;
      }
    }
  }
  return acc;
}

std::vector<Rational> hurwitz_table(long D_max) {
  if (D_max < 0) throw std::domain_error("hurwitz_table needs D_max >= 0");
  std::vector<Rational> out(static_cast<std::size_t>(D_max) + 1);
  const unsigned n_threads = std::max(1u, std::thread::hardware_concurrency());
  if (D_max < 64 || n_threads == 1) {
    for (long D = 0; D <= D_max; ++D) out[static_cast<std::size_t>(D)] = hurwitz(D);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n_threads; ++t) {
    pool.emplace_back([&, t] {
      for (long D = static_cast<long>(t); D <= D_max; D += n_threads)
        out[static_cast<std::size_t>(D)] = hurwitz(D);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

namespace {

// Continued fraction for Gamma(s, x) = e^{-x} x^s h(s, x), modified Lentz.
// Valid for x > 0 and any real s; used when x dominates s.
double upper_gamma_cf_h(double s, double x) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 2000; ++i) {
    const double an = -static_cast<double>(i) * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= eps) break;
  }
  return h;
}

double upper_gamma_cf(double s, double x) {
  return std::exp(-x + s * std::log(x)) * upper_gamma_cf_h(s, x);
}

// Lower series for gamma(s, x)/x^s e^-x scaling, s > 0, x <= s + 1.
double lower_gamma_series(double s, double x) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double ap = s;
  double del = 1.0 / s;
  double sum = del;
  for (int i = 0; i < 2000; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * eps) break;
  }
  return sum * std::exp(-x + s * std::log(x));
}

}  // namespace

double inc_gamma(double s, double x) {
  if (x < 0) throw std::domain_error("inc_gamma: use inc_gamma_neg for x < 0");
  if (x == 0) {
    if (s <= 0) throw std::domain_error("Gamma(s, 0) diverges for s <= 0");
    return std::tgamma(s);
  }
  if (x >= s + 1.0 && x >= 1.0) return upper_gamma_cf(s, x);
  if (s > 0) return std::tgamma(s) - lower_gamma_series(s, x);
  if (std::rint(s) == s) {
    // Base case Gamma(0, x) = -euler_gamma - ln x - sum_{n>=1} (-x)^n/(n n!),
    // then walk down; the recurrence parameter stays away from 0.
    constexpr double euler_gamma = 0.57721566490153286060651209008;
    double series = 0.0;
    double term = 1.0;  // (-x)^n / n!
    for (int n = 1; n < 500; ++n) {
      term *= -x / n;
      const double add = term / n;
      series += add;
      if (std::fabs(add) < 1e-18 * std::max(1.0, std::fabs(series)) && n > x) break;
    }
    double g = -euler_gamma - std::log(x) - series;
    for (long t = -1; t >= static_cast<long>(std::rint(s)); --t)
      g = (g - std::pow(x, static_cast<double>(t)) * std::exp(-x)) / static_cast<double>(t);
    return g;
  }
  // Shift s into (0, 1] and walk back down with
  // Gamma(s, x) = (Gamma(s+1, x) - x^s e^-x) / s.
  const long m = static_cast<long>(std::floor(-s)) + 1;
  double g = inc_gamma(s + static_cast<double>(m), x);
  for (long j = 1; j <= m; ++j) {
    const double t = s + static_cast<double>(m - j);
    g = (g - std::pow(x, t) * std::exp(-x)) / t;
  }
  return g;
}

double inc_gamma_scaled(double s, double x) {
  if (x <= 0) throw std::domain_error("inc_gamma_scaled needs x > 0");
  if (x >= s + 1.0 && x >= 1.0) return std::exp(s * std::log(x)) * upper_gamma_cf_h(s, x);
  return std::exp(x) * inc_gamma(s, x);  // x stays small here, no overflow
}

std::complex<double> inc_gamma_neg(double s, double x) {
  if (x >= 0) throw std::domain_error("inc_gamma_neg needs x < 0");
  const double w = -x;
  const bool s_is_integer = std::rint(s) == s;
  if (s_is_integer && s >= 1) {
    // Entire in x for positive integer s: Gamma(n, x) = (n-1)! e^-x sum_{j<n} x^j/j!.
    const long n = static_cast<long>(std::rint(s));
    double sum = 0.0;
    double term = 1.0;  // x^j / j!
    for (long j = 0; j < n; ++j) {
      sum += term;
      term *= x / static_cast<double>(j + 1);
    }
    double fact = 1.0;
    for (long j = 2; j < n; ++j) fact *= static_cast<double>(j);
    return {fact * std::exp(-x) * sum, 0.0};
  }
  if (s_is_integer) {
    // s <= 0.  Base case Gamma(0, x) = -euler_gamma - log(x) - sum (-x)^n/(n n!)
    // with log(x) = log|x| + i pi on the chosen branch, then walk down via
    // Gamma(s-1, x) = (Gamma(s, x) - x^{s-1} e^-x) / (s - 1).
    double series = 0.0;
    double term = 1.0;  // w^n / n!
    for (int n = 1; n < 5000; ++n) {
      term *= w / n;
      const double add = term / n;
      series += add;
      if (std::fabs(add) < std::fabs(series) * 1e-18 && n > w) break;
    }
    constexpr double euler_gamma = 0.57721566490153286060651209008;
    std::complex<double> g(-euler_gamma - std::log(w) - series, -kPi);
    const long m = -static_cast<long>(std::rint(s));
    for (long j = 1; j <= m; ++j) {
      const double t = -static_cast<double>(j);  // target parameter
      g = (g - std::pow(x, t) * std::exp(-x)) / t;
    }
    return g;
  }
  // Gamma(s, x) = Gamma(s) - gamma(s, x) with
  // gamma(s, -w) = e^{i pi s} sum_{n>=0} w^{s+n} / (n! (s+n)); the summands of
  // the real series are eventually all positive, so no cancellation.
  double term = std::pow(w, s);  // w^s / 0!
  double sum = term / s;
  for (int n = 1; n < 5000; ++n) {
    term *= w / static_cast<double>(n);
    const double add = term / (s + n);
    sum += add;
    if (std::fabs(add) < std::fabs(sum) * 1e-18 && n > w) break;
  }
  const std::complex<double> branch = std::polar(1.0, kPi * s);
  return std::complex<double>(std::tgamma(s), 0.0) - branch * sum;
}

std::complex<double> inc_gamma_any(double s, double x) {
  if (x >= 0) return {inc_gamma(s, x), 0.0};
  return inc_gamma_neg(s, x);
}

double beta32(double s) {
  if (s < 0) throw std::domain_error("beta32 needs s >= 0");
  if (s == 0) return 2.0;
  return std::sqrt(s) * inc_gamma(-0.5, s);
}

double w_kernel(HalfInteger k, double x) {
  if (!k.is_integral())
    throw WeightError("w_kernel is integral-weight only; half-integral weights keep gamma atoms");
  if (x == 0) throw std::domain_error("w_kernel needs x != 0");
  const double s = 1.0 - static_cast<double>(k.as_int());
  // Re of the fixed-branch value; the displayed case constant is exactly the
  // discarded imaginary contribution and vanishes for k <= 0.
  return inc_gamma_any(s, -2.0 * x).real();
}

std::complex<double> theta_eval(std::complex<double> tau) {
  if (tau.imag() <= 0) throw std::domain_error("theta_eval needs Im tau > 0");
  const double v = tau.imag();
  const long N = static_cast<long>(std::ceil(std::sqrt(34.0 / (2.0 * kPi * v)))) + 2;
  std::complex<double> acc{1.0, 0.0};
  for (long n = 1; n <= N; ++n) {
    const std::complex<double> e =
        std::exp(std::complex<double>(0.0, 2.0 * kPi) * static_cast<double>(n) *
                 static_cast<double>(n) * tau);
    acc += 2.0 * e;
  }
  return acc;
}

bool is_fundamental_discriminant(long delta) {
  if (delta == 0 || delta == 1) return false;
  auto squarefree = [](long n) {
    n = std::labs(n);
    for (long p = 2; p * p <= n; ++p)
      if (n % (p * p) == 0) return false;
    return true;
  };
  const long m = ((delta % 4) + 4) % 4;
  if (m == 1) return squarefree(delta);
  if (m == 0) {
    const long q = delta / 4;
    const long qm = ((q % 4) + 4) % 4;
    return (qm == 2 || qm == 3) && squarefree(q);
  }
  return false;
}

}  // namespace arith
}  // namespace mfhc
