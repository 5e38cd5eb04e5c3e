#include "mfhc/coefficient.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mfhc {
namespace qexp {

namespace {

// n = square * squarefree; returns {square root of the square part, squarefree part}.
std::pair<long, long> extract_square(long n) {
  if (n <= 0) throw std::domain_error("radicand must be positive");
  long root = 1;
  long rest = n;
  for (long p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      root *= p;
    }
  }
  return {root, rest};
}

}  // namespace

Coefficient::Coefficient(const Rational& r) {
  if (r != 0) terms_[CoeffMonomial{}] = GaussianRational{r, 0};
}

void Coefficient::add(const CoeffMonomial& key, const GaussianRational& value) {
  if (value.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, value);
    return;
  }
  it->second = it->second + value;
  if (it->second.is_zero()) terms_.erase(it);
}

Coefficient Coefficient::gaussian(const Rational& re, const Rational& im) {
  Coefficient c;
  c.add(CoeffMonomial{}, GaussianRational{re, im});
  return c;
}

Coefficient Coefficient::i_pow(long e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return Coefficient(1);
    case 1: return gaussian(0, 1);
    case 2: return Coefficient(-1);
    default: return gaussian(0, -1);
  }
}

Coefficient Coefficient::pi_pow(HalfInteger s) {
  Coefficient c;
  c.add(CoeffMonomial{s, 1}, GaussianRational{1, 0});
  return c;
}

Coefficient Coefficient::sqrt_int(long n) {
  auto [root, rest] = extract_square(n);
  Coefficient c;
  c.add(CoeffMonomial{HalfInteger{}, rest}, GaussianRational{Rational(root), 0});
  return c;
}

Coefficient Coefficient::sqrt_rational(const Rational& r) {
  if (r <= 0) throw std::domain_error("sqrt of non-positive rational");
  // sqrt(p/q) = sqrt(p*q)/q
  const Integer pq_z = r.get_num() * r.get_den();
  if (!pq_z.fits_slong_p()) throw std::overflow_error("radicand too large");
  return Coefficient(Rational(1) / Rational(r.get_den())) * sqrt_int(pq_z.get_si());
}

Coefficient Coefficient::four_pi_ell_pow(HalfInteger s, const Rational& ell) {
  if (ell == 0) throw std::domain_error("(4*pi*ell)^s needs ell != 0");
  const Rational mag = 4 * abs(ell);
  Coefficient out = pi_pow(s);
  if (s.is_integral()) {
    out *= Coefficient(rational_pow(mag, s.as_int()));
  } else {
    // s = fl + 1/2 with fl = (twice - 1)/2, exact since twice is odd.
    const long fl = (s.twice - 1) / 2;
    out *= Coefficient(rational_pow(mag, fl));
    out *= sqrt_rational(mag);
  }
  if (ell < 0) out *= i_pow(s.twice);  // e^{i pi s} = i^{2s}
  return out;
}

bool Coefficient::is_rational() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& [key, val] = *terms_.begin();
  return key == CoeffMonomial{} && val.im == 0;
}

std::optional<Rational> Coefficient::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) return std::nullopt;
  return terms_.begin()->second.re;
}

Coefficient Coefficient::conj() const {
  Coefficient out;
  for (const auto& [key, val] : terms_) out.add(key, val.conj());
  return out;
}

std::complex<double> Coefficient::to_complex() const {
  std::complex<double> acc{0, 0};
  for (const auto& [key, val] : terms_) {
    const double scale = std::pow(std::numbers::pi, key.pi_pow.twice / 2.0) *
                         std::sqrt(static_cast<double>(key.radicand));
    acc += std::complex<double>(val.re.get_d(), val.im.get_d()) * scale;
  }
  return acc;
}

Coefficient Coefficient::operator-() const {
  Coefficient out;
  for (const auto& [key, val] : terms_) out.add(key, -val);
  return out;
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  Coefficient out = *this;
  for (const auto& [key, val] : o.terms_) out.add(key, val);
  return out;
}

Coefficient Coefficient::operator-(const Coefficient& o) const { return *this + (-o); }

Coefficient Coefficient::operator*(const Coefficient& o) const {
  Coefficient out;
  for (const auto& [ka, va] : terms_) {
    for (const auto& [kb, vb] : o.terms_) {
      // sqrt(d) * sqrt(d') = sqrt(square part) * sqrt(squarefree part)
      auto [root, rest] = extract_square(ka.radicand * kb.radicand);
      GaussianRational scalar = va * vb;
      scalar.re *= root;
      scalar.im *= root;
      out.add(CoeffMonomial{ka.pi_pow + kb.pi_pow, rest}, scalar);
    }
  }
  return out;
}

std::string gaussian_str(const GaussianRational& g) {
  if (g.im == 0) return g.re.get_str();
  std::ostringstream os;
  if (g.re != 0) os << g.re.get_str() << (g.im > 0 ? "+" : "");
  if (g.im == 1)
    os << "i";
  else if (g.im == -1)
    os << "-i";
  else
    os << g.im.get_str() << "i";
  return os.str();
}

std::string Coefficient::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, val] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool unit_monomial = key == CoeffMonomial{};
    std::string scalar = gaussian_str(val);
    if (scalar.find('+') != std::string::npos && !unit_monomial) scalar = "(" + scalar + ")";
    os << scalar;
    if (key.pi_pow.twice != 0) {
      os << "*pi";
      if (key.pi_pow != HalfInteger::whole(1)) os << "^(" << key.pi_pow.str() << ")";
    }
    if (key.radicand != 1) os << "*sqrt(" << key.radicand << ")";
  }
  return os.str();
}

}  // namespace qexp
}  // namespace mfhc
