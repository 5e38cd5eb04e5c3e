#include "mfhc/operators.hpp"

#include <map>

#include "mfhc/errors.hpp"

namespace mfhc {
namespace ops {

using qexp::AnalyticTerm;
using qexp::Coefficient;
using qexp::GammaFactor;
using qexp::make_term;

namespace {

HalfInteger required_weight(const Expansion& f) {
  if (!f.weight) throw WeightError("operator needs an expansion with declared weight");
  return *f.weight;
}

Expansion with_weight(Expansion e, HalfInteger k) {
  e.weight = k;
  return e;
}

const Coefficient kTwoI = Coefficient::gaussian(0, 2);

}  // namespace

Expansion raise(const Expansion& f) {
  const HalfInteger k = required_weight(f);
  Expansion d = qexp::scale(qexp::d_tau(f), kTwoI);
  Expansion m = qexp::mul_term(f, make_term(Coefficient(half_integer_to_rational(k)),
                                            HalfInteger::whole(-1), Rational(0)));
  return with_weight(qexp::normalize(d + m), k + 2);
}

Expansion lower(const Expansion& f) {
  const HalfInteger k = required_weight(f);
  Expansion d = qexp::d_taubar(f);
  Expansion m = qexp::mul_term(d, make_term(Coefficient::gaussian(0, -2),
                                            HalfInteger::whole(2), Rational(0)));
  return with_weight(qexp::normalize(m), k - 2);
}

Expansion laplacian(const Expansion& f) {
  const HalfInteger k = required_weight(f);
  return with_weight(qexp::scale(raise(lower(f)), Coefficient(-1)), k);
}

Expansion xi(const Expansion& f) {
  const HalfInteger k = required_weight(f);
  Expansion d = qexp::conjugate(qexp::d_taubar(f));
  Expansion m = qexp::mul_term(d, make_term(kTwoI, k, Rational(0)));
  return with_weight(qexp::normalize(m), HalfInteger::whole(2) - k);
}

namespace {

long bol_exponent(const Expansion& f) {
  const HalfInteger k = required_weight(f);
  if (!k.is_integral() || k.twice > 0)
    throw WeightError("Bol operator needs integral weight k <= 0");
  return 1 - k.as_int();
}

}  // namespace

Expansion bol(const Expansion& f) {
  const long n = bol_exponent(f);
  const HalfInteger k = required_weight(f);
  Expansion g = f;
  for (long i = 0; i < n; ++i) g = qexp::d_tau(g);
  // (1 / 2 pi i)^n
  const Coefficient scale = Coefficient(rational_pow(Rational(2), -n)) *
                            Coefficient::pi_pow(HalfInteger::whole(static_cast<int>(-n))) *
                            Coefficient::i_pow(-n);
  return with_weight(qexp::normalize(qexp::scale(g, scale)), HalfInteger::whole(2) - k);
}

Expansion bol_via_raising(const Expansion& f) {
  const long n = bol_exponent(f);
  const HalfInteger k = required_weight(f);
  Expansion g = f;
  for (long i = 0; i < n; ++i) g = raise(g);
  // (-4 pi)^{k-1} with k - 1 = -n
  const Coefficient scale = Coefficient(rational_pow(Rational(4), -n)) *
                            Coefficient::pi_pow(HalfInteger::whole(static_cast<int>(-n))) *
                            Coefficient(n % 2 == 0 ? 1 : -1);
  return with_weight(qexp::normalize(qexp::scale(g, scale)), HalfInteger::whole(2) - k);
}

HarmonicShape harmonic_shape(const Expansion& f) {
  const HalfInteger k = required_weight(f);
  if (k == HalfInteger::whole(1))
    throw WeightError("weight 1 needs a -log(v) atom, which is not represented");
  const HalfInteger one_minus_k = HalfInteger::whole(1) - k;
  HarmonicShape shape;
  for (const auto& t : qexp::normalize(f).terms) {
    if (!is_integer(t.q_pow) || t.qbar_pow != 0)
      throw ShapeError("term outside the harmonic expansion shape");
    const long n = to_long(t.q_pow);
    if (t.v_pow.twice == 0 && t.gammas.empty()) {
      shape.holomorphic[n] += t.coeff;
      continue;
    }
    if (t.v_pow == one_minus_k && t.q_pow == 0 && t.gammas.empty()) {
      shape.nonhol_constant += t.coeff;
      continue;
    }
    if (t.v_pow.twice == 0 && t.gammas.size() == 1 && n != 0 &&
        t.gammas[0].s == one_minus_k && t.gammas[0].ell == Rational(-n)) {
      shape.nonhol[n] += t.coeff;
      continue;
    }
    throw ShapeError("term outside the harmonic expansion shape");
  }
  return shape;
}

Expansion flip(const Expansion& f) {
  const HalfInteger k = required_weight(f);
  if (!k.is_integral() || k.twice > 0)
    throw WeightError("flipping operator needs integral weight k <= 0");
  const HarmonicShape shape = harmonic_shape(f);
  const Rational mk_fact(factorial(-k.as_int()));
  const HalfInteger one_minus_k = HalfInteger::whole(1) - k;

  std::vector<AnalyticTerm> out;
  if (!shape.nonhol_constant.is_zero())
    out.push_back(make_term(-shape.nonhol_constant.conj(), one_minus_k, Rational(0)));
  for (const auto& [m, c] : shape.nonhol)  // contributes at n = -m
    out.push_back(make_term(Coefficient(-mk_fact) * c.conj(), HalfInteger{}, Rational(-m)));
  for (const auto& [m, c] : shape.holomorphic) {
    if (m == 0) {
      out.push_back(make_term(-c.conj(), HalfInteger{}, Rational(0)));
    } else {
      out.push_back(make_term(Coefficient(Rational(-1) / mk_fact) * c.conj(), HalfInteger{},
                              Rational(-m), Rational(0),
                              {GammaFactor{one_minus_k, Rational(m)}}));
    }
  }
  Expansion e = qexp::make_expansion(k, std::move(out));
  e.trunc_lo = std::min(e.trunc_lo, Rational(-f.trunc_hi));
  e.trunc_hi = std::max(e.trunc_hi, Rational(-f.trunc_lo));
  return e;
}

bool is_weakly_holomorphic(const Expansion& f) {
  for (const auto& t : qexp::normalize(f).terms)
    if (t.v_pow.twice != 0 || t.qbar_pow != 0 || !t.gammas.empty()) return false;
  return true;
}

bool is_harmonic(const Expansion& f) { return qexp::normalize(laplacian(f)).is_zero(); }

}  // namespace ops
}  // namespace mfhc
