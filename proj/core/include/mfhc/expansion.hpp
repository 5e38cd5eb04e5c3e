#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mfhc/coefficient.hpp"

namespace mfhc {
namespace qexp {

// One factor Gamma(s, 4*pi*ell*v) with ell != 0 rational.
struct GammaFactor {
  HalfInteger s;
  Rational ell{1};

  bool operator==(const GammaFactor& o) const { return s == o.s && ell == o.ell; }
  bool operator<(const GammaFactor& o) const {
    if (s != o.s) return s < o.s;
    return ell < o.ell;
  }
};

// An atom  coeff * v^a * q^m * qbar^m' * prod Gamma(s_i, 4 pi ell_i v)
// under the conventions
//   q^m := e^{2 pi i m tau},  qbar^m' := e^{-2 pi i m' taubar},  v := Im tau,
// so that e^{-4 pi ell v} = q^ell qbar^ell.
struct AnalyticTerm {
  Coefficient coeff;
  HalfInteger v_pow;
  Rational q_pow{0};
  Rational qbar_pow{0};
  std::vector<GammaFactor> gammas;  // kept sorted; multiset semantics

  void sort_gammas();
  bool same_key(const AnalyticTerm& o) const;
  bool key_less(const AnalyticTerm& o) const;
};

AnalyticTerm make_term(Coefficient c, HalfInteger v_pow, const Rational& q_pow,
                       const Rational& qbar_pow = Rational(0),
                       std::vector<GammaFactor> gammas = {});

// Product of atoms: coefficients multiply, exponents add, gamma multisets merge.
AnalyticTerm term_mul(const AnalyticTerm& a, const AnalyticTerm& b);

// A truncated real-analytic Fourier expansion with a declared weight.  The
// truncation window [lo, hi] bounds the q-powers that are represented;
// operations never fabricate coefficients outside the data they were given.
// Weight 1 non-holomorphic parts would need a -log(v) atom, which this
// algebra does not carry; shape-sensitive operations reject that weight.
struct Expansion {
  std::optional<HalfInteger> weight;
  Rational trunc_lo{0};
  Rational trunc_hi{0};
  std::vector<AnalyticTerm> terms;

  bool is_zero() const { return terms.empty(); }
};

// Builds an expansion whose window is the hull of the term q-powers (or the
// given window when wider).
Expansion make_expansion(std::optional<HalfInteger> weight, std::vector<AnalyticTerm> terms);
Expansion make_expansion(std::optional<HalfInteger> weight, std::vector<AnalyticTerm> terms,
                         const Rational& lo, const Rational& hi);

// Idempotent: merges like terms, drops zero coefficients, sorts canonically;
// weight and truncation are preserved.
Expansion normalize(const Expansion& e);

// Termwise partial derivative in tau.  The result carries no weight metadata.
// Rules: d v^a = (a/2i) v^(a-1);  d q^m = 2 pi i m q^m;  d qbar^m' = 0;
// d Gamma(s, 4 pi ell v) = -(1/2i)(4 pi ell)^s v^(s-1) q^ell qbar^ell, with
// the branch (-1)^s := e^{i pi s} for ell < 0.
Expansion d_tau(const Expansion& e);

// Mirror of d_tau: d v^a = -(a/2i) v^(a-1); d q^m = 0;
// d qbar^m' = -2 pi i m' qbar^m';  d Gamma = +(1/2i)(...) q^ell qbar^ell.
Expansion d_taubar(const Expansion& e);

// Complex conjugation: coefficients conjugate, q <-> qbar, v and gamma atoms
// fixed.  Every gamma factor must have ell > 0, otherwise the conjugate of
// the chosen branch is undefined and NonRealGammaBranch is thrown.
Expansion conjugate(const Expansion& e);

// Sums the represented terms at tau (Im tau > 0); no tail estimate is added
// for the truncated part.
std::complex<double> eval_numeric(const Expansion& e, std::complex<double> tau);

Expansion operator+(const Expansion& a, const Expansion& b);
Expansion operator-(const Expansion& a, const Expansion& b);
Expansion scale(const Expansion& e, const Coefficient& c);
Expansion mul_term(const Expansion& e, const AnalyticTerm& t);

std::string to_json_string(const Expansion& e, int indent = -1);
Expansion expansion_from_json(const std::string& text);

}  // namespace qexp
}  // namespace mfhc
