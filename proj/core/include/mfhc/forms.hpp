#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mfhc/expansion.hpp"
#include "mfhc/hcmodule.hpp"

namespace mfhc {
namespace forms {

using qexp::Expansion;

// E2*(z) = 1 - 24 sum sigma_1(n) q^n - (3/pi) v^-1, weight 2, harmonic.
Expansion build_e2star(long n_max);

// Zagier's weight-3/2 Eisenstein series: holomorphic part sum H(D) q^D plus
// the non-holomorphic part (1/8 pi) v^{-1/2} + sum_{n>=1} (n / 4 sqrt(pi))
// Gamma(-1/2, 4 pi n^2 v) q^{-n^2} after folding ±n together.
Expansion build_e32star(long D_max, long n_max);

// The evaluated Shintani lift of E2* at a negative fundamental discriminant:
// (12 H(|Delta|) / sqrt|Delta|) E_{3/2}*; the radical stays exact.
Expansion shintani_rhs(long delta, long D_max = 400, long n_max = 20);

// max |Delta_k f| over the grid via 5-point finite differences of
// eval_numeric; no truncation-tail correction is applied.
double harmonicity_residual(const Expansion& f, const std::vector<std::complex<double>>& grid,
                            double h = 1e-3);

struct IntegerMatrix {
  long a = 1, b = 0, c = 0, d = 1;
};

// max over the samples of |f(g tau) - (theta(g tau)/theta(tau))^{2k} f(tau)| / |f(tau)|
// for g in Gamma_0(4) and weight 1/2 or 3/2.
double transformation_check(const Expansion& f, const IntegerMatrix& gamma,
                            const std::vector<std::complex<double>>& samples);

struct ClassifiedExample {
  bool lowering_nonzero = false;
  hc::ModuleClass module;
  hc::Diagram diagram;
};

// Classifies a named example ("e2star" or "e32star") by computing the
// lowering image symbolically.  Integral weight produces the out-of-scope
// marker with its case label instead of a half-integral classification.
ClassifiedExample classify_example(const std::string& tag);

// Same classification applied to an arbitrary expansion with declared weight.
ClassifiedExample classify_expansion(const Expansion& f);

}  // namespace forms
}  // namespace mfhc
