#pragma once

#include "mfhc/expansion.hpp"

namespace mfhc {
namespace ops {

using qexp::Expansion;

// R_k := 2i d_tau + k v^-1, weight k -> k+2.  The weight is read from the
// expansion; applying any operator to an expansion without weight metadata
// throws WeightError.
Expansion raise(const Expansion& f);

// L_k := -2i v^2 d_taubar, weight k -> k-2.
Expansion lower(const Expansion& f);

// Delta_k := -R_{k-2} L_k, weight preserved; exact symbolic result.
Expansion laplacian(const Expansion& f);

// xi_k f := 2i v^k conj(d_taubar f), weight k -> 2-k.  Propagates
// NonRealGammaBranch from the conjugation.
Expansion xi(const Expansion& f);

// Bol operator D^{1-k} with D := (1/2 pi i) d_tau, defined for integral
// weight k <= 0, lands in weight 2-k.
Expansion bol(const Expansion& f);

// The same operator along the identity D^{1-k} = (-4 pi)^{k-1} R_k^{1-k};
// exposed separately so the two routes can be compared exactly.
Expansion bol_via_raising(const Expansion& f);

// Flipping operator F_k on expansions of the harmonic shape
//   sum c+(n) q^n + c-(0) v^{1-k} + sum_{n != 0} c-(n) Gamma(1-k, -4 pi n v) q^n
// for integral weight k <= 0.  Exact involution on that shape.
Expansion flip(const Expansion& f);

// Shape predicates on normalized expansions; purely local to the represented
// terms (modular invariance is not visible from a single-cusp truncation).
bool is_weakly_holomorphic(const Expansion& f);
bool is_harmonic(const Expansion& f);

// Decomposition of an (fe)-shaped expansion used by flip and the form
// classifiers.  Indices are the integer q-powers.
struct HarmonicShape {
  std::map<long, qexp::Coefficient> holomorphic;      // c+(n)
  qexp::Coefficient nonhol_constant;                  // c-(0), coefficient of v^{1-k}
  std::map<long, qexp::Coefficient> nonhol;           // c-(n), n != 0
};
HarmonicShape harmonic_shape(const Expansion& f);

}  // namespace ops
}  // namespace mfhc
