#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mfhc/rational.hpp"

namespace mfhc {
namespace weil {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;

// Finite quadratic module D = (M, q): M = ⊕ Z/n_i presented by cyclic orders
// and a symmetric rational Gram matrix read mod 1, q(x) = sum G[i][j] x_i x_j.
// The constructor checks that q is well defined on M (q(x + n_i e_i) = q(x)
// for every generator, verified on all of M at desk scale); unchecked() skips
// that, which is how deliberately corrupted data enters negative controls.
class FiniteQuadraticModule {
 public:
  FiniteQuadraticModule(std::vector<long> orders, std::vector<std::vector<Rational>> gram);
  static FiniteQuadraticModule unchecked(std::vector<long> orders,
                                         std::vector<std::vector<Rational>> gram);

  // "Z/2:1/4" or "Z/2:1/4 + Z/4:1/8": cyclic pieces with q(generator) values.
  static FiniteQuadraticModule parse(const std::string& text);

  long size() const { return size_; }
  std::size_t rank() const { return orders_.size(); }
  const std::vector<long>& orders() const { return orders_; }

  // Values in [0, 1).
  Rational q(const std::vector<long>& x) const;
  Rational bilinear(const std::vector<long>& x, const std::vector<long>& y) const;

  std::vector<long> element(long index) const;  // lexicographic enumeration
  std::string str() const;

 private:
  FiniteQuadraticModule() = default;
  std::vector<long> orders_;
  std::vector<std::vector<Rational>> gram_;
  long size_ = 1;
};

struct SigmaInvariant {
  Complex value;
  std::optional<int> eighth_root;  // j in 0..7 with value = e(-j/8), if recognized
};

// sigma(D) = (1/sqrt #M) sum_m e(-q(m)); throws DegenerateForm when |sigma|
// strays from 1 by more than 1e-6.
SigmaInvariant sigma_invariant(const FiniteQuadraticModule& D);

// Generator matrices of the Weil representation on C[M]:
// rho(T) m = e(q(m)) m,  rho(S) m = (sigma(D) sqrt #M)^-1 sum_m' e(-<m,m'>) m'.
Matrix rho_T(const FiniteQuadraticModule& D);
Matrix rho_S(const FiniteQuadraticModule& D);

struct RelationReport {
  double unitarity = 0;    // max |(S S^* - I)|
  double braid = 0;        // max |((ST)^3 - S^2)|
  double s_order = 0;      // max |(S^8 - I)|
  double center_comm = 0;  // max |(S^2 T - T S^2)|
  std::optional<int> sigma_eighth_root;
  double sigma_abs_dev = 0;  // | |sigma| - 1 |
  bool pass(double tol = 1e-10) const;
};

// Checks the metaplectic relations (ST)^3 = S^2 and S^8 = I on the matrices;
// failures show up as deviations, not exceptions.
RelationReport check_relations(const FiniteQuadraticModule& D);

std::string matrix_json(const Matrix& m, int indent = -1);

}  // namespace weil
}  // namespace mfhc
