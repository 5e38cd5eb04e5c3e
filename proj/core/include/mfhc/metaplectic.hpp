#pragma once

#include <complex>
#include <string>

namespace mfhc {
namespace mp {

struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;
};

// An element (g, omega) of the metaplectic double cover: g in SL2(R) plus the
// choice of holomorphic square root omega of c*tau + d, encoded as a sign
// against the principal branch.  omega(tau) = branch * principal_sqrt(c tau + d).
struct MetaplecticElement {
  Mat2 g;
  int branch = +1;

  std::complex<double> omega(std::complex<double> tau) const;
  std::complex<double> moebius(std::complex<double> tau) const;
  double det() const { return g.a * g.d - g.b * g.c; }
};

MetaplecticElement identity();

// Rotation lift with omega_{k(theta)}(i) = exp(-i theta / 2); period 4 pi.
MetaplecticElement k_elem(double theta);

enum class MSign { Plus, Minus, PlusI, MinusI };
MSign parse_msign(const std::string& s);

// Diagonal lift m(a, s) = (diag(a, 1/a), sqrt(1/a) with sign s); a > 0 takes
// s in {+1, -1}, a < 0 takes s in {+i, -i}, any other pairing throws
// SignDomainError.
MetaplecticElement m_elem(double a, MSign s);

// Unipotent lift n(b) with omega = 1.
MetaplecticElement n_elem(double b);

// (g, omega)(g', omega') = (g g', tau -> omega(g' tau) omega'(tau)).
MetaplecticElement multiply(const MetaplecticElement& x, const MetaplecticElement& y);

Mat2 project(const MetaplecticElement& x);

struct NMKParts {
  double b = 0;       // n(b)
  double a = 1;       // m(a, +1), a > 0
  double theta = 0;   // k(theta), theta in [0, 4 pi)
  MetaplecticElement n, m, k;
};

// x = n(b) m(a, +1) k(theta) exactly, branch bit included; the projection is
// the classical Iwasawa NAK decomposition.
NMKParts nmk_decompose(const MetaplecticElement& x);

bool approx_equal(const MetaplecticElement& x, const MetaplecticElement& y, double tol = 1e-12);

std::string element_json(const MetaplecticElement& x, int indent = -1);
MetaplecticElement element_from_json(const std::string& text);

// CLI shorthand "k:1.57", "n:2", "m:-1,+i".
MetaplecticElement parse_element(const std::string& text);

}  // namespace mp
}  // namespace mfhc
