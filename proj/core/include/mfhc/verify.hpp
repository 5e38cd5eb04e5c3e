#pragma once

#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mfhc/expansion.hpp"

namespace mfhc {
namespace verify {

// ---------------------------------------------------------------------------
// Finite-difference oracle.  Works purely through pointwise evaluation, so it
// stays independent of the symbolic derivative rules it is used to check.

namespace fd {

using Fn = std::function<std::complex<double>(std::complex<double>)>;

std::complex<double> d_tau(const Fn& f, std::complex<double> tau, double h = 5e-4);
std::complex<double> d_taubar(const Fn& f, std::complex<double> tau, double h = 5e-4);
std::complex<double> raise(const Fn& f, double k, std::complex<double> tau, double h = 5e-4);
std::complex<double> lower(const Fn& f, std::complex<double> tau, double h = 5e-4);
std::complex<double> xi(const Fn& f, double k, std::complex<double> tau, double h = 5e-4);
std::complex<double> laplacian(const Fn& f, double k, std::complex<double> tau, double h = 5e-4);
std::complex<double> bol(const Fn& f, long one_minus_k, std::complex<double> tau, double h = 2e-2);

Fn eval_fn(const qexp::Expansion& e);

}  // namespace fd

// ---------------------------------------------------------------------------
// Deterministic random inputs for the property suites.

using Rng = std::mt19937;

qexp::Coefficient random_coefficient(Rng& rng, bool allow_pi = true);

// A handful of assorted atoms (v-powers, q and qbar powers, gamma factors).
qexp::Expansion random_expansion(Rng& rng, int n_terms = 4);

// Harmonic-shape expansion of integral weight k <= 0: q-powers in [-3, 3],
// the v^{1-k} atom and Gamma(1-k, -4 pi n v) q^n atoms.
qexp::Expansion random_harmonic_expansion(Rng& rng, HalfInteger k);

std::complex<double> random_tau(Rng& rng, double v_min = 0.6, double v_max = 1.8);

// ---------------------------------------------------------------------------
// Named property suites behind `mfhc verify`.

struct Check {
  std::string name;
  bool pass = false;
  double deviation = 0;  // worst numeric deviation, 0 for exact checks
  std::string note;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const;
};

struct Options {
  double tolerance_scale = 1.0;  // multiplies every documented tolerance
  long delta = -3;               // shintani suite discriminant
  long dmax = 400;               // shintani suite truncations
  long nmax = 20;
  std::string fqm;               // weil suite override, e.g. "Z/2:1/4"
  unsigned seed = 20240815;
};

Report run_operators(const Options& opt = {});
Report run_hcmodule(const Options& opt = {});
Report run_weil(const Options& opt = {});
Report run_shintani(const Options& opt = {});
std::vector<Report> run_all(const Options& opt = {});

std::string report_text(const Report& r);
std::string report_json(const std::vector<Report>& rs, int indent = -1);

}  // namespace verify
}  // namespace mfhc
