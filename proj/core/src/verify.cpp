#include "mfhc/verify.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

#include "mfhc/arith.hpp"
#include "mfhc/forms.hpp"
#include "mfhc/hcmodule.hpp"
#include "mfhc/metaplectic.hpp"
#include "mfhc/operators.hpp"
#include "mfhc/weil.hpp"

namespace mfhc {
namespace verify {

namespace fd {

namespace {
constexpr double kPi = std::numbers::pi;
using C = std::complex<double>;

// 4th-order central differences in the two real directions.
C du(const Fn& f, C tau, double h) {
  return (-f(tau + 2 * h) + 8.0 * f(tau + h) - 8.0 * f(tau - h) + f(tau - 2 * h)) / (12 * h);
}
C dv(const Fn& f, C tau, double h) {
  const C ih{0, h};
  return (-f(tau + 2.0 * ih) + 8.0 * f(tau + ih) - 8.0 * f(tau - ih) + f(tau - 2.0 * ih)) /
         (12 * h);
}
C d2u(const Fn& f, C tau, double h) {
  return (-f(tau + 2 * h) + 16.0 * f(tau + h) - 30.0 * f(tau) + 16.0 * f(tau - h) -
          f(tau - 2 * h)) /
         (12 * h * h);
}
C d2v(const Fn& f, C tau, double h) {
  const C ih{0, h};
  return (-f(tau + 2.0 * ih) + 16.0 * f(tau + ih) - 30.0 * f(tau) + 16.0 * f(tau - ih) -
          f(tau - 2.0 * ih)) /
         (12 * h * h);
}
}  // namespace

C d_tau(const Fn& f, C tau, double h) {
  return 0.5 * (du(f, tau, h) - C{0, 1} * dv(f, tau, h));
}

C d_taubar(const Fn& f, C tau, double h) {
  return 0.5 * (du(f, tau, h) + C{0, 1} * dv(f, tau, h));
}

C raise(const Fn& f, double k, C tau, double h) {
  return C{0, 2} * d_tau(f, tau, h) + k / tau.imag() * f(tau);
}

C lower(const Fn& f, C tau, double h) {
  return C{0, -2} * tau.imag() * tau.imag() * d_taubar(f, tau, h);
}

C xi(const Fn& f, double k, C tau, double h) {
  return C{0, 2} * std::pow(tau.imag(), k) * std::conj(d_taubar(f, tau, h));
}

C laplacian(const Fn& f, double k, C tau, double h) {
  const double v = tau.imag();
  const C lap_euclid = d2u(f, tau, h) + d2v(f, tau, h);
  return -v * v * lap_euclid + C{0, 2 * k * v} * d_taubar(f, tau, h);
}

C bol(const Fn& f, long one_minus_k, C tau, double h) {
  // (1/2 pi i)^n d_tau^n by nested differences; n stays small (<= 4).
  if (one_minus_k == 0) return f(tau);
  Fn inner = [&f, one_minus_k, h](C t) { return bol(f, one_minus_k - 1, t, h); };
  return d_tau(inner, tau, h) / C{0, 2 * kPi};
}

Fn eval_fn(const qexp::Expansion& e) {
  return [e](C tau) { return qexp::eval_numeric(e, tau); };
}

}  // namespace fd

// ---------------------------------------------------------------------------

using qexp::AnalyticTerm;
using qexp::Coefficient;
using qexp::Expansion;
using qexp::GammaFactor;
using qexp::make_term;

qexp::Coefficient random_coefficient(Rng& rng, bool allow_pi) {
  std::uniform_int_distribution<int> small(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> pick(0, 3);
  Coefficient c = Coefficient::gaussian(make_rational(small(rng), den(rng)),
                                        make_rational(small(rng), den(rng)));
  if (allow_pi && pick(rng) == 0)
    c *= Coefficient::pi_pow(HalfInteger::from_twice(small(rng) % 3));
  if (c.is_zero()) c = Coefficient(1);
  return c;
}

qexp::Expansion random_expansion(Rng& rng, int n_terms) {
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> v_twice(-4, 4);
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<AnalyticTerm> terms;
  for (int t = 0; t < n_terms; ++t) {
    std::vector<GammaFactor> gammas;
    if (coin(rng) == 0) {
      int ell = small(rng);
      if (ell == 0) ell = 2;
      int s_twice = v_twice(rng);
      // Gamma(s, x) with nonpositive integer s is singular at x < 0; keep the
      // random atoms inside the evaluable domain.
      if (ell < 0 && s_twice % 2 == 0 && s_twice <= 0) s_twice += 1;
      gammas.push_back({HalfInteger::from_twice(s_twice), Rational(ell)});
    }
    terms.push_back(make_term(random_coefficient(rng), HalfInteger::from_twice(v_twice(rng)),
                              Rational(small(rng)), Rational(coin(rng) == 0 ? small(rng) : 0),
                              std::move(gammas)));
  }
  return qexp::make_expansion(std::nullopt, std::move(terms));
}

qexp::Expansion random_harmonic_expansion(Rng& rng, HalfInteger k) {
  if (!k.is_integral() || k.twice > 0)
    throw std::domain_error("random harmonic shape wants integral k <= 0");
  std::uniform_int_distribution<int> n_dist(-3, 3);
  std::uniform_int_distribution<int> count(1, 3);
  std::vector<AnalyticTerm> terms;
  const HalfInteger one_minus_k = HalfInteger::whole(1) - k;
  for (int t = count(rng); t-- > 0;)
    terms.push_back(make_term(random_coefficient(rng), HalfInteger{}, Rational(n_dist(rng))));
  terms.push_back(make_term(random_coefficient(rng), one_minus_k, Rational(0)));
  for (int t = count(rng); t-- > 0;) {
    int n = n_dist(rng);
    if (n == 0) n = 1;
    terms.push_back(make_term(random_coefficient(rng), HalfInteger{}, Rational(n), Rational(0),
                              {GammaFactor{one_minus_k, Rational(-n)}}));
  }
  return qexp::make_expansion(k, std::move(terms));
}

std::complex<double> random_tau(Rng& rng, double v_min, double v_max) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::uniform_real_distribution<double> v(v_min, v_max);
  return {u(rng), v(rng)};
}

// ---------------------------------------------------------------------------

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

using C = std::complex<double>;

void add_check(Report& r, const std::string& name, bool pass, double dev = 0,
               const std::string& note = "") {
  r.checks.push_back({name, pass, dev, note});
}

double rel_err(C got, C want) {
  const double scale = std::max({std::abs(got), std::abs(want), 1e-12});
  return std::abs(got - want) / scale;
}

}  // namespace

Report run_operators(const Options& opt) {
  Report r{"operators", {}};
  Rng rng(opt.seed);
  const double tol_fd = 1e-6 * opt.tolerance_scale;

  // Termwise harmonicity of the expansion atoms.
  {
    bool ok = true;
    for (int k_twice : {-12, -8, -4, 0, 1, 3, 5, -1}) {
      const HalfInteger k = HalfInteger::from_twice(k_twice);
      for (int n = -5; n <= 5; ++n) {
        Expansion atom_q = qexp::make_expansion(k, {make_term(Coefficient(1), HalfInteger{},
                                                              Rational(n))});
        ok = ok && qexp::normalize(ops::laplacian(atom_q)).is_zero();
        if (n != 0) {
          Expansion atom_w = qexp::make_expansion(
              k, {make_term(Coefficient(1), HalfInteger{}, Rational(n), Rational(0),
                            {GammaFactor{HalfInteger::whole(1) - k, Rational(-n)}})});
          ok = ok && qexp::normalize(ops::laplacian(atom_w)).is_zero();
        }
      }
      Expansion atom_v = qexp::make_expansion(
          k, {make_term(Coefficient(1), HalfInteger::whole(1) - k, Rational(0))});
      ok = ok && qexp::normalize(ops::laplacian(atom_v)).is_zero();
    }
    add_check(r, "laplacian annihilates harmonic atoms exactly", ok);
  }

  // Flip involution on random harmonic shapes.
  {
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
      const HalfInteger k = HalfInteger::whole(-2 * (i % 4));
      const Expansion f = random_harmonic_expansion(rng, k);
      ok = qexp::normalize(ops::flip(ops::flip(f)) - f).is_zero();
    }
    add_check(r, "flip is an exact involution on harmonic shapes", ok);
  }

  // Bol dual route.
  {
    bool ok = true;
    for (int i = 0; i < 20 && ok; ++i) {
      const HalfInteger k = HalfInteger::whole(-(i % 4));
      const Expansion f = random_harmonic_expansion(rng, k);
      ok = qexp::normalize(ops::bol(f) - ops::bol_via_raising(f)).is_zero();
    }
    add_check(r, "bol via derivatives equals bol via raising, exactly", ok);
  }

  // Symbolic operators against the finite-difference oracle.
  {
    double worst = 0;
    for (int k_twice : {-4, 0, 1, 3}) {
      const HalfInteger k = HalfInteger::from_twice(k_twice);
      for (int i = 0; i < 5; ++i) {
        Expansion f = random_expansion(rng);
        f.weight = k;
        Expansion g = f;  // gamma-free copy for the second-order check
        for (auto& t : g.terms) t.gammas.clear();
        g = qexp::make_expansion(k, g.terms);
        const auto fn = fd::eval_fn(f);
        const auto gn = fd::eval_fn(g);
        for (int s = 0; s < 4; ++s) {
          const C tau = random_tau(rng);
          const double fscale = std::abs(fn(tau));
          auto rel = [&](C a, C b, double fl) {
            return std::abs(a - b) / std::max({std::abs(a), std::abs(b), fl, 1e-9});
          };
          worst = std::max(worst, rel(qexp::eval_numeric(ops::raise(f), tau),
                                      fd::raise(fn, k.as_double(), tau), fscale));
          worst = std::max(worst, rel(qexp::eval_numeric(ops::lower(f), tau),
                                      fd::lower(fn, tau), fscale));
          if (!g.is_zero())
            worst = std::max(worst, rel(qexp::eval_numeric(ops::laplacian(g), tau),
                                        fd::laplacian(gn, k.as_double(), tau), std::abs(gn(tau))));
        }
      }
    }
    add_check(r, "raise/lower/laplacian match finite differences", worst <= tol_fd, worst);
  }

  return r;
}

Report run_hcmodule(const Options& opt) {
  Report r{"hcmodule", {}};
  Rng rng(opt.seed + 1);
  std::uniform_int_distribution<int> small(-6, 6);

  {
    bool ok = true;
    for (int i = 0; i < 25 && ok; ++i) {
      const HalfInteger eps = hc::normalize_epsilon(HalfInteger::from_twice(small(rng)));
      const Coefficient nu = random_coefficient(rng, false);
      const HalfInteger j = HalfInteger::from_twice(eps.twice + 4 * small(rng));
      hc::PrincipalSeriesVector v = hc::phi(eps, nu, j);
      v.combo[j + 2 * (1 + (i % 3))] = random_coefficient(rng, false);
      auto X = [&](hc::Generator g, const hc::PrincipalSeriesVector& w) {
        return hc::ps_apply(g, w);
      };
      auto sub = [](hc::PrincipalSeriesVector a, const hc::PrincipalSeriesVector& b) {
        for (const auto& [jj, c] : b.combo) {
          a.combo[jj] = (a.combo.count(jj) ? a.combo[jj] : Coefficient()) - c;
          if (a.combo[jj].is_zero()) a.combo.erase(jj);
        }
        return a;
      };
      // [X+, X-] = H
      auto comm = sub(X(hc::Generator::XPlus, X(hc::Generator::XMinus, v)),
                      X(hc::Generator::XMinus, X(hc::Generator::XPlus, v)));
      ok = ok && sub(comm, X(hc::Generator::H, v)).combo.empty();
      // Casimir forms agree and act by nu^2 - 1.
      const auto c1 = hc::casimir_via_basis(hc::CasimirForm::Symmetric, v);
      const auto c2 = hc::casimir_via_basis(hc::CasimirForm::LoweringFirst, v);
      const auto c3 = hc::casimir_via_basis(hc::CasimirForm::RaisingFirst, v);
      ok = ok && sub(c1, c2).combo.empty() && sub(c2, c3).combo.empty();
      ok = ok && sub(c1, hc::ps_apply(hc::Generator::Casimir, v)).combo.empty();
    }
    add_check(r, "commutators and Casimir forms hold exactly", ok);
  }

  {
    bool ok = true;
    for (int i = 0; i < 25 && ok; ++i) {
      const HalfInteger k = HalfInteger::from_twice(2 * small(rng) + 1);
      const Coefficient nu(half_integer_to_rational(k) - 1);
      for (long rr = 1; rr <= 8 && ok; ++rr) {
        ok = hc::lemma_eigenvalue(rr, k, hc::ComposeOrder::DownUp) ==
             hc::ps_compose(rr, k, nu, hc::ComposeOrder::DownUp);
        ok = ok && hc::lemma_eigenvalue(rr, k, hc::ComposeOrder::UpDown) ==
                       hc::ps_compose(rr, k - 2, nu, hc::ComposeOrder::UpDown);
      }
    }
    add_check(r, "lemma eigenvalues equal principal-series scalars at nu = k-1", ok);
  }

  {
    const auto m1 = hc::ps_decompose(HalfInteger::from_twice(1), make_rational(1, 2));
    const auto m2 = hc::ps_decompose(HalfInteger::from_twice(1), make_rational(3, 2));
    const auto m3 = hc::ps_decompose(HalfInteger::from_twice(1), make_rational(1, 3));
    const bool ok = m1.kind == hc::ModuleClass::Kind::Extension && m1.sequence &&
                    m1.sequence->sub.sign == '-' && m2.kind == hc::ModuleClass::Kind::Extension &&
                    m2.sequence && m2.sequence->sub.sign == '+' &&
                    m3.kind == hc::ModuleClass::Kind::IrreduciblePrincipal;
    add_check(r, "principal series decomposition golden cases", ok);
  }

  return r;
}

Report run_weil(const Options& opt) {
  Report r{"weil", {}};
  const double tol = 1e-10 * opt.tolerance_scale;
  std::vector<std::string> specs = {"Z/2:1/4", "Z/3:1/3", "Z/4:1/8"};
  if (!opt.fqm.empty()) specs = {opt.fqm};
  for (const auto& spec : specs) {
    const auto D = weil::FiniteQuadraticModule::parse(spec);
    const auto rel = weil::check_relations(D);
    std::ostringstream note;
    note << "unitarity " << rel.unitarity << ", (ST)^3=S^2 " << rel.braid << ", S^8=I "
         << rel.s_order;
    add_check(r, "relations for " + spec, rel.pass(tol),
              std::max({rel.unitarity, rel.braid, rel.s_order, rel.center_comm}), note.str());
    add_check(r, "sigma recognized as eighth root for " + spec, rel.sigma_eighth_root.has_value(),
              rel.sigma_abs_dev);
  }
  return r;
}

Report run_shintani(const Options& opt) {
  Report r{"shintani", {}};
  const long delta = opt.delta;
  Expansion lift;
  try {
    lift = forms::shintani_rhs(delta, opt.dmax, opt.nmax);
  } catch (const std::exception& e) {
    add_check(r, "shintani_rhs(" + std::to_string(delta) + ")", false, 0, e.what());
    return r;
  }
  add_check(r, "lift is symbolically harmonic", ops::is_harmonic(lift));
  {
    bool plus_space = true;
    for (const auto& t : lift.terms) {
      if (!t.gammas.empty() || t.v_pow.twice != 0) continue;  // non-holomorphic part
      const long D = to_long(t.q_pow);
      if (D % 4 == 1 || D % 4 == 2) plus_space = false;
    }
    add_check(r, "holomorphic coefficients obey the plus-space condition", plus_space);
  }
  {
    const std::vector<std::complex<double>> samples = {
        {0.0, 1.0}, {0.5, 1.0}, {0.3, 1.2}, {-0.25, 1.5}, {0.1, 2.0}};
    const double dev_t =
        forms::transformation_check(lift, forms::IntegerMatrix{1, 1, 0, 1}, samples);
    const double dev_s =
        forms::transformation_check(lift, forms::IntegerMatrix{1, 0, 4, 1}, samples);
    add_check(r, "translation invariance", dev_t <= 1e-10 * opt.tolerance_scale, dev_t);
    add_check(r, "Gamma_0(4) transformation with the theta multiplier",
              dev_s <= 1e-6 * opt.tolerance_scale, dev_s);
  }
  {
    std::vector<std::complex<double>> grid;
    for (double u : {-0.2, 0.0, 0.2})
      for (double v : {1.0, 1.5, 2.0}) grid.push_back({u, v});
    const double res = forms::harmonicity_residual(lift, grid);
    add_check(r, "finite-difference Laplacian residual", res <= 1e-4 * opt.tolerance_scale, res);
  }
  return r;
}

std::vector<Report> run_all(const Options& opt) {
  return {run_operators(opt), run_hcmodule(opt), run_weil(opt), run_shintani(opt)};
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "suite " << r.suite << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (c.deviation != 0) os << "  (max deviation " << c.deviation << ")";
    if (!c.note.empty()) os << "  -- " << c.note;
    os << "\n";
  }
  os << (r.pass() ? "  => suite passed" : "  => suite FAILED") << "\n";
  return os.str();
}

std::string report_json(const std::vector<Report>& rs, int indent) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rs) {
    nlohmann::json jr;
    jr["suite"] = r.suite;
    jr["pass"] = r.pass();
    jr["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
      nlohmann::json jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      jc["deviation"] = c.deviation;
      if (!c.note.empty()) jc["note"] = c.note;
      jr["checks"].push_back(std::move(jc));
    }
    j.push_back(std::move(jr));
  }
  return indent < 0 ? j.dump() : j.dump(indent);
}

}  // namespace verify
}  // namespace mfhc
