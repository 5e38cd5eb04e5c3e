#include "mfhc/forms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mfhc/arith.hpp"
#include "mfhc/errors.hpp"
#include "mfhc/operators.hpp"

namespace mfhc {
namespace forms {

using qexp::AnalyticTerm;
using qexp::Coefficient;
using qexp::GammaFactor;
using qexp::make_term;

namespace {
constexpr double kPi = std::numbers::pi;
}

Expansion build_e2star(long n_max) {
  if (n_max < 1) throw std::domain_error("build_e2star needs n_max >= 1");
  std::vector<AnalyticTerm> terms;
  terms.push_back(make_term(Coefficient(1), HalfInteger{}, Rational(0)));
  for (long n = 1; n <= n_max; ++n)
    terms.push_back(make_term(Coefficient(Rational(-24 * arith::sigma1(n))), HalfInteger{},
                              Rational(n)));
  terms.push_back(make_term(Coefficient(-3) * Coefficient::pi_pow(HalfInteger::whole(-1)),
                            HalfInteger::whole(-1), Rational(0)));
  return qexp::make_expansion(HalfInteger::whole(2), std::move(terms), Rational(0),
                              Rational(n_max));
}

Expansion build_e32star(long D_max, long n_max) {
  if (D_max < 1 || n_max < 1) throw std::domain_error("build_e32star needs D_max, n_max >= 1");
  std::vector<AnalyticTerm> terms;
  const std::vector<Rational> H = arith::hurwitz_table(D_max);
  for (long D = 0; D <= D_max; ++D) {
    if (H[static_cast<std::size_t>(D)] == 0) continue;
    terms.push_back(make_term(Coefficient(H[static_cast<std::size_t>(D)]), HalfInteger{},
                              Rational(D)));
  }
  // n = 0 piece of the non-holomorphic sum: (1/16 pi) beta(0) v^-1/2 = (1/8 pi) v^-1/2.
  terms.push_back(make_term(Coefficient(make_rational(1, 8)) *
                                Coefficient::pi_pow(HalfInteger::whole(-1)),
                            HalfInteger::from_twice(-1), Rational(0)));
  // n and -n fold together: (n / 4 sqrt(pi)) Gamma(-1/2, 4 pi n^2 v) q^{-n^2}.
  for (long n = 1; n <= n_max; ++n)
    terms.push_back(make_term(Coefficient(make_rational(n, 4)) *
                                  Coefficient::pi_pow(HalfInteger::from_twice(-1)),
                              HalfInteger{}, Rational(-n * n), Rational(0),
                              {GammaFactor{HalfInteger::from_twice(-1), Rational(n * n)}}));
  return qexp::make_expansion(HalfInteger::from_twice(3), std::move(terms),
                              Rational(-n_max * n_max), Rational(D_max));
}

Expansion shintani_rhs(long delta, long D_max, long n_max) {
  if (delta >= 0 || !arith::is_fundamental_discriminant(delta))
    throw NotFundamental(std::to_string(delta) + " is not a negative fundamental discriminant");
  const long abs_delta = -delta;
  // 12 H(|Delta|) / sqrt|Delta| = (12 H / |Delta|) * sqrt|Delta|, exactly.
  const Coefficient prefactor = Coefficient(12 * arith::hurwitz(abs_delta) / abs_delta) *
                                Coefficient::sqrt_int(abs_delta);
  Expansion e = qexp::scale(build_e32star(D_max, n_max), prefactor);
  e.weight = HalfInteger::from_twice(3);
  return e;
}

double harmonicity_residual(const Expansion& f, const std::vector<std::complex<double>>& grid,
                            double h) {
  if (!f.weight) throw WeightError("harmonicity_residual needs a declared weight");
  const double k = f.weight->as_double();
  double worst = 0;
  for (const std::complex<double> tau : grid) {
    if (tau.imag() < 1.0) throw std::domain_error("grid must stay in Im tau >= 1");
    const std::complex<double> c = qexp::eval_numeric(f, tau);
    const std::complex<double> pu = qexp::eval_numeric(f, tau + h);
    const std::complex<double> mu = qexp::eval_numeric(f, tau - h);
    const std::complex<double> pv = qexp::eval_numeric(f, tau + std::complex<double>(0, h));
    const std::complex<double> mv = qexp::eval_numeric(f, tau - std::complex<double>(0, h));
    const std::complex<double> lap_euclid = (pu + mu + pv + mv - 4.0 * c) / (h * h);
    const std::complex<double> dv = (pv - mv) / (2 * h);
    const std::complex<double> du = (pu - mu) / (2 * h);
    const std::complex<double> dtaubar = 0.5 * (du + std::complex<double>(0, 1) * dv);
    const double v = tau.imag();
    // Delta_k = -4 v^2 dtau dtaubar + 2 i k v dtaubar, and 4 dtau dtaubar is
    // the euclidean Laplacian.
    const std::complex<double> delta =
        -v * v * lap_euclid + std::complex<double>(0, 2 * k * v) * dtaubar;
    worst = std::max(worst, std::abs(delta));
  }
  return worst;
}

double transformation_check(const Expansion& f, const IntegerMatrix& gamma,
                            const std::vector<std::complex<double>>& samples) {
  if (gamma.a * gamma.d - gamma.b * gamma.c != 1 || ((gamma.c % 4) + 4) % 4 != 0)
    throw BadGroupElement("gamma must lie in Gamma_0(4)");
  if (!f.weight || (f.weight->twice != 1 && f.weight->twice != 3))
    throw WeightError("transformation_check covers weights 1/2 and 3/2");
  const int exponent = f.weight->twice;  // 2k
  double worst = 0;
  for (const std::complex<double> tau : samples) {
    if (tau.imag() < 1.0) throw std::domain_error("samples must stay in Im tau >= 1");
    const std::complex<double> gtau =
        (static_cast<double>(gamma.a) * tau + static_cast<double>(gamma.b)) /
        (static_cast<double>(gamma.c) * tau + static_cast<double>(gamma.d));
    const std::complex<double> quotient = arith::theta_eval(gtau) / arith::theta_eval(tau);
    std::complex<double> mult{1, 0};
    for (int i = 0; i < exponent; ++i) mult *= quotient;
    const std::complex<double> lhs = qexp::eval_numeric(f, gtau);
    const std::complex<double> rhs = mult * qexp::eval_numeric(f, tau);
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  return worst;
}

ClassifiedExample classify_expansion(const Expansion& f) {
  if (!f.weight) throw WeightError("classification needs a declared weight");
  const HalfInteger k = *f.weight;
  ClassifiedExample out;
  out.lowering_nonzero = !qexp::normalize(ops::lower(f)).is_zero();
  if (k.is_integral()) {
    out.module.kind = hc::ModuleClass::Kind::IntegralOutOfScope;
    out.module.epsilon = hc::normalize_epsilon(k);
    out.module.generator = k;
    const Rational kr = half_integer_to_rational(k);
    out.module.casimir = (kr - 1) * (kr - 1) - 1;
    out.module.label = "integral weight: see the integral-weight classification";
    out.diagram = hc::ktype_diagram(out.module);
    return out;
  }
  out.module = hc::classify_form_module(k, !out.lowering_nonzero);
  out.diagram = hc::ktype_diagram(out.module);
  return out;
}

ClassifiedExample classify_example(const std::string& tag) {
  if (tag == "e2star") {
    ClassifiedExample out = classify_expansion(build_e2star(12));
    // L_2 E2* is a nonzero constant killed by L_0, so the K-types run
    // upward from 0 with the generator at 2: case III (b) of the
    // integral-weight classification.
    out.module.label = "case III (b)";
    out.module.support = {hc::KTypeSupport::Shape::UpFrom, HalfInteger::whole(0)};
    out.diagram = hc::ktype_diagram(out.module);
    return out;
  }
  if (tag == "e32star") return classify_expansion(build_e32star(40, 6));
  throw std::invalid_argument("unknown example '" + tag + "' (want e2star or e32star)");
}

}  // namespace forms
}  // namespace mfhc
