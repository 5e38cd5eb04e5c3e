#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mfhc/errors.hpp"
#include "mfhc/expansion.hpp"
#include "mfhc/verify.hpp"

using namespace mfhc;
using qexp::AnalyticTerm;
using qexp::Coefficient;
using qexp::Expansion;
using qexp::GammaFactor;
using qexp::make_term;

namespace {

constexpr double kPi = std::numbers::pi;

Expansion single(Coefficient c, HalfInteger v, const Rational& q, const Rational& qbar = 0,
                 std::vector<GammaFactor> gammas = {}) {
  return qexp::make_expansion(std::nullopt, {make_term(c, v, q, qbar, std::move(gammas))});
}

}  // namespace

TEST_CASE("normalize merges, drops zeros and is idempotent") {
  Expansion e = qexp::make_expansion(
      std::nullopt, {make_term(Coefficient(1), HalfInteger{}, Rational(1)),
                     make_term(Coefficient(1), HalfInteger{}, Rational(1)),
                     make_term(Coefficient(0), HalfInteger::whole(-1), Rational(0))});
  CHECK(e.terms.size() == 1);
  CHECK(e.terms[0].coeff == Coefficient(2));
  const Expansion again = qexp::normalize(e);
  CHECK(again.terms.size() == 1);
  CHECK(again.trunc_lo == e.trunc_lo);
  CHECK(again.trunc_hi == e.trunc_hi);
}

TEST_CASE("derivative rules on the basic atoms") {
  // d_tau q^n = 2 pi i n q^n
  for (long n : {1L, 3L, -2L}) {
    const Expansion d = qexp::d_tau(single(Coefficient(1), HalfInteger{}, Rational(n)));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].coeff == Coefficient::gaussian(0, 2 * n) *
                                  Coefficient::pi_pow(HalfInteger::whole(1)));
    CHECK(d.terms[0].q_pow == n);
  }
  // d_tau v^-1 = (i/2) v^-2
  {
    const Expansion d = qexp::d_tau(single(Coefficient(1), HalfInteger::whole(-1), Rational(0)));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].coeff == Coefficient::gaussian(0, make_rational(1, 2)));
    CHECK(d.terms[0].v_pow == HalfInteger::whole(-2));
  }
  // d_taubar q^n = 0 and d_taubar v^-1 = -(i/2) v^-2
  CHECK(qexp::d_taubar(single(Coefficient(1), HalfInteger{}, Rational(5))).is_zero());
  {
    const Expansion d = qexp::d_taubar(single(Coefficient(1), HalfInteger::whole(-1), Rational(0)));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].coeff == Coefficient::gaussian(0, make_rational(-1, 2)));
  }
  // d_tau qbar^m = 0
  CHECK(qexp::d_tau(single(Coefficient(1), HalfInteger{}, Rational(0), Rational(3))).is_zero());
}

TEST_CASE("gamma atom derivative carries (4 pi ell)^s and the q qbar shift") {
  // d_tau Gamma(1/2, 4 pi v) = -(1/2i) (4 pi)^(1/2) v^(-1/2) q qbar
  const Expansion d = qexp::d_tau(single(Coefficient(1), HalfInteger{}, Rational(0), Rational(0),
                                         {GammaFactor{HalfInteger::from_twice(1), Rational(1)}}));
  REQUIRE(d.terms.size() == 1);
  const AnalyticTerm& t = d.terms[0];
  CHECK(t.gammas.empty());
  CHECK(t.q_pow == 1);
  CHECK(t.qbar_pow == 1);
  CHECK(t.v_pow == HalfInteger::from_twice(-1));
  CHECK(t.coeff == Coefficient::gaussian(0, make_rational(1, 2)) * Coefficient(2) *
                       Coefficient::pi_pow(HalfInteger::from_twice(1)));
}

TEST_CASE("mixed partials commute exactly") {
  verify::Rng rng(99);
  for (int i = 0; i < 40; ++i) {
    const Expansion e = verify::random_expansion(rng);
    const Expansion ab = qexp::d_taubar(qexp::d_tau(e));
    const Expansion ba = qexp::d_tau(qexp::d_taubar(e));
    CHECK(qexp::normalize(ab - ba).is_zero());
  }
}

TEST_CASE("conjugation") {
  // conj(i q) = -i qbar
  const Expansion c =
      qexp::conjugate(single(Coefficient::imaginary_unit(), HalfInteger{}, Rational(1)));
  REQUIRE(c.terms.size() == 1);
  CHECK(c.terms[0].coeff == -Coefficient::imaginary_unit());
  CHECK(c.terms[0].q_pow == 0);
  CHECK(c.terms[0].qbar_pow == 1);
  // real atom fixed
  const Expansion fixed = single(Coefficient(1), HalfInteger::whole(-1), Rational(0), Rational(0),
                                 {GammaFactor{HalfInteger::whole(3), Rational(1)}});
  CHECK(qexp::normalize(qexp::conjugate(fixed) - fixed).is_zero());
  // negative gamma branch refuses to conjugate
  CHECK_THROWS_AS(
      qexp::conjugate(single(Coefficient(1), HalfInteger{}, Rational(0), Rational(0),
                             {GammaFactor{HalfInteger::from_twice(1), Rational(-1)}})),
      NonRealGammaBranch);
  // involution on the legal domain
  verify::Rng rng(7);
  for (int i = 0; i < 30; ++i) {
    Expansion e = verify::random_expansion(rng);
    std::erase_if(e.terms, [](const AnalyticTerm& t) {
      for (const auto& g : t.gammas)
        if (g.ell < 0) return true;
      return false;
    });
    e = qexp::make_expansion(e.weight, e.terms);
    CHECK(qexp::normalize(qexp::conjugate(qexp::conjugate(e)) - e).is_zero());
  }
}

TEST_CASE("numeric evaluation of the atoms") {
  const std::complex<double> i{0, 1};
  CHECK(std::abs(qexp::eval_numeric(single(Coefficient(1), HalfInteger{}, Rational(0)), i) -
                 1.0) < 1e-15);
  // q at tau = i is e^{-2 pi}
  CHECK(std::abs(qexp::eval_numeric(single(Coefficient(1), HalfInteger{}, Rational(1)), i) -
                 std::exp(-2 * kPi)) < 1e-15);
  // v^-1 at 2i is 0.5
  CHECK(std::abs(qexp::eval_numeric(single(Coefficient(1), HalfInteger::whole(-1), Rational(0)),
                                    {0, 2}) -
                 0.5) < 1e-15);
  CHECK_THROWS_AS(qexp::eval_numeric(Expansion{}, {0, -1}), std::domain_error);
}

TEST_CASE("eval commutes with conjugation") {
  verify::Rng rng(3);
  for (int i = 0; i < 25; ++i) {
    Expansion e = verify::random_expansion(rng);
    std::erase_if(e.terms, [](const AnalyticTerm& t) {
      for (const auto& g : t.gammas)
        if (g.ell < 0) return true;
      return false;
    });
    e = qexp::make_expansion(e.weight, e.terms);
    const std::complex<double> tau = verify::random_tau(rng);
    const auto lhs = qexp::eval_numeric(qexp::conjugate(e), tau);
    const auto rhs = std::conj(qexp::eval_numeric(e, tau));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("symbolic derivatives match finite differences on random terms") {
  verify::Rng rng(2024);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const Expansion e = verify::random_expansion(rng, 3);
    const auto fn = verify::fd::eval_fn(e);
    const std::complex<double> tau = verify::random_tau(rng, 0.6, 1.6);
    const auto sym_t = qexp::eval_numeric(qexp::d_tau(e), tau);
    const auto sym_b = qexp::eval_numeric(qexp::d_taubar(e), tau);
    const auto fd_t = verify::fd::d_tau(fn, tau);
    const auto fd_b = verify::fd::d_taubar(fn, tau);
    const double fscale = std::abs(fn(tau));  // floor for exactly-killed inputs
    const double scale_t = std::max({std::abs(sym_t), std::abs(fd_t), fscale, 1e-9});
    const double scale_b = std::max({std::abs(sym_b), std::abs(fd_b), fscale, 1e-9});
    worst = std::max(worst, std::abs(sym_t - fd_t) / scale_t);
    worst = std::max(worst, std::abs(sym_b - fd_b) / scale_b);
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("json round trip") {
  verify::Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    Expansion e = verify::random_expansion(rng);
    e.weight = HalfInteger::from_twice(3);
    const Expansion back = qexp::expansion_from_json(qexp::to_json_string(e));
    CHECK(back.weight == e.weight);
    CHECK(qexp::normalize(back - e).is_zero());
    CHECK(back.trunc_lo == e.trunc_lo);
    CHECK(back.trunc_hi == e.trunc_hi);
  }
  // unicode minus accepted on input
  const Expansion u = qexp::expansion_from_json(
      "{\"weight\":\"\xE2\x88\x92""1/2\",\"terms\":[{\"coeff\":[[\"1\",\"r=0\",\"d=1\",\"re=1\","
      "\"im=0\"]],\"v\":\"0\",\"q\":\"\xE2\x88\x92""2\",\"qbar\":\"0\",\"gammas\":[]}]}");
  CHECK(u.weight == HalfInteger::from_twice(-1));
  CHECK(u.terms.at(0).q_pow == -2);
}

TEST_CASE("window violations are refused") {
  CHECK_THROWS_AS(qexp::make_expansion(std::nullopt,
                                       {make_term(Coefficient(1), HalfInteger{}, Rational(5))},
                                       Rational(0), Rational(3)),
                  ShapeError);
}
