#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mfhc/coefficient.hpp"

using namespace mfhc;
using qexp::Coefficient;

namespace {

Coefficient random_coeff(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> rad(1, 8);
  std::uniform_int_distribution<int> pi(-2, 2);
  Coefficient c = Coefficient::gaussian(make_rational(num(rng), den(rng)),
                                        make_rational(num(rng), den(rng)));
  c *= Coefficient::pi_pow(HalfInteger::from_twice(pi(rng)));
  c *= Coefficient::sqrt_int(rad(rng));
  if (num(rng) > 3) c += Coefficient(make_rational(num(rng), den(rng)));
  return c;
}

}  // namespace

TEST_CASE("radical normalization pulls out square factors") {
  // sqrt(8) = 2 sqrt(2)
  CHECK(Coefficient::sqrt_int(8) == Coefficient(2) * Coefficient::sqrt_int(2));
  CHECK(Coefficient::sqrt_int(9) == Coefficient(3));
  CHECK(Coefficient::sqrt_int(1) == Coefficient(1));
  // sqrt(d) * sqrt(d') merges: sqrt(6) sqrt(10) = 2 sqrt(15)
  CHECK(Coefficient::sqrt_int(6) * Coefficient::sqrt_int(10) ==
        Coefficient(2) * Coefficient::sqrt_int(15));
}

TEST_CASE("pi^(1/2) sqrt(2) squared is 2 pi") {
  const Coefficient x = Coefficient::pi_pow(HalfInteger::from_twice(1)) * Coefficient::sqrt_int(2);
  CHECK(x * x == Coefficient(2) * Coefficient::pi_pow(HalfInteger::whole(1)));
}

TEST_CASE("gaussian units and conjugation") {
  const Coefficient i = Coefficient::imaginary_unit();
  CHECK(i * i == Coefficient(-1));
  CHECK(Coefficient::i_pow(-1) == -i);
  CHECK(Coefficient::i_pow(7) == -i);
  CHECK(i.conj() == -i);
  const Coefficient z = Coefficient::gaussian(make_rational(1, 3), make_rational(-2, 5));
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()).as_rational().has_value());
}

TEST_CASE("(4 pi ell)^s with both signs of ell") {
  // (4 pi * 1)^(1/2) = 2 sqrt(pi)
  CHECK(Coefficient::four_pi_ell_pow(HalfInteger::from_twice(1), Rational(1)) ==
        Coefficient(2) * Coefficient::pi_pow(HalfInteger::from_twice(1)));
  // (4 pi * (-1))^(1/2) = i * 2 sqrt(pi) under the e^{i pi s} branch
  CHECK(Coefficient::four_pi_ell_pow(HalfInteger::from_twice(1), Rational(-1)) ==
        Coefficient::gaussian(0, 2) * Coefficient::pi_pow(HalfInteger::from_twice(1)));
  // (4 pi * (-2))^2 = 64 pi^2
  CHECK(Coefficient::four_pi_ell_pow(HalfInteger::whole(2), Rational(-2)) ==
        Coefficient(64) * Coefficient::pi_pow(HalfInteger::whole(2)));
  // (4 pi / 3)^(-1/2) = sqrt(3)/(2 sqrt(pi))
  const Coefficient got =
      Coefficient::four_pi_ell_pow(HalfInteger::from_twice(-1), make_rational(1, 3));
  const Coefficient want = Coefficient(make_rational(1, 2)) * Coefficient::sqrt_int(3) *
                           Coefficient::pi_pow(HalfInteger::from_twice(-1));
  CHECK(got == want);
}

TEST_CASE("numeric bridge") {
  const Coefficient c = Coefficient(2) * Coefficient::pi_pow(HalfInteger::whole(1));
  CHECK(std::abs(c.to_complex() - std::complex<double>(2 * std::numbers::pi, 0)) < 1e-14);
  const Coefficient z = Coefficient::gaussian(1, 1) * Coefficient::sqrt_int(2);
  CHECK(std::abs(z.to_complex() - std::complex<double>(std::sqrt(2.0), std::sqrt(2.0))) < 1e-14);
}

TEST_CASE("ring laws on random triples") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    const Coefficient a = random_coeff(rng);
    const Coefficient b = random_coeff(rng);
    const Coefficient c = random_coeff(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("zero and equality are canonical") {
  const Coefficient z;
  CHECK(z.is_zero());
  CHECK(z == Coefficient(0));
  const Coefficient a = Coefficient::sqrt_int(3) * Coefficient::pi_pow(HalfInteger::from_twice(1));
  CHECK((a - a).is_zero());
  CHECK(a.as_rational() == std::nullopt);
  CHECK(Coefficient(make_rational(7, 3)).as_rational() == make_rational(7, 3));
}
