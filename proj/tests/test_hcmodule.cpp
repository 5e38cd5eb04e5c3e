#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "mfhc/errors.hpp"
#include "mfhc/hcmodule.hpp"

using namespace mfhc;
using hc::ComposeOrder;
using hc::Generator;
using qexp::Coefficient;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(MFHC_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

hc::PrincipalSeriesVector sub(hc::PrincipalSeriesVector a, const hc::PrincipalSeriesVector& b) {
  for (const auto& [j, c] : b.combo) {
    auto it = a.combo.find(j);
    if (it == a.combo.end())
      a.combo.emplace(j, -c);
    else {
      it->second = it->second - c;
      if (it->second.is_zero()) a.combo.erase(it);
    }
  }
  return a;
}

}  // namespace

TEST_CASE("basis actions of H and X±") {
  // X+ phi_{3/2} = (5/2 + 1 + 3/2)/2 phi_{7/2} = (5/2) phi_{7/2} at nu = 5/2
  const auto v = hc::phi(HalfInteger::from_twice(3), Coefficient(make_rational(5, 2)),
                         HalfInteger::from_twice(3));
  const auto xp = hc::ps_apply(Generator::XPlus, v);
  REQUIRE(xp.combo.size() == 1);
  CHECK(xp.combo.begin()->first == HalfInteger::from_twice(7));
  CHECK(xp.combo.begin()->second == Coefficient(make_rational(5, 2)));

  // X- phi_{nu+1} = 0
  for (int nu_twice : {1, 3, -5}) {
    const Rational nu = make_rational(nu_twice, 2);
    const HalfInteger j = HalfInteger::from_twice(nu_twice + 2);
    const auto w = hc::phi(j, Coefficient(nu), j);
    CHECK(hc::ps_apply(Generator::XMinus, w).combo.empty());
  }

  // H phi_j = j phi_j
  const auto h = hc::ps_apply(Generator::H, v);
  CHECK(h.combo.begin()->second == Coefficient(make_rational(3, 2)));

  // C phi_j = (nu^2 - 1) phi_j at nu = 1/2: -3/4, and the composed forms agree
  const auto u = hc::phi(HalfInteger::from_twice(1), Coefficient(make_rational(1, 2)),
                         HalfInteger::from_twice(5));
  const auto c = hc::ps_apply(Generator::Casimir, u);
  CHECK(c.combo.begin()->second == Coefficient(make_rational(-3, 4)));
  CHECK(sub(hc::casimir_via_basis(hc::CasimirForm::Symmetric, u), c).combo.empty());
}

TEST_CASE("commutator relations on random vectors") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> small(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const HalfInteger eps = hc::normalize_epsilon(HalfInteger::from_twice(small(rng)));
    const Coefficient nu = Coefficient::gaussian(make_rational(small(rng), den(rng)),
                                                 make_rational(small(rng), den(rng)));
    hc::PrincipalSeriesVector v;
    v.epsilon = eps;
    v.nu = nu;
    for (int t = 0; t < 3; ++t)
      v.combo[HalfInteger::from_twice(eps.twice + 4 * small(rng))] =
          Coefficient(make_rational(small(rng), den(rng)));
    auto X = [&](Generator g, const hc::PrincipalSeriesVector& w) { return hc::ps_apply(g, w); };
    // [X+, X-] = H
    CHECK(sub(sub(X(Generator::XPlus, X(Generator::XMinus, v)),
                  X(Generator::XMinus, X(Generator::XPlus, v))),
              X(Generator::H, v))
              .combo.empty());
    // [H, X+] = 2 X+
    auto hx = sub(X(Generator::H, X(Generator::XPlus, v)), X(Generator::XPlus, X(Generator::H, v)));
    auto two_xp = X(Generator::XPlus, v);
    for (auto& [j, c] : two_xp.combo) c = c * Coefficient(2);
    CHECK(sub(hx, two_xp).combo.empty());
    // [H, X-] = -2 X-
    auto hm = sub(X(Generator::H, X(Generator::XMinus, v)), X(Generator::XMinus, X(Generator::H, v)));
    auto m2_xm = X(Generator::XMinus, v);
    for (auto& [j, c] : m2_xm.combo) c = c * Coefficient(-2);
    CHECK(sub(hm, m2_xm).combo.empty());
    // all Casimir presentations act identically
    const auto c1 = hc::casimir_via_basis(hc::CasimirForm::Symmetric, v);
    const auto c2 = hc::casimir_via_basis(hc::CasimirForm::LoweringFirst, v);
    const auto c3 = hc::casimir_via_basis(hc::CasimirForm::RaisingFirst, v);
    CHECK(sub(c1, c2).combo.empty());
    CHECK(sub(c2, c3).combo.empty());
    CHECK(sub(c1, hc::ps_apply(Generator::Casimir, v)).combo.empty());
  }
}

TEST_CASE("ps_compose closed products against iterated application") {
  // r = 1, j = k, nu = k - 1, X-X+ gives -k; k = 3/2 -> -3/2
  CHECK(hc::ps_compose(1, HalfInteger::from_twice(3), Coefficient(make_rational(1, 2)),
                       ComposeOrder::DownUp) == Coefficient(make_rational(-3, 2)));
  // r = 2, j = k, nu = k - 1, k = 3/2 -> 2! (3/2)(5/2) = 15/2
  CHECK(hc::ps_compose(2, HalfInteger::from_twice(3), Coefficient(make_rational(1, 2)),
                       ComposeOrder::DownUp) == Coefficient(make_rational(15, 2)));

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> small(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const Coefficient nu = Coefficient(make_rational(small(rng), den(rng)));
    const HalfInteger eps = hc::normalize_epsilon(HalfInteger::from_twice(small(rng)));
    const HalfInteger j = HalfInteger::from_twice(eps.twice + 4 * small(rng));
    for (long r = 1; r <= 20; r += (r < 4 ? 1 : 7)) {
      auto v = hc::phi(eps, nu, j);
      for (long i = 0; i < r; ++i) v = hc::ps_apply(Generator::XPlus, v);
      for (long i = 0; i < r; ++i) v = hc::ps_apply(Generator::XMinus, v);
      const Coefficient want = hc::ps_compose(r, j, nu, ComposeOrder::DownUp);
      if (want.is_zero()) {
        CHECK(v.combo.empty());
      } else {
        REQUIRE(v.combo.size() == 1);
        CHECK(v.combo.begin()->second == want);
      }
      auto w = hc::phi(eps, nu, j);
      for (long i = 0; i < r; ++i) w = hc::ps_apply(Generator::XMinus, w);
      for (long i = 0; i < r; ++i) w = hc::ps_apply(Generator::XPlus, w);
      const Coefficient want_ud = hc::ps_compose(r, j, nu, ComposeOrder::UpDown);
      if (want_ud.is_zero()) {
        CHECK(w.combo.empty());
      } else {
        REQUIRE(w.combo.size() == 1);
        CHECK(w.combo.begin()->second == want_ud);
      }
    }
  }
}

TEST_CASE("lemma eigenvalues") {
  // r = 1, k = 3/2: downup -> -3/2, updown -> k - 2 = -1/2
  CHECK(hc::lemma_eigenvalue(1, HalfInteger::from_twice(3), ComposeOrder::DownUp) ==
        Coefficient(make_rational(-3, 2)));
  CHECK(hc::lemma_eigenvalue(1, HalfInteger::from_twice(3), ComposeOrder::UpDown) ==
        Coefficient(make_rational(-1, 2)));
  // equality with ps_compose at nu = k-1: j = k (downup) and j = k-2 (updown)
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> small(-12, 12);
  for (int trial = 0; trial < 25; ++trial) {
    const HalfInteger k = HalfInteger::from_twice(2 * small(rng) + 1);
    const Coefficient nu = Coefficient(half_integer_to_rational(k) - 1);
    for (long r = 1; r <= 20; ++r) {
      CHECK(hc::lemma_eigenvalue(r, k, ComposeOrder::DownUp) ==
            hc::ps_compose(r, k, nu, ComposeOrder::DownUp));
      CHECK(hc::lemma_eigenvalue(r, k, ComposeOrder::UpDown) ==
            hc::ps_compose(r, k - 2, nu, ComposeOrder::UpDown));
    }
  }
}

TEST_CASE("principal series decomposition") {
  // (1/2, 1/2): 0 -> pi^-(1/2) -> I -> pi^+(-1/2) -> 0
  const auto m1 = hc::ps_decompose(HalfInteger::from_twice(1), make_rational(1, 2));
  REQUIRE(m1.kind == hc::ModuleClass::Kind::Extension);
  REQUIRE(m1.sequence.has_value());
  CHECK(m1.sequence->sub.sign == '-');
  CHECK(m1.sequence->sub.nu == make_rational(1, 2));
  CHECK(m1.sequence->quotient.sign == '+');
  CHECK(m1.sequence->quotient.nu == make_rational(-1, 2));

  // (1/2, 3/2): 0 -> pi^+(3/2) -> I -> pi^-(-3/2) -> 0
  const auto m2 = hc::ps_decompose(HalfInteger::from_twice(1), make_rational(3, 2));
  REQUIRE(m2.sequence.has_value());
  CHECK(m2.sequence->sub.sign == '+');
  CHECK(m2.sequence->sub.nu == make_rational(3, 2));
  CHECK(m2.sequence->quotient.sign == '-');
  CHECK(m2.sequence->quotient.nu == make_rational(-3, 2));

  // (1/2, 1/3): irreducible
  CHECK(hc::ps_decompose(HalfInteger::from_twice(1), make_rational(1, 3)).kind ==
        hc::ModuleClass::Kind::IrreduciblePrincipal);

  // integral epsilon is out of scope; irrational nu is not decidable
  CHECK(hc::ps_decompose(HalfInteger::whole(1), Rational(2)).kind ==
        hc::ModuleClass::Kind::IntegralOutOfScope);
  CHECK(hc::ps_decompose(HalfInteger::from_twice(1), Coefficient::sqrt_int(2)).kind ==
        hc::ModuleClass::Kind::NotDecidable);

  // 40-case table: parity of nu - epsilon decides the sequence orientation
  for (int eps_twice : {1, 3}) {
    for (int t = 0; t < 10; ++t) {
      const Rational nu = make_rational(2 * t - 9, 2);  // odd/2 values around 0
      const auto m = hc::ps_decompose(HalfInteger::from_twice(eps_twice), nu);
      REQUIRE(m.kind == hc::ModuleClass::Kind::Extension);
      const long diff = to_long(nu - make_rational(eps_twice, 2));
      CHECK(m.sequence->sub.sign == (diff % 2 == 0 ? '-' : '+'));
      const auto mi = hc::ps_decompose(HalfInteger::from_twice(eps_twice),
                                       nu + make_rational(1, 3));
      CHECK(mi.kind == hc::ModuleClass::Kind::IrreduciblePrincipal);
    }
  }
}

TEST_CASE("unique vanishing transition for half-integral nu") {
  for (int eps_twice : {1, 3}) {
    for (int nu_twice : {-7, -3, 1, 5, 9}) {
      const HalfInteger eps = HalfInteger::from_twice(eps_twice);
      const Coefficient nu(make_rational(nu_twice, 2));
      int vanishing = 0;
      for (int j_twice = -400 + eps_twice; j_twice <= 400; j_twice += 4) {
        const auto v = hc::phi(eps, nu, HalfInteger::from_twice(j_twice));
        if (hc::ps_apply(Generator::XPlus, v).combo.empty()) ++vanishing;
        if (hc::ps_apply(Generator::XMinus, v).combo.empty()) ++vanishing;
      }
      CHECK(vanishing == 1);
    }
  }
}

TEST_CASE("classification of form modules") {
  const auto ext = hc::classify_form_module(HalfInteger::from_twice(3), false);
  REQUIRE(ext.kind == hc::ModuleClass::Kind::Extension);
  REQUIRE(ext.sequence.has_value());
  CHECK(ext.sequence->sub.sign == '-');
  CHECK(ext.sequence->sub.nu == make_rational(-1, 2));
  CHECK(ext.sequence->quotient.sign == '+');
  CHECK(ext.sequence->quotient.nu == make_rational(1, 2));
  CHECK(ext.sequence->nonsplit);
  CHECK(ext.casimir == make_rational(-3, 4));
  CHECK(ext.support.shape == hc::KTypeSupport::Shape::FullLine);

  const auto plus = hc::classify_form_module(HalfInteger::from_twice(1), true);
  CHECK(plus.kind == hc::ModuleClass::Kind::DiscretePlus);
  CHECK(plus.nu == make_rational(-1, 2));
  CHECK(plus.support.shape == hc::KTypeSupport::Shape::UpFrom);
  CHECK(plus.support.contains(HalfInteger::from_twice(1)));
  CHECK(plus.support.contains(HalfInteger::from_twice(5)));
  CHECK(!plus.support.contains(HalfInteger::from_twice(-3)));
  CHECK(!plus.support.contains(HalfInteger::from_twice(3)));  // wrong coset

  CHECK_THROWS_AS(hc::classify_form_module(HalfInteger::whole(2), false), WeightError);

  // each K-type appears at most once: supports are plain sets by construction
  int count = 0;
  for (int j = -21; j <= 21; j += 2)
    if (ext.support.contains(HalfInteger::from_twice(j))) ++count;
  CHECK(count == 11);  // every second half-integer in the window, once each
}

TEST_CASE("K-type diagrams against golden files") {
  struct Case {
    const char* file;
    int k_twice;
    bool lowering_vanishes;
  };
  const Case cases[] = {
      {"diagram_L0_k5_2.txt", 5, true},    {"diagram_L0_k7_2.txt", 7, true},
      {"diagram_Lnz_k5_2.txt", 5, false},  {"diagram_Lnz_k7_2.txt", 7, false},
      {"diagram_L0_k1_2.txt", 1, true},    {"diagram_L0_km1_2.txt", -1, true},
      {"diagram_Lnz_k1_2.txt", 1, false},  {"diagram_Lnz_km1_2.txt", -1, false},
      {"diagram_intro_k3_2.txt", 3, false},
  };
  for (const auto& c : cases) {
    const auto m = hc::classify_form_module(HalfInteger::from_twice(c.k_twice),
                                            c.lowering_vanishes);
    CHECK(hc::diagram_ascii(hc::ktype_diagram(m)) == read_golden(c.file));
  }
}

TEST_CASE("diagram window precondition") {
  const auto m = hc::classify_form_module(HalfInteger::from_twice(3), false);
  CHECK_THROWS_AS(hc::ktype_diagram(m, 3), std::domain_error);
  CHECK_NOTHROW(hc::ktype_diagram(m, 4));
}

TEST_CASE("diagram json names the support and transition") {
  const auto m = hc::classify_form_module(HalfInteger::from_twice(3), false);
  const std::string j = hc::diagram_json(hc::ktype_diagram(m));
  CHECK(j.find("\"generator\":\"3/2\"") != std::string::npos);
  CHECK(j.find("\"transition\":\"raise\"") != std::string::npos);
  CHECK(j.find("\"axis_marks\":[0,1]") != std::string::npos);
  CHECK(j.find("\"-1/2\"") != std::string::npos);
}
