#include "mfhc/expansion.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mfhc/arith.hpp"
#include "mfhc/errors.hpp"

namespace mfhc {
namespace qexp {

namespace {
constexpr double kPi = std::numbers::pi;
}

void AnalyticTerm::sort_gammas() { std::sort(gammas.begin(), gammas.end()); }

bool AnalyticTerm::same_key(const AnalyticTerm& o) const {
  return v_pow == o.v_pow && q_pow == o.q_pow && qbar_pow == o.qbar_pow && gammas == o.gammas;
}

bool AnalyticTerm::key_less(const AnalyticTerm& o) const {
  if (q_pow != o.q_pow) return q_pow < o.q_pow;
  if (v_pow != o.v_pow) return v_pow < o.v_pow;
  if (qbar_pow != o.qbar_pow) return qbar_pow < o.qbar_pow;
  return gammas < o.gammas;
}

AnalyticTerm make_term(Coefficient c, HalfInteger v_pow, const Rational& q_pow,
                       const Rational& qbar_pow, std::vector<GammaFactor> gammas) {
  for (const auto& g : gammas)
    if (g.ell == 0) throw std::domain_error("gamma factor needs ell != 0");
  AnalyticTerm t{std::move(c), v_pow, q_pow, qbar_pow, std::move(gammas)};
  t.sort_gammas();
  return t;
}

AnalyticTerm term_mul(const AnalyticTerm& a, const AnalyticTerm& b) {
  AnalyticTerm t;
  t.coeff = a.coeff * b.coeff;
  t.v_pow = a.v_pow + b.v_pow;
  t.q_pow = a.q_pow + b.q_pow;
  t.qbar_pow = a.qbar_pow + b.qbar_pow;
  t.gammas = a.gammas;
  t.gammas.insert(t.gammas.end(), b.gammas.begin(), b.gammas.end());
  t.sort_gammas();
  return t;
}

namespace {

// Window spanning the term q-powers, at least [0, 0] when empty.
std::pair<Rational, Rational> hull(const std::vector<AnalyticTerm>& terms) {
  if (terms.empty()) return {Rational(0), Rational(0)};
  Rational lo = terms.front().q_pow, hi = terms.front().q_pow;
  for (const auto& t : terms) {
    lo = std::min(lo, t.q_pow);
    hi = std::max(hi, t.q_pow);
  }
  return {lo, hi};
}

Expansion sorted_merged(Expansion e) {
  for (auto& t : e.terms) t.sort_gammas();
  std::sort(e.terms.begin(), e.terms.end(),
            [](const AnalyticTerm& a, const AnalyticTerm& b) { return a.key_less(b); });
  std::vector<AnalyticTerm> merged;
  for (auto& t : e.terms) {
    if (!merged.empty() && merged.back().same_key(t))
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const AnalyticTerm& t) { return t.coeff.is_zero(); });
  e.terms = std::move(merged);
  return e;
}

}  // namespace

Expansion make_expansion(std::optional<HalfInteger> weight, std::vector<AnalyticTerm> terms) {
  Expansion e;
  e.weight = weight;
  e.terms = std::move(terms);
  e = sorted_merged(std::move(e));
  std::tie(e.trunc_lo, e.trunc_hi) = hull(e.terms);
  return e;
}

Expansion make_expansion(std::optional<HalfInteger> weight, std::vector<AnalyticTerm> terms,
                         const Rational& lo, const Rational& hi) {
  Expansion e = make_expansion(weight, std::move(terms));
  if (lo > e.trunc_lo || hi < e.trunc_hi)
    throw ShapeError("expansion terms fall outside the declared truncation window");
  e.trunc_lo = lo;
  e.trunc_hi = hi;
  return e;
}

Expansion normalize(const Expansion& e) {
  Expansion out = sorted_merged(e);
  for (const auto& t : out.terms)
    if (t.q_pow < out.trunc_lo || t.q_pow > out.trunc_hi)
      throw ShapeError("term q-power outside the truncation window");
  return out;
}

namespace {

Expansion finish_derivative(std::vector<AnalyticTerm> terms, const Expansion& src) {
  Expansion out;
  out.weight = std::nullopt;
  out.terms = std::move(terms);
  out = sorted_merged(std::move(out));
  auto [lo, hi] = hull(out.terms);
  out.trunc_lo = std::min(src.trunc_lo, lo);
  out.trunc_hi = std::max(src.trunc_hi, hi);
  return out;
}

}  // namespace

Expansion d_tau(const Expansion& e) {
  std::vector<AnalyticTerm> acc;
  for (const auto& t : e.terms) {
    if (t.v_pow.twice != 0) {
      AnalyticTerm n = t;
      n.v_pow = t.v_pow - 1;
      n.coeff = t.coeff * Coefficient::gaussian(0, -half_integer_to_rational(t.v_pow) / 2);
      acc.push_back(std::move(n));
    }
    if (t.q_pow != 0) {
      AnalyticTerm n = t;
      n.coeff = t.coeff * Coefficient::pi_pow(HalfInteger::whole(1)) *
                Coefficient::gaussian(0, 2 * t.q_pow);
      acc.push_back(std::move(n));
    }
    for (std::size_t g = 0; g < t.gammas.size(); ++g) {
      AnalyticTerm n = t;
      n.gammas.erase(n.gammas.begin() + static_cast<std::ptrdiff_t>(g));
      const GammaFactor& gf = t.gammas[g];
      n.coeff = t.coeff * Coefficient::gaussian(0, make_rational(1, 2)) *
                Coefficient::four_pi_ell_pow(gf.s, gf.ell);
      n.v_pow = t.v_pow + gf.s - 1;
      n.q_pow = t.q_pow + gf.ell;
      n.qbar_pow = t.qbar_pow + gf.ell;
      acc.push_back(std::move(n));
    }
  }
  return finish_derivative(std::move(acc), e);
}

Expansion d_taubar(const Expansion& e) {
  std::vector<AnalyticTerm> acc;
  for (const auto& t : e.terms) {
    if (t.v_pow.twice != 0) {
      AnalyticTerm n = t;
      n.v_pow = t.v_pow - 1;
      n.coeff = t.coeff * Coefficient::gaussian(0, half_integer_to_rational(t.v_pow) / 2);
      acc.push_back(std::move(n));
    }
    if (t.qbar_pow != 0) {
      AnalyticTerm n = t;
      n.coeff = t.coeff * Coefficient::pi_pow(HalfInteger::whole(1)) *
                Coefficient::gaussian(0, -2 * t.qbar_pow);
      acc.push_back(std::move(n));
    }
    for (std::size_t g = 0; g < t.gammas.size(); ++g) {
      AnalyticTerm n = t;
      n.gammas.erase(n.gammas.begin() + static_cast<std::ptrdiff_t>(g));
      const GammaFactor& gf = t.gammas[g];
      n.coeff = t.coeff * Coefficient::gaussian(0, make_rational(-1, 2)) *
                Coefficient::four_pi_ell_pow(gf.s, gf.ell);
      n.v_pow = t.v_pow + gf.s - 1;
      n.q_pow = t.q_pow + gf.ell;
      n.qbar_pow = t.qbar_pow + gf.ell;
      acc.push_back(std::move(n));
    }
  }
  return finish_derivative(std::move(acc), e);
}

Expansion conjugate(const Expansion& e) {
  std::vector<AnalyticTerm> acc;
  for (const auto& t : e.terms) {
    for (const auto& g : t.gammas)
      if (g.ell < 0)
        throw NonRealGammaBranch("cannot conjugate Gamma(s, 4 pi ell v) with ell < 0");
    AnalyticTerm n = t;
    n.coeff = t.coeff.conj();
    std::swap(n.q_pow, n.qbar_pow);
    acc.push_back(std::move(n));
  }
  Expansion out;
  out.weight = e.weight;
  out.terms = std::move(acc);
  out = sorted_merged(std::move(out));
  std::tie(out.trunc_lo, out.trunc_hi) = hull(out.terms);
  return out;
}

std::complex<double> eval_numeric(const Expansion& e, std::complex<double> tau) {
  if (tau.imag() <= 0) throw std::domain_error("eval_numeric needs Im tau > 0");
  const double u = tau.real();
  const double v = tau.imag();
  std::complex<double> acc{0, 0};
  for (const auto& t : e.terms) {
    // Exponential magnitudes are combined in log space: a decaying gamma
    // factor routinely rides on a growing q-power (the harmonic atoms), and
    // the two only stay representable together.
    std::complex<double> val = t.coeff.to_complex();
    val *= std::pow(v, t.v_pow.as_double());
    const double m = t.q_pow.get_d();
    const double mp = t.qbar_pow.get_d();
    double log_mag = -2 * kPi * (m + mp) * v;
    const double phase = 2 * kPi * (m - mp) * u;
    for (const auto& g : t.gammas) {
      const double x = 4 * kPi * g.ell.get_d() * v;
      if (x > 0) {
        val *= arith::inc_gamma_scaled(g.s.as_double(), x);
        log_mag -= x;
      } else {
        val *= arith::inc_gamma_neg(g.s.as_double(), x);
      }
    }
    acc += val * std::exp(std::complex<double>(log_mag, phase));
  }
  return acc;
}

Expansion operator+(const Expansion& a, const Expansion& b) {
  Expansion out;
  if (a.weight && b.weight && *a.weight != *b.weight)
    out.weight = std::nullopt;
  else
    out.weight = a.weight ? a.weight : b.weight;
  out.terms = a.terms;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  out = sorted_merged(std::move(out));
  out.trunc_lo = std::min(a.trunc_lo, b.trunc_lo);
  out.trunc_hi = std::max(a.trunc_hi, b.trunc_hi);
  return out;
}

Expansion operator-(const Expansion& a, const Expansion& b) {
  return a + scale(b, Coefficient(-1));
}

Expansion scale(const Expansion& e, const Coefficient& c) {
  Expansion out = e;
  for (auto& t : out.terms) t.coeff = t.coeff * c;
  return sorted_merged(std::move(out));
}

Expansion mul_term(const Expansion& e, const AnalyticTerm& t) {
  Expansion out;
  out.weight = e.weight;
  for (const auto& s : e.terms) out.terms.push_back(term_mul(s, t));
  out = sorted_merged(std::move(out));
  out.trunc_lo = e.trunc_lo + t.q_pow;
  out.trunc_hi = e.trunc_hi + t.q_pow;
  return out;
}

// ---------------------------------------------------------------------------
// JSON serialization.  Rationals and half-integers travel as exact strings;
// a unicode minus in incoming text is accepted as '-'.

namespace {

std::string ascii_minus(std::string s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
        static_cast<unsigned char>(s[i + 1]) == 0x88 &&
        static_cast<unsigned char>(s[i + 2]) == 0x92) {
      out += '-';
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

nlohmann::json rational_json(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return rational_str(r);
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(ascii_minus(j.get<std::string>()));
  throw std::invalid_argument("expected rational as integer or string");
}

}  // namespace

std::string to_json_string(const Expansion& e, int indent) {
  nlohmann::json j;
  j["weight"] = e.weight ? nlohmann::json(e.weight->str()) : nlohmann::json(nullptr);
  j["truncation"] = {rational_json(e.trunc_lo), rational_json(e.trunc_hi)};
  j["terms"] = nlohmann::json::array();
  for (const auto& t : e.terms) {
    nlohmann::json jt;
    nlohmann::json coeff = nlohmann::json::array();
    for (const auto& [key, val] : t.coeff.monomials()) {
      std::string display = gaussian_str(val);
      if (key.pi_pow.twice != 0) display += "*pi^" + key.pi_pow.str();
      if (key.radicand != 1) display += "*sqrt(" + std::to_string(key.radicand) + ")";
      coeff.push_back({display, "r=" + key.pi_pow.str(), "d=" + std::to_string(key.radicand),
                       "re=" + rational_str(val.re), "im=" + rational_str(val.im)});
    }
    jt["coeff"] = std::move(coeff);
    jt["v"] = t.v_pow.str();
    jt["q"] = rational_str(t.q_pow);
    jt["qbar"] = rational_str(t.qbar_pow);
    nlohmann::json gammas = nlohmann::json::array();
    for (const auto& g : t.gammas) gammas.push_back({g.s.str(), rational_str(g.ell)});
    jt["gammas"] = std::move(gammas);
    j["terms"].push_back(std::move(jt));
  }
  return indent < 0 ? j.dump() : j.dump(indent);
}

Expansion expansion_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  std::optional<HalfInteger> weight;
  if (j.contains("weight") && !j.at("weight").is_null())
    weight = parse_half_integer(ascii_minus(j.at("weight").get<std::string>()));
  std::vector<AnalyticTerm> terms;
  for (const auto& jt : j.at("terms")) {
    Coefficient c;
    for (const auto& jm : jt.at("coeff")) {
      // [display, "r=..", "d=..", "re=..", "im=.."]; the display is ignored.
      auto field = [&](std::size_t idx, const char* tag) {
        std::string s = ascii_minus(jm.at(idx).get<std::string>());
        const std::string prefix = std::string(tag) + "=";
        if (s.rfind(prefix, 0) != 0)
          throw std::invalid_argument("coefficient monomial field '" + s + "' lacks " + prefix);
        return s.substr(prefix.size());
      };
      const HalfInteger pi_pow = parse_half_integer(field(1, "r"));
      const long radicand = std::stol(field(2, "d"));
      const Rational re = parse_rational(field(3, "re"));
      const Rational im = parse_rational(field(4, "im"));
      c += Coefficient::gaussian(re, im) * Coefficient::pi_pow(pi_pow) *
           Coefficient::sqrt_int(radicand);
    }
    std::vector<GammaFactor> gammas;
    for (const auto& jg : jt.at("gammas"))
      gammas.push_back({parse_half_integer(ascii_minus(jg.at(0).get<std::string>())),
                        parse_rational(ascii_minus(jg.at(1).get<std::string>()))});
    terms.push_back(make_term(c, parse_half_integer(ascii_minus(jt.at("v").get<std::string>())),
                              parse_rational(ascii_minus(jt.at("q").get<std::string>())),
                              parse_rational(ascii_minus(jt.at("qbar").get<std::string>())),
                              std::move(gammas)));
  }
  Expansion e = make_expansion(weight, std::move(terms));
  if (j.contains("truncation")) {
    const Rational lo = rational_from_json(j.at("truncation").at(0));
    const Rational hi = rational_from_json(j.at("truncation").at(1));
    e.trunc_lo = std::min(lo, e.trunc_lo);
    e.trunc_hi = std::max(hi, e.trunc_hi);
  }
  return e;
}

}  // namespace qexp
}  // namespace mfhc
