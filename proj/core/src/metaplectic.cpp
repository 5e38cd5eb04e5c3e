#include "mfhc/metaplectic.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mfhc/errors.hpp"

namespace mfhc {
namespace mp {

namespace {
constexpr double kPi = std::numbers::pi;

std::complex<double> principal_omega(const Mat2& g, std::complex<double> tau) {
  if (g.c == 0.0) {
    // Exact at the split: sqrt(d) for d > 0, i sqrt(|d|) for d < 0.
    if (g.d > 0) return {std::sqrt(g.d), 0.0};
    return {0.0, std::sqrt(-g.d)};
  }
  return std::sqrt(g.c * tau + g.d);
}

int branch_against_principal(const Mat2& g, std::complex<double> tau,
                             std::complex<double> omega_value) {
  const std::complex<double> p = principal_omega(g, tau);
  return std::real(omega_value * std::conj(p)) >= 0 ? +1 : -1;
}

}  // namespace

std::complex<double> MetaplecticElement::omega(std::complex<double> tau) const {
  return static_cast<double>(branch) * principal_omega(g, tau);
}

std::complex<double> MetaplecticElement::moebius(std::complex<double> tau) const {
  return (g.a * tau + g.b) / (g.c * tau + g.d);
}

MetaplecticElement identity() { return {}; }

MetaplecticElement k_elem(double theta) {
  MetaplecticElement x;
  x.g = {std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta)};
  const std::complex<double> omega_i = std::polar(1.0, -theta / 2.0);
  x.branch = branch_against_principal(x.g, {0.0, 1.0}, omega_i);
  return x;
}

MSign parse_msign(const std::string& s) {
  if (s == "+1" || s == "1" || s == "+") return MSign::Plus;
  if (s == "-1" || s == "-") return MSign::Minus;
  if (s == "+i" || s == "i") return MSign::PlusI;
  if (s == "-i") return MSign::MinusI;
  throw std::invalid_argument("cannot parse sign '" + s + "' (want +1, -1, +i, -i)");
}

MetaplecticElement m_elem(double a, MSign s) {
  if (a == 0) throw std::domain_error("m(a, s) needs a != 0");
  const bool imaginary_sign = (s == MSign::PlusI || s == MSign::MinusI);
  if ((a > 0 && imaginary_sign) || (a < 0 && !imaginary_sign))
    throw SignDomainError("m(a, s): a > 0 pairs with s = ±1, a < 0 with s = ±i");
  MetaplecticElement x;
  x.g = {a, 0, 0, 1.0 / a};
  std::complex<double> omega_value;
  if (a > 0)
    omega_value = {(s == MSign::Plus ? 1.0 : -1.0) * std::sqrt(1.0 / a), 0.0};
  else
    omega_value = {0.0, (s == MSign::PlusI ? 1.0 : -1.0) * std::sqrt(-1.0 / a)};
  x.branch = branch_against_principal(x.g, {0.0, 1.0}, omega_value);
  return x;
}

MetaplecticElement n_elem(double b) {
  MetaplecticElement x;
  x.g = {1, b, 0, 1};
  x.branch = +1;
  return x;
}

MetaplecticElement multiply(const MetaplecticElement& x, const MetaplecticElement& y) {
  MetaplecticElement z;
  z.g = {x.g.a * y.g.a + x.g.b * y.g.c, x.g.a * y.g.b + x.g.b * y.g.d,
         x.g.c * y.g.a + x.g.d * y.g.c, x.g.c * y.g.b + x.g.d * y.g.d};
  const std::complex<double> tau{0.0, 1.0};
  const std::complex<double> w = x.omega(y.moebius(tau)) * y.omega(tau);
  z.branch = branch_against_principal(z.g, tau, w);
  return z;
}

Mat2 project(const MetaplecticElement& x) { return x.g; }

NMKParts nmk_decompose(const MetaplecticElement& x) {
  NMKParts parts;
  const double r = std::hypot(x.g.c, x.g.d);
  parts.a = 1.0 / r;
  double theta = std::atan2(-x.g.c, x.g.d);
  if (theta < 0) theta += 2 * kPi;
  parts.b = parts.a * (x.g.b * std::cos(theta) - x.g.a * std::sin(theta));
  parts.n = n_elem(parts.b);
  parts.m = m_elem(parts.a, MSign::Plus);
  // Two lifts of the rotation angle; exactly one matches the branch bit.
  for (int lift = 0; lift < 2; ++lift) {
    parts.theta = theta + 2 * kPi * lift;
    parts.k = k_elem(parts.theta);
    if (multiply(multiply(parts.n, parts.m), parts.k).branch == x.branch) break;
  }
  return parts;
}

bool approx_equal(const MetaplecticElement& x, const MetaplecticElement& y, double tol) {
  return std::fabs(x.g.a - y.g.a) <= tol && std::fabs(x.g.b - y.g.b) <= tol &&
         std::fabs(x.g.c - y.g.c) <= tol && std::fabs(x.g.d - y.g.d) <= tol &&
         x.branch == y.branch;
}

std::string element_json(const MetaplecticElement& x, int indent) {
  nlohmann::json j;
  j["m"] = {{x.g.a, x.g.b}, {x.g.c, x.g.d}};
  j["branch"] = x.branch;
  return indent < 0 ? j.dump() : j.dump(indent);
}

MetaplecticElement element_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  MetaplecticElement x;
  x.g.a = j.at("m").at(0).at(0).get<double>();
  x.g.b = j.at("m").at(0).at(1).get<double>();
  x.g.c = j.at("m").at(1).at(0).get<double>();
  x.g.d = j.at("m").at(1).at(1).get<double>();
  x.branch = j.at("branch").get<int>();
  if (x.branch != 1 && x.branch != -1) throw std::invalid_argument("branch must be ±1");
  if (std::fabs(x.det() - 1.0) > 1e-12)
    throw std::invalid_argument("matrix must have determinant 1");
  return x;
}

MetaplecticElement parse_element(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("element syntax is k:<theta>, n:<b> or m:<a>,<sign>");
  const std::string head = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (head == "k") return k_elem(std::stod(rest));
  if (head == "n") return n_elem(std::stod(rest));
  if (head == "m") {
    const std::size_t comma = rest.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("m needs m:<a>,<sign>");
    return m_elem(std::stod(rest.substr(0, comma)), parse_msign(rest.substr(comma + 1)));
  }
  throw std::invalid_argument("unknown element '" + head + "' (want k, m or n)");
}

}  // namespace mp
}  // namespace mfhc
