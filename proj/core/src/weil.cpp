#include "mfhc/weil.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mfhc/errors.hpp"

namespace mfhc {
namespace weil {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex e_of(const Rational& x) { return std::polar(1.0, kTwoPi * x.get_d()); }

Rational mod1(Rational r) {
  // into [0, 1)
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return r - Rational(fl);
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<Complex>(n, {0, 0}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i][k];
      if (aik == Complex{0, 0}) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += aik * b[k][j];
    }
  return out;
}

Matrix adjoint(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = std::conj(a[j][i]);
  return out;
}

Matrix eye(std::size_t n) {
  Matrix out(n, std::vector<Complex>(n, {0, 0}));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = {1, 0};
  return out;
}

double max_dev(const Matrix& a, const Matrix& b) {
  double dev = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) dev = std::max(dev, std::abs(a[i][j] - b[i][j]));
  return dev;
}

}  // namespace

FiniteQuadraticModule::FiniteQuadraticModule(std::vector<long> orders,
                                             std::vector<std::vector<Rational>> gram) {
  FiniteQuadraticModule tmp = unchecked(std::move(orders), std::move(gram));
  // q must descend to ⊕ Z/n_i: shifting any coordinate by its order must not
  // change q mod 1.
  for (std::size_t i = 0; i < tmp.rank(); ++i) {
    for (long idx = 0; idx < tmp.size(); ++idx) {
      std::vector<long> x = tmp.element(idx);
      const Rational before = tmp.q(x);
      x[i] += tmp.orders()[i];
      if (mod1(tmp.q(x) - before) != 0)
        throw std::invalid_argument("q is not well defined modulo the cyclic orders");
    }
  }
  *this = tmp;
}

FiniteQuadraticModule FiniteQuadraticModule::unchecked(std::vector<long> orders,
                                                       std::vector<std::vector<Rational>> gram) {
  FiniteQuadraticModule d;
  if (orders.empty() && !gram.empty()) throw std::invalid_argument("gram without generators");
  for (long n : orders)
    if (n < 1) throw std::invalid_argument("cyclic orders must be positive");
  if (gram.size() != orders.size()) throw std::invalid_argument("gram size mismatch");
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (gram[i].size() != orders.size()) throw std::invalid_argument("gram size mismatch");
    for (std::size_t j = 0; j < i; ++j)
      if (gram[i][j] != gram[j][i]) throw std::invalid_argument("gram must be symmetric");
  }
  d.orders_ = std::move(orders);
  d.gram_ = std::move(gram);
  d.size_ = 1;
  for (long n : d.orders_) d.size_ *= n;
  return d;
}

FiniteQuadraticModule FiniteQuadraticModule::parse(const std::string& text) {
  std::vector<long> orders;
  std::vector<Rational> diag;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, '+')) {
    std::erase_if(piece, [](char c) { return c == ' ' || c == '\t'; });
    if (piece.empty()) throw std::invalid_argument("empty component in '" + text + "'");
    if (piece.rfind("Z/", 0) != 0 && piece.rfind("z/", 0) != 0)
      throw std::invalid_argument("component '" + piece + "' must look like Z/n:q");
    const std::size_t colon = piece.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("component '" + piece + "' lacks a :q value");
    orders.push_back(std::stol(piece.substr(2, colon - 2)));
    diag.push_back(parse_rational(piece.substr(colon + 1)));
  }
  if (orders.empty()) throw std::invalid_argument("empty module spec '" + text + "'");
  std::vector<std::vector<Rational>> gram(orders.size(),
                                          std::vector<Rational>(orders.size(), Rational(0)));
  for (std::size_t i = 0; i < orders.size(); ++i) gram[i][i] = diag[i];
  return FiniteQuadraticModule(std::move(orders), std::move(gram));
}

Rational FiniteQuadraticModule::q(const std::vector<long>& x) const {
  if (x.size() != rank()) throw std::invalid_argument("coordinate size mismatch");
  Rational acc(0);
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) acc += gram_[i][j] * x[i] * x[j];
  return mod1(acc);
}

Rational FiniteQuadraticModule::bilinear(const std::vector<long>& x,
                                         const std::vector<long>& y) const {
  std::vector<long> sum(rank());
  for (std::size_t i = 0; i < rank(); ++i) sum[i] = x[i] + y[i];
  return mod1(q(sum) - q(x) - q(y));
}

std::vector<long> FiniteQuadraticModule::element(long index) const {
  if (index < 0 || index >= size_) throw std::out_of_range("element index");
  std::vector<long> x(rank());
  for (std::size_t i = rank(); i-- > 0;) {
    x[i] = index % orders_[i];
    index /= orders_[i];
  }
  return x;
}

std::string FiniteQuadraticModule::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) os << " + ";
    os << "Z/" << orders_[i] << ":" << rational_str(gram_[i][i]);
  }
  return os.str();
}

SigmaInvariant sigma_invariant(const FiniteQuadraticModule& D) {
  Complex acc{0, 0};
  for (long i = 0; i < D.size(); ++i) acc += e_of(-D.q(D.element(i)));
  acc /= std::sqrt(static_cast<double>(D.size()));
  SigmaInvariant s;
  s.value = acc;
  const double abs_dev = std::fabs(std::abs(acc) - 1.0);
  if (abs_dev > 1e-6)
    throw DegenerateForm("quadratic form is degenerate: |sigma| = " + std::to_string(std::abs(acc)));
  if (abs_dev <= 1e-10) {
    for (int j = 0; j < 8; ++j) {
      if (std::abs(acc - std::polar(1.0, -kTwoPi * j / 8.0)) <= 1e-10) {
        s.eighth_root = j;
        break;
      }
    }
  }
  return s;
}

Matrix rho_T(const FiniteQuadraticModule& D) {
  Matrix out(static_cast<std::size_t>(D.size()),
             std::vector<Complex>(static_cast<std::size_t>(D.size()), {0, 0}));
  for (long i = 0; i < D.size(); ++i)
    out[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = e_of(D.q(D.element(i)));
  return out;
}

Matrix rho_S(const FiniteQuadraticModule& D) {
  const SigmaInvariant sigma = sigma_invariant(D);
  // Normalizer sigma(D)/sqrt(#M): since |sigma| = 1 this is 1/(conj(sigma) sqrt(#M)).
  // Written with sigma in the numerator so that (rho(S) rho(T))^3 = rho(S)^2
  // holds, which the conjugated normalizer breaks.
  const Complex norm = sigma.value / std::sqrt(static_cast<double>(D.size()));
  const std::size_t n = static_cast<std::size_t>(D.size());
  Matrix out(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto mi = D.element(static_cast<long>(i));
    for (std::size_t j = 0; j < n; ++j)
      out[i][j] = norm * e_of(-D.bilinear(mi, D.element(static_cast<long>(j))));
  }
  return out;
}

bool RelationReport::pass(double tol) const {
  return unitarity <= tol && braid <= tol && s_order <= tol && center_comm <= tol &&
         sigma_eighth_root.has_value();
}

RelationReport check_relations(const FiniteQuadraticModule& D) {
  RelationReport r;
  Complex sigma_value{1, 0};
  std::optional<int> root;
  // A corrupted q may push sigma off the unit circle; report rather than throw.
  try {
    const SigmaInvariant s = sigma_invariant(D);
    sigma_value = s.value;
    root = s.eighth_root;
  } catch (const DegenerateForm&) {
    Complex acc{0, 0};
    for (long i = 0; i < D.size(); ++i) acc += e_of(-D.q(D.element(i)));
    sigma_value = acc / std::sqrt(static_cast<double>(D.size()));
  }
  r.sigma_eighth_root = root;
  r.sigma_abs_dev = std::fabs(std::abs(sigma_value) - 1.0);

  const std::size_t n = static_cast<std::size_t>(D.size());
  const Complex norm = sigma_value / static_cast<double>(std::sqrt(static_cast<double>(D.size())));
  Matrix S(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      S[i][j] =
          norm * e_of(-D.bilinear(D.element(static_cast<long>(i)), D.element(static_cast<long>(j))));
  const Matrix T = rho_T(D);

  r.unitarity = max_dev(matmul(S, adjoint(S)), eye(n));
  const Matrix ST = matmul(S, T);
  const Matrix S2 = matmul(S, S);
  r.braid = max_dev(matmul(matmul(ST, ST), ST), S2);
  const Matrix S4 = matmul(S2, S2);
  r.s_order = max_dev(matmul(S4, S4), eye(n));
  r.center_comm = max_dev(matmul(S2, T), matmul(T, S2));
  return r;
}

std::string matrix_json(const Matrix& m, int indent) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& z : row) jr.push_back({z.real(), z.imag()});
    j.push_back(std::move(jr));
  }
  return indent < 0 ? j.dump() : j.dump(indent);
}

}  // namespace weil
}  // namespace mfhc
