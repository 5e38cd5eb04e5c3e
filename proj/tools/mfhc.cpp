// mfhc: calculator for harmonic weak Maass form expansions, their operator
// algebra, Harish-Chandra classification, Weil representations and the
// metaplectic group.
//
// Exit codes: 0 success, 1 failed property check, 2 usage error,
// 3 out-of-scope request (integral-weight classification).

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mfhc/arith.hpp"
#include "mfhc/errors.hpp"
#include "mfhc/expansion.hpp"
#include "mfhc/forms.hpp"
#include "mfhc/hcmodule.hpp"
#include "mfhc/metaplectic.hpp"
#include "mfhc/operators.hpp"
#include "mfhc/verify.hpp"
#include "mfhc/weil.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOutOfScope = 3;

double precision_scale() {
  if (const char* env = std::getenv("MFHC_PRECISION")) {
    try {
      const double scale = std::stod(env);
      if (scale > 0) return scale;
    } catch (...) {
    }
    std::cerr << "ignoring malformed MFHC_PRECISION='" << env << "'\n";
  }
  return 1.0;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in.good()) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::complex<double> parse_tau(const std::string& text) {
  // accepts "u+vi", "u-vi", "vi", "u"
  std::string s = text;
  std::erase(s, ' ');
  if (s.empty()) throw std::invalid_argument("empty tau");
  if (s.back() == 'i') {
    s.pop_back();
    if (s.empty() || s == "+") return {0, 1};
    if (s == "-") return {0, -1};
    for (std::size_t pos = s.size(); pos-- > 1;) {
      if ((s[pos] == '+' || s[pos] == '-') && s[pos - 1] != 'e' && s[pos - 1] != 'E') {
        const double re = std::stod(s.substr(0, pos));
        const std::string im_text = s.substr(pos);
        const double im = (im_text == "+") ? 1 : (im_text == "-") ? -1 : std::stod(im_text);
        return {re, im};
      }
    }
    return {0, std::stod(s)};
  }
  return {std::stod(s), 0};
}

void print_expansion_human(const mfhc::qexp::Expansion& e, std::ostream& os) {
  os << "weight: " << (e.weight ? e.weight->str() : "(none)") << "\n";
  os << "window: [" << mfhc::rational_str(e.trunc_lo) << ", " << mfhc::rational_str(e.trunc_hi)
     << "]\n";
  os << "terms: " << e.terms.size() << "\n";
  for (const auto& t : e.terms) {
    os << "  (" << t.coeff.str() << ")";
    if (t.v_pow.twice != 0) os << " v^" << t.v_pow.str();
    if (t.q_pow != 0) os << " q^" << mfhc::rational_str(t.q_pow);
    if (t.qbar_pow != 0) os << " qbar^" << mfhc::rational_str(t.qbar_pow);
    for (const auto& g : t.gammas)
      os << " G(" << g.s.str() << ", 4pi*" << mfhc::rational_str(g.ell) << "*v)";
    os << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"harmonic weak Maass form calculator"};
  app.require_subcommand(1);
  const double tol_scale = precision_scale();

  // ---- classify ----
  std::string cls_weight;
  std::string cls_lowering = "nonzero";
  int cls_window = 8;
  bool cls_json = false;
  auto* classify = app.add_subcommand("classify", "classify the module of a weight-k form");
  classify->add_option("--weight", cls_weight, "weight as a half-integer, e.g. 3/2")->required();
  classify->add_option("--lowering", cls_lowering, "zero | nonzero")
      ->check(CLI::IsMember({"zero", "nonzero"}));
  classify->add_option("--window", cls_window, "diagram half-width in K-type units");
  classify->add_flag("--json", cls_json, "machine-readable output only");

  // ---- psdecomp ----
  std::string ps_eps, ps_nu;
  bool ps_json = false;
  auto* psdecomp = app.add_subcommand("psdecomp", "decompose the principal series I(epsilon, nu)");
  psdecomp->add_option("--epsilon", ps_eps, "epsilon mod 2, e.g. 1/2")->required();
  psdecomp->add_option("--nu", ps_nu, "exact rational nu")->required();
  psdecomp->add_flag("--json", ps_json);

  // ---- op ----
  std::string op_name, op_in, op_out, op_weight;
  bool op_json = false;
  auto* op = app.add_subcommand("op", "apply a differential operator to an expansion");
  op->add_option("--name", op_name,
                 "raise | lower | laplacian | xi | bol | bol_raising | flip | d_tau | d_taubar | "
                 "conjugate")
      ->required();
  op->add_option("--in", op_in, "input expansion json file ('-' for stdin)")->required();
  op->add_option("--out", op_out, "output file (default stdout)");
  op->add_option("--weight", op_weight, "override the declared weight");
  op->add_flag("--json", op_json);

  // ---- build ----
  std::string build_what;
  long build_dmax = 400, build_nmax = 20;
  bool build_json = false;
  auto* build = app.add_subcommand("build", "build a named form");
  build->add_option("name", build_what, "e2star | e32star")->required();
  build->add_option("--dmax", build_dmax, "holomorphic truncation");
  build->add_option("--nmax", build_nmax, "non-holomorphic truncation");
  build->add_flag("--json", build_json);

  // ---- eval ----
  std::string eval_in, eval_tau;
  bool eval_json = false;
  auto* eval = app.add_subcommand("eval", "evaluate an expansion numerically");
  eval->add_option("--in", eval_in, "input expansion json file ('-' for stdin)")->required();
  eval->add_option("--tau", eval_tau, "point in the upper half plane, e.g. 0.5+1.2i")->required();
  eval->add_flag("--json", eval_json);

  // ---- hurwitz ----
  long hw_max = 100;
  bool hw_json = false;
  auto* hw = app.add_subcommand("hurwitz", "table of Hurwitz class numbers");
  hw->add_option("--max", hw_max, "largest D");
  hw->add_flag("--json", hw_json);

  // ---- mp ----
  auto* mp_cmd = app.add_subcommand("mp", "metaplectic group arithmetic");
  mp_cmd->require_subcommand(1);
  std::string mp_x, mp_y;
  bool mp_json = false;
  auto* mp_mul = mp_cmd->add_subcommand("mul", "multiply two elements");
  mp_mul->add_option("--x", mp_x, "element, e.g. k:1.57, n:2, m:-1,+i")->required();
  mp_mul->add_option("--y", mp_y, "element")->required();
  mp_mul->add_flag("--json", mp_json);
  std::string mp_dx;
  bool mp_djson = false;
  auto* mp_dec = mp_cmd->add_subcommand("decompose", "n(b) m(a,+1) k(theta) parts");
  mp_dec->add_option("--x", mp_dx, "element")->required();
  mp_dec->add_flag("--json", mp_djson);

  // ---- weil ----
  std::string weil_fqm;
  bool weil_matrices = false, weil_json = false;
  auto* weil_cmd = app.add_subcommand("weil", "Weil representation of a finite quadratic module");
  weil_cmd->add_option("--fqm", weil_fqm, "module, e.g. \"Z/2:1/4 + Z/4:1/8\"")->required();
  weil_cmd->add_flag("--matrices", weil_matrices, "emit rho(T), rho(S)");
  weil_cmd->add_flag("--json", weil_json);

  // ---- verify ----
  std::string vf_suite = "all", vf_suite_pos, vf_fqm;
  long vf_delta = -3, vf_dmax = 400, vf_nmax = 20;
  bool vf_json = false;
  auto* vf = app.add_subcommand("verify", "run a property suite");
  vf->add_option("name", vf_suite_pos, "suite name (same as --suite)")
      ->check(CLI::IsMember({"operators", "hcmodule", "weil", "shintani", "all"}));
  vf->add_option("--suite", vf_suite, "operators | hcmodule | weil | shintani | all")
      ->check(CLI::IsMember({"operators", "hcmodule", "weil", "shintani", "all"}));
  vf->add_option("--delta", vf_delta, "discriminant for the shintani suite");
  vf->add_option("--dmax", vf_dmax, "holomorphic truncation for the shintani suite");
  vf->add_option("--nmax", vf_nmax, "non-holomorphic truncation for the shintani suite");
  vf->add_option("--fqm", vf_fqm, "module override for the weil suite");
  vf->add_flag("--json", vf_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) {
      mfhc::HalfInteger k;
      try {
        k = mfhc::parse_half_integer(cls_weight);
      } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
      }
      if (k.is_integral()) {
        std::cerr << "weight " << k.str()
                  << " is integral: that classification (cases I-IV) lives in the "
                     "integral-weight theory and is out of scope here\n";
        return kExitOutOfScope;
      }
      const auto m = mfhc::hc::classify_form_module(k, cls_lowering == "zero");
      const auto d = mfhc::hc::ktype_diagram(m, cls_window);
      if (!cls_json) std::cout << mfhc::hc::diagram_ascii(d);
      nlohmann::json j;
      j["module"] = nlohmann::json::parse(mfhc::hc::module_json(m));
      j["diagram"] = nlohmann::json::parse(mfhc::hc::diagram_json(d));
      std::cout << j.dump(cls_json ? -1 : 2) << "\n";
      return kExitOk;
    }

    if (*psdecomp) {
      mfhc::HalfInteger eps;
      mfhc::Rational nu;
      try {
        eps = mfhc::parse_half_integer(ps_eps);
        nu = mfhc::parse_rational(ps_nu);
      } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
      }
      const auto m = mfhc::hc::ps_decompose(eps, nu);
      if (m.kind == mfhc::hc::ModuleClass::Kind::IntegralOutOfScope) {
        std::cerr << "integral epsilon: handled by the integral-weight classification\n";
        return kExitOutOfScope;
      }
      std::cout << mfhc::hc::module_json(m, ps_json ? -1 : 2) << "\n";
      return kExitOk;
    }

    if (*op) {
      auto e = mfhc::qexp::expansion_from_json(read_input(op_in));
      if (!op_weight.empty()) e.weight = mfhc::parse_half_integer(op_weight);
      mfhc::qexp::Expansion out;
      if (op_name == "raise")
        out = mfhc::ops::raise(e);
      else if (op_name == "lower")
        out = mfhc::ops::lower(e);
      else if (op_name == "laplacian")
        out = mfhc::ops::laplacian(e);
      else if (op_name == "xi")
        out = mfhc::ops::xi(e);
      else if (op_name == "bol")
        out = mfhc::ops::bol(e);
      else if (op_name == "bol_raising")
        out = mfhc::ops::bol_via_raising(e);
      else if (op_name == "flip")
        out = mfhc::ops::flip(e);
      else if (op_name == "d_tau")
        out = mfhc::qexp::d_tau(e);
      else if (op_name == "d_taubar")
        out = mfhc::qexp::d_taubar(e);
      else if (op_name == "conjugate")
        out = mfhc::qexp::conjugate(e);
      else {
        std::cerr << "unknown operator '" << op_name << "'\n";
        return kExitUsage;
      }
      const std::string text = mfhc::qexp::to_json_string(out, op_json ? -1 : 2);
      if (op_out.empty()) {
        if (!op_json) print_expansion_human(out, std::cout);
        std::cout << text << "\n";
      } else {
        std::ofstream f(op_out);
        f << text << "\n";
        if (!op_json) print_expansion_human(out, std::cout);
      }
      return kExitOk;
    }

    if (*build) {
      mfhc::qexp::Expansion e;
      if (build_what == "e2star")
        e = mfhc::forms::build_e2star(build_nmax);
      else if (build_what == "e32star")
        e = mfhc::forms::build_e32star(build_dmax, build_nmax);
      else {
        std::cerr << "unknown form '" << build_what << "' (want e2star or e32star)\n";
        return kExitUsage;
      }
      if (!build_json) print_expansion_human(e, std::cout);
      std::cout << mfhc::qexp::to_json_string(e, build_json ? -1 : 2) << "\n";
      return kExitOk;
    }

    if (*eval) {
      const auto e = mfhc::qexp::expansion_from_json(read_input(eval_in));
      const auto tau = parse_tau(eval_tau);
      const auto z = mfhc::qexp::eval_numeric(e, tau);
      if (eval_json) {
        nlohmann::json j;
        j["tau"] = {tau.real(), tau.imag()};
        j["value"] = {z.real(), z.imag()};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << z.real() << (z.imag() < 0 ? " - " : " + ") << std::fabs(z.imag()) << "i\n";
      }
      return kExitOk;
    }

    if (*hw) {
      const auto table = mfhc::arith::hurwitz_table(hw_max);
      if (hw_json) {
        nlohmann::json j = nlohmann::json::array();
        for (long D = 0; D <= hw_max; ++D)
          j.push_back(mfhc::rational_str(table[static_cast<std::size_t>(D)]));
        std::cout << j.dump() << "\n";
      } else {
        for (long D = 0; D <= hw_max; ++D)
          std::cout << D << " " << mfhc::rational_str(table[static_cast<std::size_t>(D)]) << "\n";
      }
      return kExitOk;
    }

    if (*mp_mul) {
      const auto x = mfhc::mp::parse_element(mp_x);
      const auto y = mfhc::mp::parse_element(mp_y);
      std::cout << mfhc::mp::element_json(mfhc::mp::multiply(x, y), mp_json ? -1 : 2) << "\n";
      return kExitOk;
    }
    if (*mp_dec) {
      const auto x = mfhc::mp::parse_element(mp_dx);
      const auto parts = mfhc::mp::nmk_decompose(x);
      nlohmann::json j;
      j["b"] = parts.b;
      j["a"] = parts.a;
      j["theta"] = parts.theta;
      j["n"] = nlohmann::json::parse(mfhc::mp::element_json(parts.n));
      j["m"] = nlohmann::json::parse(mfhc::mp::element_json(parts.m));
      j["k"] = nlohmann::json::parse(mfhc::mp::element_json(parts.k));
      std::cout << j.dump(mp_djson ? -1 : 2) << "\n";
      return kExitOk;
    }

    if (*weil_cmd) {
      const auto D = mfhc::weil::FiniteQuadraticModule::parse(weil_fqm);
      const auto rel = mfhc::weil::check_relations(D);
      nlohmann::json j;
      j["module"] = D.str();
      j["size"] = D.size();
      if (rel.sigma_eighth_root)
        j["sigma"] = "e(-" + std::to_string(*rel.sigma_eighth_root) + "/8)";
      else
        j["sigma"] = nullptr;
      j["deviations"] = {{"unitarity", rel.unitarity},
                         {"braid", rel.braid},
                         {"s_order", rel.s_order},
                         {"center_comm", rel.center_comm}};
      const bool ok = rel.pass(1e-10 * tol_scale);
      j["pass"] = ok;
      if (weil_matrices) {
        j["rho_T"] = nlohmann::json::parse(mfhc::weil::matrix_json(mfhc::weil::rho_T(D)));
        j["rho_S"] = nlohmann::json::parse(mfhc::weil::matrix_json(mfhc::weil::rho_S(D)));
      }
      std::cout << j.dump(weil_json ? -1 : 2) << "\n";
      return ok ? kExitOk : kExitPropertyFailure;
    }

    if (*vf) {
      if (!vf_suite_pos.empty()) vf_suite = vf_suite_pos;
      mfhc::verify::Options opt;
      opt.tolerance_scale = tol_scale;
      opt.delta = vf_delta;
      opt.dmax = vf_dmax;
      opt.nmax = vf_nmax;
      opt.fqm = vf_fqm;
      std::vector<mfhc::verify::Report> reports;
      if (vf_suite == "operators")
        reports.push_back(mfhc::verify::run_operators(opt));
      else if (vf_suite == "hcmodule")
        reports.push_back(mfhc::verify::run_hcmodule(opt));
      else if (vf_suite == "weil")
        reports.push_back(mfhc::verify::run_weil(opt));
      else if (vf_suite == "shintani")
        reports.push_back(mfhc::verify::run_shintani(opt));
      else
        reports = mfhc::verify::run_all(opt);
      bool all_pass = true;
      for (const auto& r : reports) all_pass = all_pass && r.pass();
      if (vf_json) {
        std::cout << mfhc::verify::report_json(reports) << "\n";
      } else {
        for (const auto& r : reports) std::cout << mfhc::verify::report_text(r);
      }
      return all_pass ? kExitOk : kExitPropertyFailure;
    }
  } catch (const mfhc::WeightError& e) {
    std::cerr << "weight error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
