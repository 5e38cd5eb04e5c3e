#include "mfhc/hcmodule.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

#include "mfhc/errors.hpp"

namespace mfhc {
namespace hc {

HalfInteger normalize_epsilon(HalfInteger epsilon) {
  return HalfInteger::from_twice(((epsilon.twice % 4) + 4) % 4);
}

PrincipalSeriesVector phi(HalfInteger epsilon, const Coefficient& nu, HalfInteger j) {
  PrincipalSeriesVector v;
  v.epsilon = normalize_epsilon(epsilon);
  v.nu = nu;
  if (((j.twice - v.epsilon.twice) % 4 + 4) % 4 != 0)
    throw std::domain_error("K-type " + j.str() + " does not lie in " + v.epsilon.str() + " + 2Z");
  v.combo[j] = Coefficient(1);
  return v;
}

namespace {

void add_into(std::map<HalfInteger, Coefficient>& acc, HalfInteger j, const Coefficient& c) {
  if (c.is_zero()) return;
  auto it = acc.find(j);
  if (it == acc.end()) {
    acc.emplace(j, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

PrincipalSeriesVector ps_apply(Generator x, const PrincipalSeriesVector& v) {
  PrincipalSeriesVector out;
  out.epsilon = v.epsilon;
  out.nu = v.nu;
  const Coefficient nu_plus_1 = v.nu + Coefficient(1);
  for (const auto& [j, c] : v.combo) {
    const Coefficient jr(half_integer_to_rational(j));
    switch (x) {
      case Generator::H:
        add_into(out.combo, j, c * jr);
        break;
      case Generator::XPlus:
        add_into(out.combo, j + 2,
                 c * (nu_plus_1 + jr) * Coefficient(make_rational(1, 2)));
        break;
      case Generator::XMinus:
        add_into(out.combo, j - 2,
                 c * (nu_plus_1 - jr) * Coefficient(make_rational(1, 2)));
        break;
      case Generator::Casimir:
        add_into(out.combo, j, c * (v.nu * v.nu - Coefficient(1)));
        break;
    }
  }
  return out;
}

PrincipalSeriesVector casimir_via_basis(CasimirForm form, const PrincipalSeriesVector& v) {
  auto H = [](const PrincipalSeriesVector& w) { return ps_apply(Generator::H, w); };
  auto Xp = [](const PrincipalSeriesVector& w) { return ps_apply(Generator::XPlus, w); };
  auto Xm = [](const PrincipalSeriesVector& w) { return ps_apply(Generator::XMinus, w); };
  auto add = [](PrincipalSeriesVector a, const PrincipalSeriesVector& b) {
    for (const auto& [j, c] : b.combo) add_into(a.combo, j, c);
    return a;
  };
  auto scale = [](PrincipalSeriesVector a, const Coefficient& c) {
    std::map<HalfInteger, Coefficient> combo;
    for (const auto& [j, val] : a.combo) add_into(combo, j, val * c);
    a.combo = std::move(combo);
    return a;
  };
  auto shift_H = [&](const PrincipalSeriesVector& w, long off) {
    // (H + off) w
    return add(H(w), scale(w, Coefficient(Rational(off))));
  };
  switch (form) {
    case CasimirForm::Symmetric: {
      // H^2 + 2 X+ X- + 2 X- X+
      PrincipalSeriesVector acc = H(H(v));
      acc = add(acc, scale(Xp(Xm(v)), Coefficient(2)));
      acc = add(acc, scale(Xm(Xp(v)), Coefficient(2)));
      return acc;
    }
    case CasimirForm::LoweringFirst: {
      // (H-1)^2 + 4 X+ X- - 1
      PrincipalSeriesVector acc = shift_H(shift_H(v, -1), -1);
      acc = add(acc, scale(Xp(Xm(v)), Coefficient(4)));
      return add(acc, scale(v, Coefficient(-1)));
    }
    case CasimirForm::RaisingFirst: {
      // (H+1)^2 + 4 X- X+ - 1
      PrincipalSeriesVector acc = shift_H(shift_H(v, 1), 1);
      acc = add(acc, scale(Xm(Xp(v)), Coefficient(4)));
      return add(acc, scale(v, Coefficient(-1)));
    }
  }
  throw std::logic_error("unreachable");
}

Coefficient ps_compose(long r, HalfInteger j, const Coefficient& nu, ComposeOrder order) {
  if (r < 1) throw std::domain_error("ps_compose needs r >= 1");
  const Coefficient half(make_rational(1, 2));
  const Coefficient nu_plus_1 = nu + Coefficient(1);
  Coefficient acc(1);
  const Rational jr = half_integer_to_rational(j);
  for (long s = 0; s < r; ++s) {
    if (order == ComposeOrder::DownUp) {
      // prod (1/2)(nu + 1 - ((j+2r) - 2s)) * prod (1/2)(nu + 1 + (j + 2s))
      acc *= half * (nu_plus_1 - Coefficient(jr + 2 * r - 2 * s));
      acc *= half * (nu_plus_1 + Coefficient(jr + 2 * s));
    } else {
      // prod (1/2)(nu + 1 + ((j-2r) + 2s)) * prod (1/2)(nu + 1 - (j - 2s))
      acc *= half * (nu_plus_1 + Coefficient(jr - 2 * r + 2 * s));
      acc *= half * (nu_plus_1 - Coefficient(jr - 2 * s));
    }
  }
  return acc;
}

Rational pochhammer(const Rational& x, long r) {
  Rational acc(1);
  for (long t = 0; t < r; ++t) acc *= x + t;
  return acc;
}

Coefficient lemma_eigenvalue(long r, HalfInteger k, ComposeOrder order) {
  if (r < 1) throw std::domain_error("lemma_eigenvalue needs r >= 1");
  const Rational kr = half_integer_to_rational(k);
  const Rational rf(factorial(r));
  if (order == ComposeOrder::DownUp) {
    Rational val = rf * pochhammer(kr, r);
    if (r % 2 != 0) val = -val;
    return Coefficient(val);
  }
  return Coefficient(rf * pochhammer(kr - 1 - r, r));
}

std::string SequencePiece::str() const {
  return std::string("pi^") + sign + "(" + rational_str(nu) + ")";
}

bool KTypeSupport::contains(HalfInteger j) const {
  if (((j.twice - base.twice) % 4 + 4) % 4 != 0) return false;
  switch (shape) {
    case Shape::None: return false;
    case Shape::UpFrom: return j >= base;
    case Shape::DownFrom: return j <= base;
    case Shape::FullLine: return true;
  }
  return false;
}

std::string kind_name(ModuleClass::Kind kind) {
  switch (kind) {
    case ModuleClass::Kind::IrreduciblePrincipal: return "irreducible_principal";
    case ModuleClass::Kind::DiscretePlus: return "discrete_plus";
    case ModuleClass::Kind::DiscreteMinus: return "discrete_minus";
    case ModuleClass::Kind::Extension: return "extension";
    case ModuleClass::Kind::IntegralOutOfScope: return "integral_out_of_scope";
    case ModuleClass::Kind::NotDecidable: return "not_decidable";
  }
  return "?";
}

ModuleClass ps_decompose(HalfInteger epsilon, const Rational& nu) {
  ModuleClass m;
  m.epsilon = normalize_epsilon(epsilon);
  m.nu = nu;
  m.casimir = nu * nu - 1;
  if (m.epsilon.is_integral()) {
    m.kind = ModuleClass::Kind::IntegralOutOfScope;
    m.label = "integral epsilon: see the integral-weight classification";
    return m;
  }
  m.support = {KTypeSupport::Shape::FullLine, m.epsilon};
  const Rational two_nu = 2 * nu;
  const bool nu_half_integral = is_integer(two_nu) && to_long(two_nu) % 2 != 0;
  if (!nu_half_integral) {
    m.kind = ModuleClass::Kind::IrreduciblePrincipal;
    return m;
  }
  m.kind = ModuleClass::Kind::Extension;
  const Rational diff = nu - half_integer_to_rational(m.epsilon);  // an integer here
  const bool same_coset = to_long(diff) % 2 == 0;                  // nu in epsilon + 2Z
  if (same_coset)
    m.sequence = ExactSequence{{'-', nu}, {'+', -nu}, false};
  else
    m.sequence = ExactSequence{{'+', nu}, {'-', -nu}, false};
  return m;
}

ModuleClass ps_decompose(HalfInteger epsilon, const Coefficient& nu) {
  if (auto r = nu.as_rational()) return ps_decompose(epsilon, *r);
  ModuleClass m;
  m.epsilon = normalize_epsilon(epsilon);
  m.kind = ModuleClass::Kind::NotDecidable;
  m.label = "irrational nu: irreducibility not decided";
  return m;
}

ModuleClass classify_form_module(HalfInteger k, bool lowering_vanishes) {
  if (k.is_integral())
    throw WeightError("integral weight " + k.str() + " is classified in prior work");
  const Rational kr = half_integer_to_rational(k);
  ModuleClass m;
  m.epsilon = normalize_epsilon(k);
  m.generator = k;
  m.casimir = (kr - 1) * (kr - 1) - 1;
  if (lowering_vanishes) {
    m.kind = ModuleClass::Kind::DiscretePlus;
    m.nu = kr - 1;
    m.support = {KTypeSupport::Shape::UpFrom, k};
  } else {
    m.kind = ModuleClass::Kind::Extension;
    m.sequence = ExactSequence{{'-', 1 - kr}, {'+', kr - 1}, true};
    m.support = {KTypeSupport::Shape::FullLine, k};
  }
  return m;
}

Diagram ktype_diagram(const ModuleClass& m, int window) {
  if (window < 4) throw std::domain_error("diagram window must be >= 4");
  const HalfInteger center = m.generator ? *m.generator : m.support.base;
  HalfInteger lo = center - window;
  HalfInteger hi = center + window;
  while (lo.twice >= 0) lo = lo - 2;   // keep the axis marks 0 and 1 visible
  while (hi.twice <= 2) hi = hi + 2;
  Diagram d;
  for (HalfInteger j = lo; j <= hi; j = j + 2) {
    d.nodes.push_back(j);
    d.present.push_back(m.support.contains(j));
  }
  d.generator = m.generator;
  if (m.generator) {
    d.transition = m.support.shape == KTypeSupport::Shape::DownFrom ? Diagram::Transition::Lower
                                                                    : Diagram::Transition::Raise;
  }
  return d;
}

namespace {

// Writes a UTF-8 glyph into a row addressed by visual column.
struct Row {
  std::vector<std::string> cells;
  void put(long col, const std::string& glyph) {
    if (col < 0) return;
    if (cells.size() <= static_cast<std::size_t>(col)) cells.resize(col + 1, " ");
    cells[static_cast<std::size_t>(col)] = glyph;
  }
  std::string str() const {
    std::string out;
    for (const auto& c : cells) out += c;
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
  }
};

}  // namespace

std::string diagram_ascii(const Diagram& d) {
  // Nodes sit 4 columns apart (2 columns per unit of j); the axis marks at
  // j = 0 and j = 1 land between nodes for half-integral cosets.
  if (d.nodes.empty()) return "";
  const int jmin_twice = d.nodes.front().twice;
  auto col_of_twice = [&](int twice) { return static_cast<long>(twice - jmin_twice); };
  Row labels, marks, nodes;
  labels.put(col_of_twice(0), "0");
  labels.put(col_of_twice(2), "1");
  marks.put(col_of_twice(0), "┆");
  marks.put(col_of_twice(2), "┆");
  nodes.put(col_of_twice(0), "┆");
  nodes.put(col_of_twice(2), "┆");
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const long col = col_of_twice(d.nodes[i].twice);
    const bool ring = d.generator && *d.generator == d.nodes[i];
    nodes.put(col, ring ? "◎" : (d.present[i] ? "●" : "○"));
    if (ring && d.transition == Diagram::Transition::Raise) marks.put(col + 2, "→");
    if (ring && d.transition == Diagram::Transition::Lower) marks.put(col - 2, "←");
  }
  return labels.str() + "\n" + marks.str() + "\n" + nodes.str() + "\n";
}

std::string diagram_json(const Diagram& d, int indent) {
  nlohmann::json j;
  j["support"] = nlohmann::json::array();
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    if (d.present[i]) j["support"].push_back(d.nodes[i].str());
  j["generator"] = d.generator ? nlohmann::json(d.generator->str()) : nlohmann::json(nullptr);
  switch (d.transition) {
    case Diagram::Transition::Raise: j["transition"] = "raise"; break;
    case Diagram::Transition::Lower: j["transition"] = "lower"; break;
    case Diagram::Transition::None: j["transition"] = nullptr; break;
  }
  j["axis_marks"] = {0, 1};
  return indent < 0 ? j.dump() : j.dump(indent);
}

std::string module_json(const ModuleClass& m, int indent) {
  nlohmann::json j;
  j["kind"] = kind_name(m.kind);
  j["epsilon"] = m.epsilon.str();
  if (m.nu) j["nu"] = rational_str(*m.nu);
  if (m.casimir) j["casimir"] = rational_str(*m.casimir);
  if (m.generator) j["generator"] = m.generator->str();
  if (m.sequence) {
    j["sequence"] = {{"sub", m.sequence->sub.str()},
                     {"quotient", m.sequence->quotient.str()},
                     {"nonsplit", m.sequence->nonsplit}};
  }
  switch (m.support.shape) {
    case KTypeSupport::Shape::None: j["support"] = nullptr; break;
    case KTypeSupport::Shape::UpFrom:
      j["support"] = {{"shape", "up_from"}, {"base", m.support.base.str()}};
      break;
    case KTypeSupport::Shape::DownFrom:
      j["support"] = {{"shape", "down_from"}, {"base", m.support.base.str()}};
      break;
    case KTypeSupport::Shape::FullLine:
      j["support"] = {{"shape", "full_line"}, {"base", m.support.base.str()}};
      break;
  }
  if (!m.label.empty()) j["label"] = m.label;
  return indent < 0 ? j.dump() : j.dump(indent);
}

}  // namespace hc
}  // namespace mfhc
