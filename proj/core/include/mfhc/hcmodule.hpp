#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mfhc/coefficient.hpp"

namespace mfhc {
namespace hc {

using qexp::Coefficient;

// A K-finite vector of the principal series I(epsilon, nu): a formal linear
// combination of the basis functions phi_j, j in epsilon + 2Z.
struct PrincipalSeriesVector {
  HalfInteger epsilon;  // normalized so twice is in {0, 1, 2, 3}
  Coefficient nu;
  std::map<HalfInteger, Coefficient> combo;
};

HalfInteger normalize_epsilon(HalfInteger epsilon);

// The basis vector phi_j of I(epsilon, nu); j must lie in epsilon + 2Z.
PrincipalSeriesVector phi(HalfInteger epsilon, const Coefficient& nu, HalfInteger j);

enum class Generator { H, XPlus, XMinus, Casimir };

// H phi_j = j phi_j,  X± phi_j = (1/2)(nu + 1 ± j) phi_{j±2},
// C phi_j = (nu^2 - 1) phi_j; extended linearly.
PrincipalSeriesVector ps_apply(Generator x, const PrincipalSeriesVector& v);

// The Casimir element applied through its three displayed presentations
// (composition of H and X± only, no scalar shortcut).
enum class CasimirForm { Symmetric, LoweringFirst, RaisingFirst };
PrincipalSeriesVector casimir_via_basis(CasimirForm form, const PrincipalSeriesVector& v);

enum class ComposeOrder { DownUp, UpDown };  // DownUp = X_-^r X_+^r

// Scalar of X_-^r X_+^r phi_j (DownUp) or X_+^r X_-^r phi_j (UpDown) from
// the closed product formulas.
Coefficient ps_compose(long r, HalfInteger j, const Coefficient& nu, ComposeOrder order);

// Eigenvalues of the generator of a harmonic-form module:
// DownUp -> (-1)^r r! (k)_r on the weight-k vector,
// UpDown -> r! (k-1-r)_r on the weight-(k-2) vector.
Coefficient lemma_eigenvalue(long r, HalfInteger k, ComposeOrder order);

Rational pochhammer(const Rational& x, long r);

struct SequencePiece {
  char sign = '+';  // '+' or '-'
  Rational nu{0};
  std::string str() const;
};

struct ExactSequence {
  SequencePiece sub;
  SequencePiece quotient;
  bool nonsplit = false;
};

struct KTypeSupport {
  enum class Shape { None, UpFrom, DownFrom, FullLine };
  Shape shape = Shape::None;
  HalfInteger base;  // boundary for UpFrom/DownFrom, coset representative otherwise
  bool contains(HalfInteger j) const;
};

struct ModuleClass {
  enum class Kind {
    IrreduciblePrincipal,
    DiscretePlus,
    DiscreteMinus,
    Extension,
    IntegralOutOfScope,
    NotDecidable,
  };
  Kind kind = Kind::NotDecidable;
  HalfInteger epsilon;
  std::optional<Rational> nu;
  std::optional<ExactSequence> sequence;
  KTypeSupport support;
  std::optional<HalfInteger> generator;
  std::optional<Rational> casimir;
  std::string label;
};

std::string kind_name(ModuleClass::Kind kind);

// Decomposition of I(epsilon, nu).  For half-integral epsilon:
// nu = epsilon (mod 2)      -> 0 -> pi^-(nu) -> I -> pi^+(-nu) -> 0,
// nu + 1 = epsilon (mod 2)  -> 0 -> pi^+(nu) -> I -> pi^-(-nu) -> 0,
// nu not half-integral      -> irreducible.
// Integral epsilon is out of scope here and returns a marker.
ModuleClass ps_decompose(HalfInteger epsilon, const Rational& nu);
ModuleClass ps_decompose(HalfInteger epsilon, const Coefficient& nu);

// The module generated by a weight-k harmonic form: pi^+(k-1) when the
// lowering image vanishes, otherwise the nonsplit extension
// 0 -> pi^-(1-k) -> pi(f,k) -> pi^+(k-1) -> 0.  k must be strictly
// half-integral; the integral-weight taxonomy lives in prior work.
ModuleClass classify_form_module(HalfInteger k, bool lowering_vanishes);

struct Diagram {
  std::vector<HalfInteger> nodes;
  std::vector<bool> present;
  std::optional<HalfInteger> generator;
  enum class Transition { None, Raise, Lower } transition = Transition::None;
};

Diagram ktype_diagram(const ModuleClass& m, int window = 8);
std::string diagram_ascii(const Diagram& d);
std::string diagram_json(const Diagram& d, int indent = -1);
std::string module_json(const ModuleClass& m, int indent = -1);

}  // namespace hc
}  // namespace mfhc
