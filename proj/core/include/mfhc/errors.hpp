#pragma once

#include <stdexcept>

namespace mfhc {

// Conjugation of a gamma atom with negative argument: the complex branch has
// no conjugation rule, so the operation is refused rather than guessed.
struct NonRealGammaBranch : std::domain_error {
  using std::domain_error::domain_error;
};

// Operator applied outside its weight domain (non-integral weight for Bol,
// missing weight metadata, integral weight where half-integral is required).
struct WeightError : std::domain_error {
  using std::domain_error::domain_error;
};

// Expansion does not have the harmonic shape an operator requires.
struct ShapeError : std::domain_error {
  using std::domain_error::domain_error;
};

// (a, s) pairing violates the sign convention of the m(a, s) uniformizer.
struct SignDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Gauss sum of a finite quadratic module has |sigma| visibly away from 1.
struct DegenerateForm : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotFundamental : std::domain_error {
  using std::domain_error::domain_error;
};

struct BadGroupElement : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace mfhc
