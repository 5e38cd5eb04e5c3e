#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mfhc {

// An element of (1/2)Z stored as twice its value, so "3/2" has twice == 3 and
// "2" has twice == 4.  Weights, v-exponents, gamma parameters and K-type
// indices are all of this kind.
struct HalfInteger {
  int twice = 0;

  HalfInteger() = default;

  static HalfInteger from_twice(int t) {
    HalfInteger h;
    h.twice = t;
    return h;
  }
  static HalfInteger whole(int n) { return from_twice(2 * n); }

  bool is_integral() const { return twice % 2 == 0; }
  bool is_strictly_half() const { return !is_integral(); }

  int as_int() const {
    if (!is_integral()) throw std::domain_error("half-integer " + str() + " is not integral");
    return twice / 2;
  }
  double as_double() const { return twice / 2.0; }

  HalfInteger operator-() const { return from_twice(-twice); }
  HalfInteger operator+(HalfInteger o) const { return from_twice(twice + o.twice); }
  HalfInteger operator-(HalfInteger o) const { return from_twice(twice - o.twice); }
  HalfInteger operator+(int n) const { return from_twice(twice + 2 * n); }
  HalfInteger operator-(int n) const { return from_twice(twice - 2 * n); }
  HalfInteger operator*(int n) const { return from_twice(twice * n); }

  auto operator<=>(const HalfInteger&) const = default;

  std::string str() const {
    if (is_integral()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
};

// Accepts "2", "-3", "3/2", "-1/2" and also reduced forms like "6/4" are not
// accepted: the denominator must be 1 or 2.  Decimal notation ("1.5") is
// rejected so weights are never read ambiguously.
inline HalfInteger parse_half_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty half-integer literal");
  auto bad = [&] { return std::invalid_argument("cannot parse half-integer: '" + s + "'"); };
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t used = 0;
      int n = std::stoi(s, &used);
      if (used != s.size()) throw bad();
      return HalfInteger::whole(n);
    }
    std::size_t used = 0;
    int num = std::stoi(s.substr(0, slash), &used);
    if (used != slash) throw bad();
    const std::string den = s.substr(slash + 1);
    if (den == "1") return HalfInteger::whole(num);
    if (den != "2") throw bad();
    return HalfInteger::from_twice(num);
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
}

}  // namespace mfhc
