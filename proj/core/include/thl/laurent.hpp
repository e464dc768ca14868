#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>

namespace thl {

using Coeff = boost::multiprecision::cpp_int;

/// Laurent polynomial in the two skein variables a and z, exact integer
/// coefficients.
class LaurentPoly {
 public:
  using Key = std::pair<int, int>;  // (exponent of a, exponent of z)

  LaurentPoly() = default;

  static LaurentPoly one() { return monomial(1, 0, 0); }
  static LaurentPoly monomial(Coeff c, int a_exp, int z_exp);
  /// Value of a disjoint unknotted loop: a z^-1 - a^-1 z^-1.
  static LaurentPoly loop_value();

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Coeff>& terms() const { return terms_; }
  Coeff coefficient(int a_exp, int z_exp) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly l, const LaurentPoly& r) {
    l += r;
    return l;
  }
  friend LaurentPoly operator-(LaurentPoly l, const LaurentPoly& r) {
    l -= r;
    return l;
  }
  friend LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r);
  LaurentPoly operator-() const;

  /// Multiply by the monomial a^da z^dz.
  LaurentPoly shifted(int da, int dz) const;
  LaurentPoly scaled(const Coeff& c) const;
  LaurentPoly pow(int n) const;

  /// The image under a -> a^-1, z -> -z (the polynomial of the mirror
  /// diagram).
  LaurentPoly mirrored() const;

  bool operator==(const LaurentPoly&) const = default;

  std::string text() const;

 private:
  std::map<Key, Coeff> terms_;
  void trim();
};

}  // namespace thl
