#pragma once

#include <array>
#include <complex>
#include <optional>
#include <ostream>
#include <string>

#include "mdc/realquad.hpp"

namespace mdc {

// Element of Q(zeta_12), zeta = e^{i pi/6}, as c0 + c1 z + c2 z^2 + c3 z^3
// reduced by the minimal polynomial z^4 = z^2 - 1. The constants the group
// catalog needs all live here: tau6 = e^{i pi/3} = z^2, i = z^3,
// omega3 = e^{2 pi i/3} = z^2 - 1.
class CycloNumber {
 public:
  CycloNumber() = default;
  CycloNumber(Rational c) { c_[0] = std::move(c); }  // NOLINT: implicit by design
  CycloNumber(long long c) { c_[0] = Rational(c); }  // NOLINT
  CycloNumber(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  const Rational& operator[](int i) const { return c_[i]; }

  static CycloNumber zero() { return CycloNumber(); }
  static CycloNumber one() { return CycloNumber(1); }
  static CycloNumber zeta() { return CycloNumber(0, 1, 0, 0); }
  static CycloNumber i() { return CycloNumber(0, 0, 0, 1); }
  static CycloNumber tau6() { return CycloNumber(0, 0, 1, 0); }      // e^{i pi/3}
  static CycloNumber omega3() { return CycloNumber(-1, 0, 1, 0); }   // e^{2 pi i/3}
  static CycloNumber sqrt3() { return CycloNumber(0, 2, 0, -1); }    // 2 zeta - zeta^3
  // zeta^k for any integer k
  static CycloNumber root12(int k);
  static CycloNumber from_realquad(const RealQuad& r) {
    return CycloNumber(r.rat_part(), Rational(2) * r.root_part(), 0, -r.root_part());
  }
  static CycloNumber from_re_im(const RealQuad& re, const RealQuad& im);

  bool is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_one() const { return *this == one(); }
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  CycloNumber conj() const {
    return CycloNumber(c_[0] + c_[2], c_[1], -c_[2], -c_[1] - c_[3]);
  }
  bool is_real() const { return *this == conj(); }

  RealQuad re() const {
    return RealQuad(c_[0] + c_[2] / Rational(2), c_[1] / Rational(2));
  }
  RealQuad im() const {
    return RealQuad(c_[1] / Rational(2) + c_[3], c_[2] / Rational(2));
  }
  RealQuad norm_sq() const { return re() * re() + im() * im(); }
  // value as an element of Q(sqrt3); requires is_real()
  RealQuad to_realquad() const;

  CycloNumber operator-() const { return CycloNumber(-c_[0], -c_[1], -c_[2], -c_[3]); }
  CycloNumber& operator+=(const CycloNumber& o) {
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
  }
  CycloNumber& operator-=(const CycloNumber& o) {
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator/=(const CycloNumber& o);

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

  CycloNumber inverse() const;
  CycloNumber pow(long long n) const;

  std::complex<double> embed() const {
    return {re().to_double(), im().to_double()};
  }

  // Multiplicative order if this is a root of unity (<= 12), else 0.
  int unit_order() const;

  // Text format: "c0,c1,c2,c3" with rational entries.
  std::string str() const {
    return c_[0].str() + "," + c_[1].str() + "," + c_[2].str() + "," + c_[3].str();
  }
  static CycloNumber parse(const std::string& s);

  friend std::ostream& operator<<(std::ostream& os, const CycloNumber& x) {
    return os << x.str();
  }

 private:
  std::array<Rational, 4> c_{};
};

inline CycloNumber cyclo_mul(const CycloNumber& a, const CycloNumber& b) { return a * b; }
CycloNumber cyclo_inverse(const CycloNumber& a);

// Square root within Q(zeta_12) when one exists.
std::optional<CycloNumber> cyclo_sqrt(const CycloNumber& x);

}  // namespace mdc
