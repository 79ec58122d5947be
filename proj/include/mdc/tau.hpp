#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>

#include "mdc/cyclo.hpp"

namespace mdc {

// Lattice parameter value: either symbolic q0 + q1*tau with tau a generic
// complex number of positive imaginary part, or a concrete Q(zeta_12) value.
// Symbolic values form a Q-vector space; there is no tau^2 reduction, so
// multiplying two symbolic values is an error by contract.
class TauScalar {
 public:
  struct Symbolic {
    Rational q0, q1;
    bool operator==(const Symbolic& o) const { return q0 == o.q0 && q1 == o.q1; }
  };

  TauScalar() : v_(Symbolic{0, 0}) {}
  static TauScalar symbolic(Rational q0, Rational q1) {
    return TauScalar(Symbolic{std::move(q0), std::move(q1)});
  }
  static TauScalar tau() { return symbolic(0, 1); }
  static TauScalar concrete(CycloNumber c) { return TauScalar(std::move(c)); }

  bool is_symbolic() const { return std::holds_alternative<Symbolic>(v_); }
  bool is_concrete() const { return std::holds_alternative<CycloNumber>(v_); }
  const Symbolic& sym() const { return std::get<Symbolic>(v_); }
  const CycloNumber& conc() const { return std::get<CycloNumber>(v_); }

  bool is_zero() const {
    return is_symbolic() ? (sym().q0.is_zero() && sym().q1.is_zero()) : conc().is_zero();
  }
  // true when the value is a plain rational in either representation
  std::optional<Rational> as_rational() const {
    if (is_symbolic()) {
      if (sym().q1.is_zero()) return sym().q0;
      return std::nullopt;
    }
    if (conc().is_rational()) return conc()[0];
    return std::nullopt;
  }

  TauScalar operator-() const {
    if (is_symbolic()) return symbolic(-sym().q0, -sym().q1);
    return concrete(-conc());
  }

  friend TauScalar operator+(const TauScalar& a, const TauScalar& b) {
    if (a.is_symbolic() && b.is_symbolic())
      return symbolic(a.sym().q0 + b.sym().q0, a.sym().q1 + b.sym().q1);
    if (a.is_concrete() && b.is_concrete()) return concrete(a.conc() + b.conc());
    // mixed: fold a rational constant into the symbolic part, otherwise refuse
    const TauScalar& s = a.is_symbolic() ? a : b;
    const TauScalar& c = a.is_symbolic() ? b : a;
    if (auto r = c.as_rational()) return symbolic(s.sym().q0 + *r, s.sym().q1);
    fail(ErrKind::SymbolicObstruction, "cannot add symbolic tau and non-rational concrete value");
  }
  friend TauScalar operator-(const TauScalar& a, const TauScalar& b) { return a + (-b); }

  TauScalar scaled(const Rational& r) const {
    if (is_symbolic()) return symbolic(sym().q0 * r, sym().q1 * r);
    return concrete(conc() * CycloNumber(r));
  }

  // Multiplication by a cyclotomic factor. For symbolic values only
  // rational factors are defined (no tau^2 reduction exists).
  friend TauScalar operator*(const CycloNumber& m, const TauScalar& t) {
    if (t.is_concrete()) return concrete(m * t.conc());
    if (m.is_rational()) return t.scaled(m[0]);
    fail(ErrKind::SymbolicObstruction, "non-rational multiplier on symbolic tau value");
  }

  friend bool operator==(const TauScalar& a, const TauScalar& b) {
    if (a.is_symbolic() != b.is_symbolic()) {
      auto ra = a.as_rational(), rb = b.as_rational();
      return ra && rb && *ra == *rb;
    }
    if (a.is_symbolic()) return a.sym() == b.sym();
    return a.conc() == b.conc();
  }
  friend bool operator!=(const TauScalar& a, const TauScalar& b) { return !(a == b); }

  // Substitute a concrete tau value (must have positive imaginary part).
  CycloNumber concretize(const CycloNumber& tau_value) const {
    if (is_concrete()) return conc();
    if (tau_value.im().sign() <= 0)
      fail(ErrKind::InvalidTau, "tau substitution needs positive imaginary part");
    return CycloNumber(sym().q0) + CycloNumber(sym().q1) * tau_value;
  }

  std::complex<double> embed(std::complex<double> tau_value) const {
    if (is_concrete()) return conc().embed();
    if (tau_value.imag() <= 0.0)
      fail(ErrKind::InvalidTau, "tau evaluation needs positive imaginary part");
    return std::complex<double>(sym().q0.to_double()) +
           std::complex<double>(sym().q1.to_double()) * tau_value;
  }

  // Symbolic: "q0+q1*tau"; concrete: cyclotomic "c0,c1,c2,c3".
  std::string str() const {
    if (is_concrete()) return conc().str();
    return sym().q0.str() + (sym().q1.sign() < 0 ? "" : "+") + sym().q1.str() + "*tau";
  }
  static TauScalar parse(const std::string& s);

  friend std::ostream& operator<<(std::ostream& os, const TauScalar& t) { return os << t.str(); }

 private:
  explicit TauScalar(Symbolic s) : v_(std::move(s)) {}
  explicit TauScalar(CycloNumber c) : v_(std::move(c)) {}
  std::variant<Symbolic, CycloNumber> v_;
};

inline TauScalar TauScalar_parse_impl(const std::string& s) {
  auto star = s.find("*tau");
  if (star == std::string::npos) return TauScalar::concrete(CycloNumber::parse(s));
  std::string head = s.substr(0, star);
  auto split = head.find_last_of("+-");
  // the sign may belong to q0's own numerator, e.g. "-1/2+1*tau"
  while (split != std::string::npos && split == 0) split = std::string::npos;
  if (split == std::string::npos) fail(ErrKind::ParseError, "bad tau literal '" + s + "'");
  Rational q0 = Rational::parse(head.substr(0, split));
  std::string q1s = head.substr(split);
  if (q1s[0] == '+') q1s = q1s.substr(1);
  return TauScalar::symbolic(q0, Rational::parse(q1s));
}

inline TauScalar TauScalar::parse(const std::string& s) { return TauScalar_parse_impl(s); }

}  // namespace mdc
