#pragma once

#include <cmath>
#include <optional>
#include <ostream>
#include <string>

#include "mdc/rational.hpp"

namespace mdc {

// Element a + b*sqrt(3) of the real subfield Q(sqrt(3)) of Q(zeta_12).
// Carries exact sign tests and an exact floor, so every geometric
// comparison (norms, radii) stays in rational arithmetic.
class RealQuad {
 public:
  RealQuad() = default;
  RealQuad(Rational a) : a_(std::move(a)) {}  // NOLINT: implicit by design
  RealQuad(long long a) : a_(a) {}            // NOLINT
  RealQuad(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  const Rational& rat_part() const { return a_; }
  const Rational& root_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  RealQuad operator-() const { return RealQuad(-a_, -b_); }
  RealQuad& operator+=(const RealQuad& o) { a_ += o.a_; b_ += o.b_; return *this; }
  RealQuad& operator-=(const RealQuad& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  RealQuad& operator*=(const RealQuad& o) {
    Rational na = a_ * o.a_ + Rational(3) * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    return *this;
  }
  RealQuad& operator/=(const RealQuad& o) {
    if (o.is_zero()) fail(ErrKind::DivisionByZero, "RealQuad division by zero");
    // conjugate a - b sqrt3; field norm a^2 - 3 b^2 is nonzero for nonzero elements
    Rational n = o.a_ * o.a_ - Rational(3) * o.b_ * o.b_;
    RealQuad conj(o.a_, -o.b_);
    *this *= conj;
    a_ /= n;
    b_ /= n;
    return *this;
  }

  friend RealQuad operator+(RealQuad a, const RealQuad& b) { return a += b; }
  friend RealQuad operator-(RealQuad a, const RealQuad& b) { return a -= b; }
  friend RealQuad operator*(RealQuad a, const RealQuad& b) { return a *= b; }
  friend RealQuad operator/(RealQuad a, const RealQuad& b) { return a /= b; }

  friend bool operator==(const RealQuad& x, const RealQuad& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const RealQuad& x, const RealQuad& y) { return !(x == y); }

  // Exact sign of a + b*sqrt(3).
  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against 3 b^2
    Rational a2 = a_ * a_, b23 = Rational(3) * b_ * b_;
    if (a2 == b23) return 0;  // cannot happen, sqrt(3) irrational; kept for safety
    return a2 > b23 ? sa : sb;
  }

  friend bool operator<(const RealQuad& x, const RealQuad& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const RealQuad& x, const RealQuad& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const RealQuad& x, const RealQuad& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const RealQuad& x, const RealQuad& y) { return (x - y).sign() >= 0; }

  RealQuad abs() const { return sign() < 0 ? -*this : *this; }

  // Exact floor via rational interval refinement of sqrt(3).
  BigInt floor() const {
    if (b_.is_zero()) return a_.floor();
    Rational lo(1), hi(2);
    for (int iter = 0; iter < 512; ++iter) {
      Rational xlo = b_.sign() > 0 ? a_ + b_ * lo : a_ + b_ * hi;
      Rational xhi = b_.sign() > 0 ? a_ + b_ * hi : a_ + b_ * lo;
      BigInt flo = xlo.floor(), fhi = xhi.floor();
      if (flo == fhi) return flo;
      Rational mid = (lo + hi) / Rational(2);
      if (mid * mid < Rational(3)) lo = mid; else hi = mid;
    }
    fail(ErrKind::Internal, "RealQuad::floor failed to converge");
  }

  double to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(3.0);
  }

  std::string str() const {
    if (b_.is_zero()) return a_.str();
    std::string s;
    if (!a_.is_zero()) s = a_.str() + (b_.sign() > 0 ? "+" : "");
    return s + b_.str() + "*sqrt3";
  }

  friend std::ostream& operator<<(std::ostream& os, const RealQuad& x) { return os << x.str(); }

 private:
  Rational a_, b_;
};

// Exact square root within Q(sqrt(3)), if one exists.
// Solves (x + y sqrt3)^2 = a + b sqrt3.
inline std::optional<RealQuad> realquad_sqrt(const RealQuad& v) {
  if (v.sign() < 0) return std::nullopt;
  if (v.is_zero()) return RealQuad(0);
  const Rational& a = v.rat_part();
  const Rational& b = v.root_part();
  if (b.is_zero()) {
    if (auto r = rational_sqrt(a)) return RealQuad(*r);          // x^2 = a
    if (auto r = rational_sqrt(a / Rational(3))) return RealQuad(Rational(0), *r);  // 3 y^2 = a
    return std::nullopt;
  }
  // x^2 + 3 y^2 = a, 2 x y = b -> 4 x^4 - 4 a x^2 + 3 b^2 = 0
  Rational disc = a * a - Rational(3) * b * b;
  auto d = rational_sqrt(disc);
  if (!d) return std::nullopt;
  for (const Rational& x2 : {(a + *d) / Rational(2), (a - *d) / Rational(2)}) {
    if (x2.sign() < 0) continue;
    if (auto x = rational_sqrt(x2)) {
      if (x->is_zero()) continue;
      Rational y = b / (Rational(2) * *x);
      RealQuad root(*x, y);
      if (root.sign() < 0) root = -root;
      if (root * root == v) return root;
    }
  }
  return std::nullopt;
}

}  // namespace mdc
