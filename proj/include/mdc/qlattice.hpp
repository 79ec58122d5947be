#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdc/rational.hpp"

namespace mdc {

// Vector in Q^2, used as coordinates relative to the basis {1, tau}.
struct PlaneVec {
  Rational x, y;

  PlaneVec() = default;
  PlaneVec(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  PlaneVec operator-() const { return {-x, -y}; }
  friend PlaneVec operator+(const PlaneVec& a, const PlaneVec& b) { return {a.x + b.x, a.y + b.y}; }
  friend PlaneVec operator-(const PlaneVec& a, const PlaneVec& b) { return {a.x - b.x, a.y - b.y}; }
  PlaneVec scaled(const Rational& r) const { return {x * r, y * r}; }
  friend bool operator==(const PlaneVec& a, const PlaneVec& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const PlaneVec& a, const PlaneVec& b) { return !(a == b); }
  // lexicographic, for deterministic tie-breaking
  friend bool operator<(const PlaneVec& a, const PlaneVec& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
  std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

// 2x2 rational matrix (multiplier action on {1, tau} coordinates).
struct Mat2Q {
  Rational m00, m01, m10, m11;

  static Mat2Q identity() { return {1, 0, 0, 1}; }
  static Mat2Q scalar(const Rational& r) { return {r, 0, 0, r}; }

  PlaneVec apply(const PlaneVec& v) const {
    return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y};
  }
  Rational det() const { return m00 * m11 - m01 * m10; }
  Mat2Q inverse() const {
    Rational d = det();
    if (d.is_zero()) fail(ErrKind::DivisionByZero, "singular 2x2 matrix");
    return {m11 / d, -m01 / d, -m10 / d, m00 / d};
  }
  friend Mat2Q operator*(const Mat2Q& a, const Mat2Q& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
  }
  friend bool operator==(const Mat2Q& a, const Mat2Q& b) {
    return a.m00 == b.m00 && a.m01 == b.m01 && a.m10 == b.m10 && a.m11 == b.m11;
  }
};

// Finitely generated subgroup of Q^2 in canonical Hermite form.
// Rank-2 basis is b1 = (a, 0), b2 = (b, c) with a, c > 0 and 0 <= b < a,
// so two lattices are equal iff their canonical bases match.
class QLattice {
 public:
  QLattice() = default;  // trivial lattice

  static QLattice from_generators(const std::vector<PlaneVec>& gens);

  int rank() const { return rank_; }
  const PlaneVec& b1() const { return b1_; }
  const PlaneVec& b2() const { return b2_; }
  std::vector<PlaneVec> basis() const;

  bool contains(const PlaneVec& v) const;
  // integer coordinates of v in the basis, if v is a lattice point
  std::optional<std::pair<BigInt, BigInt>> coords(const PlaneVec& v) const;

  // covolume |det| of the basis (zero unless rank 2)
  Rational covolume() const;

  // index [this : sub] for a finite-index sublattice, nullopt otherwise
  std::optional<BigInt> index_of(const QLattice& sub) const;

  // smallest lattice containing both
  QLattice join(const QLattice& other) const;
  QLattice transformed(const Mat2Q& m) const;

  // reduce v modulo the lattice into the fundamental domain [0,1)^2
  // in basis coordinates; rank must be 2
  PlaneVec reduce(const PlaneVec& v) const;

  friend bool operator==(const QLattice& a, const QLattice& b) {
    return a.rank_ == b.rank_ && a.b1_ == b.b1_ && a.b2_ == b.b2_;
  }
  friend bool operator!=(const QLattice& a, const QLattice& b) { return !(a == b); }

  std::string str() const;

 private:
  int rank_ = 0;
  PlaneVec b1_, b2_;
};

}  // namespace mdc
