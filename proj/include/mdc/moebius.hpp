#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdc/cyclo.hpp"
#include "mdc/floatc.hpp"

namespace mdc {

enum class TransKind { Identity, Parabolic, Elliptic, Loxodromic };

// Conjugacy classification. Elliptic order is the projective order when
// finite (searched up to 24); std::nullopt means an irrational rotation.
struct TransClass {
  TransKind kind = TransKind::Identity;
  std::optional<int> order;

  static TransClass identity() { return {TransKind::Identity, 1}; }
  static TransClass parabolic() { return {TransKind::Parabolic, std::nullopt}; }
  static TransClass elliptic(std::optional<int> n) { return {TransKind::Elliptic, n}; }
  static TransClass loxodromic() { return {TransKind::Loxodromic, std::nullopt}; }

  bool operator==(const TransClass& o) const { return kind == o.kind && order == o.order; }
  std::string str() const;
};

template <class Scalar>
struct ExtPoint {
  bool infinite = false;
  Scalar value{};

  static ExtPoint infinity() { return {true, Scalar{}}; }
  static ExtPoint finite(Scalar v) { return {false, std::move(v)}; }
};

using ExactPoint = ExtPoint<CycloNumber>;
using FloatPoint = ExtPoint<FloatC>;

// Projective 2x2 matrix acting on the extended plane; entries homogeneous
// per map (exact cyclotomic or floating complex).
struct ExactMoebius {
  CycloNumber a, b, c, d;

  ExactMoebius() : a(1), b(0), c(0), d(1) {}
  ExactMoebius(CycloNumber a_, CycloNumber b_, CycloNumber c_, CycloNumber d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static ExactMoebius identity() { return {}; }
  static ExactMoebius scaling(const CycloNumber& m) { return {m, 0, 0, 1}; }
  static ExactMoebius translation(const CycloNumber& t) { return {1, t, 0, 1}; }

  CycloNumber det() const { return a * d - b * c; }
  CycloNumber tr() const { return a + d; }
  bool degenerate() const { return det().is_zero(); }

  ExactMoebius inverse() const { return {d, -b, -c, a}; }
  bool is_identity() const { return b.is_zero() && c.is_zero() && a == d && !a.is_zero(); }

  ExactPoint apply(const ExactPoint& p) const;

  // canonical projective representative: first nonzero entry scaled to 1
  ExactMoebius canonical() const;
  // det-1 form when a square root of det exists in the field
  std::optional<ExactMoebius> unit_det() const;
  std::string key() const;  // canonical dedup key
  std::string str() const;
  static ExactMoebius parse(const std::string& s);

  FloatC embed_entry(const CycloNumber& x) const { return x.embed(); }
};

struct FloatMoebius {
  FloatC a, b, c, d;

  FloatMoebius() : a(1.0), b(0.0), c(0.0), d(1.0) {}
  FloatMoebius(FloatC a_, FloatC b_, FloatC c_, FloatC d_) : a(a_), b(b_), c(c_), d(d_) {}

  static FloatMoebius identity() { return {}; }

  FloatC det() const { return a * d - b * c; }
  FloatC tr() const { return a + d; }
  double scale() const;

  FloatMoebius inverse() const { return {d, -b, -c, a}; }
  bool is_identity(double eps) const;
  bool is_identity() const { return is_identity(float_tolerance()); }

  FloatPoint apply(const FloatPoint& p) const;
  std::string str() const;
};

ExactMoebius compose(const ExactMoebius& f, const ExactMoebius& g);
FloatMoebius compose(const FloatMoebius& f, const FloatMoebius& g);

bool proj_eq(const ExactMoebius& f, const ExactMoebius& g);
bool proj_eq(const FloatMoebius& f, const FloatMoebius& g, double eps);
inline bool proj_eq(const FloatMoebius& f, const FloatMoebius& g) {
  return proj_eq(f, g, float_tolerance());
}

TransClass classify(const ExactMoebius& f);
TransClass classify(const FloatMoebius& f);

std::vector<ExactPoint> fixed_points(const ExactMoebius& f);
std::vector<FloatPoint> fixed_points(const FloatMoebius& f);

FloatMoebius embed_moebius(const ExactMoebius& f);

}  // namespace mdc
