#pragma once

#include <optional>
#include <string>

#include "mdc/moebius.hpp"
#include "mdc/tau.hpp"

namespace mdc {

// Euclidean-plane map z -> m z + t with m a root of unity in Q(zeta_12) and
// t a tau-scalar. When t is symbolic the multiplier must be +/-1: that is the
// only case the symbolic composition law ever needs, and anything else has no
// tau-free normal form.
class AffineMap {
 public:
  AffineMap() : m_(1), t_(TauScalar::concrete(CycloNumber(0))) {}
  AffineMap(CycloNumber multiplier, TauScalar translation)
      : m_(std::move(multiplier)), t_(std::move(translation)) {
    if (m_.unit_order() == 0)
      fail(ErrKind::SymbolicMultiplierViolation, "affine multiplier must be a root of unity");
    if (t_.is_symbolic() && !m_.is_rational())
      fail(ErrKind::SymbolicMultiplierViolation,
           "symbolic translation requires multiplier in {1,-1}");
  }

  static AffineMap translation(TauScalar t) { return AffineMap(CycloNumber(1), std::move(t)); }
  static AffineMap rotation(CycloNumber m) {
    return AffineMap(std::move(m), TauScalar::concrete(CycloNumber(0)));
  }

  const CycloNumber& multiplier() const { return m_; }
  const TauScalar& translation() const { return t_; }

  bool is_identity() const { return m_.is_one() && t_.is_zero(); }
  bool is_translation() const { return m_.is_one(); }
  int multiplier_order() const { return m_.unit_order(); }

  // (m1,t1) o (m2,t2) = (m1 m2, m1 t2 + t1)
  friend AffineMap operator*(const AffineMap& f, const AffineMap& g) {
    if (g.t_.is_symbolic() && !f.m_.is_rational())
      fail(ErrKind::SymbolicMultiplierViolation,
           "composition would scale a symbolic translation by a non-rational multiplier");
    return AffineMap(f.m_ * g.m_, f.m_ * g.t_ + f.t_);
  }

  AffineMap inverse() const {
    CycloNumber mi = m_.inverse();
    return AffineMap(mi, -(mi * t_));
  }

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.m_ == b.m_ && a.t_ == b.t_;
  }
  friend bool operator!=(const AffineMap& a, const AffineMap& b) { return !(a == b); }

  TauScalar eval(const TauScalar& z) const { return m_ * z + t_; }

  // Projective order: order of the multiplier for non-translations,
  // 0 (infinite) for nontrivial translations, 1 for the identity.
  int order() const {
    if (is_identity()) return 1;
    if (is_translation()) return 0;
    return multiplier_order();
  }

  // Fixed point t/(1-m) of a non-translation.
  TauScalar fixed_point() const {
    if (is_translation()) fail(ErrKind::IdentityInput, "translation has no finite fixed point");
    CycloNumber inv = (CycloNumber(1) - m_).inverse();
    return inv * t_;
  }

  ExactMoebius to_moebius() const {
    if (t_.is_symbolic())
      fail(ErrKind::SymbolicObstruction, "matrix form needs a concrete translation");
    return {m_, t_.conc(), CycloNumber(0), CycloNumber(1)};
  }
  ExactMoebius to_moebius(const CycloNumber& tau_value) const {
    return {m_, t_.concretize(tau_value), CycloNumber(0), CycloNumber(1)};
  }
  AffineMap concretized(const CycloNumber& tau_value) const {
    return AffineMap(m_, TauScalar::concrete(t_.concretize(tau_value)));
  }

  std::string str() const { return m_.str() + "|" + t_.str(); }

 private:
  CycloNumber m_;
  TauScalar t_;
};

inline AffineMap affine_compose_and_eval(const AffineMap& f, const AffineMap& g) {
  return f * g;
}
inline ExactMoebius affine_to_moebius(const AffineMap& f) { return f.to_moebius(); }

}  // namespace mdc
