#include "mdc/geometry.hpp"

#include <cmath>

namespace mdc {

ExactCircle map_circle(const ExactMoebius& w, const ExactCircle& c) {
  if (w.degenerate()) fail(ErrKind::Internal, "circle image under a degenerate map");
  if (w.c.is_zero()) {
    // affine (a z + b)/d
    CycloNumber scale = w.a / w.d;
    return {w.a / w.d * c.center + w.b / w.d, scale.norm_sq() * c.radius_sq};
  }
  CycloNumber pole = -(w.d / w.c);
  CycloNumber diff = pole - c.center;
  RealQuad u = (w.c * c.center + w.d).norm_sq() - w.c.norm_sq() * c.radius_sq;
  if (u.is_zero())
    fail(ErrKind::Internal, "circle image degenerates to a line (pole on the circle)");
  // reflection of the pole in the circle maps to the image center;
  // a pole at the center reflects to infinity
  ExactPoint img = diff.is_zero()
                       ? w.apply(ExactPoint::infinity())
                       : w.apply(ExactPoint::finite(
                             c.center + CycloNumber::from_realquad(c.radius_sq) / diff.conj()));
  if (img.infinite) fail(ErrKind::Internal, "circle image center at infinity");
  RealQuad r2 = c.radius_sq * w.det().norm_sq() / (u * u);
  return {img.value, r2};
}

ExactDisk map_disk(const ExactMoebius& w, const ExactDisk& d) {
  ExactCircle img = map_circle(w, d.circle);
  ExactPoint sample =
      d.interior ? ExactPoint::finite(d.circle.center) : ExactPoint::infinity();
  ExactPoint simg = w.apply(sample);
  bool interior;
  if (simg.infinite) {
    interior = false;
  } else {
    RealQuad dist = (simg.value - img.center).norm_sq();
    int s = (dist - img.radius_sq).sign();
    if (s == 0) fail(ErrKind::Internal, "disk sample landed on the image circle");
    interior = s < 0;
  }
  return {img, interior};
}

namespace {

// |c1-c2| >= r1 + r2, in squared data: l >= 2 sqrt(s1 s2) with l = D - s1 - s2
bool centers_clear_sum(const RealQuad& dist_sq, const RealQuad& s1, const RealQuad& s2,
                       bool strict) {
  RealQuad l = dist_sq - s1 - s2;
  if (l.sign() < 0) return false;
  RealQuad lhs = l * l, rhs = RealQuad(4) * s1 * s2;
  return strict ? lhs > rhs : lhs >= rhs;
}

// |c1-c2| <= r2 - r1 and r2 >= r1 (disk 1 nested inside circle 2)
bool nested_inside(const RealQuad& dist_sq, const RealQuad& s1, const RealQuad& s2,
                   bool strict) {
  if (strict ? !(s2 > s1) : !(s2 >= s1)) return false;
  RealQuad m = s1 + s2 - dist_sq;
  if (m.sign() < 0) return false;
  RealQuad lhs = m * m, rhs = RealQuad(4) * s1 * s2;
  return strict ? lhs > rhs : lhs >= rhs;
}

}  // namespace

bool disks_disjoint_open(const ExactDisk& a, const ExactDisk& b) {
  if (a.circle == b.circle) return a.interior != b.interior;
  RealQuad d2 = (a.circle.center - b.circle.center).norm_sq();
  if (a.interior && b.interior)
    return centers_clear_sum(d2, a.circle.radius_sq, b.circle.radius_sq, false);
  if (!a.interior && !b.interior) return false;  // both neighborhoods of infinity
  const ExactDisk& inner = a.interior ? a : b;
  const ExactDisk& outer = a.interior ? b : a;
  return nested_inside(d2, inner.circle.radius_sq, outer.circle.radius_sq, false);
}

bool disks_disjoint_closed(const ExactDisk& a, const ExactDisk& b) {
  if (a.circle == b.circle) return false;  // closures share the circle
  RealQuad d2 = (a.circle.center - b.circle.center).norm_sq();
  if (a.interior && b.interior)
    return centers_clear_sum(d2, a.circle.radius_sq, b.circle.radius_sq, true);
  if (!a.interior && !b.interior) return false;
  const ExactDisk& inner = a.interior ? a : b;
  const ExactDisk& outer = a.interior ? b : a;
  return nested_inside(d2, inner.circle.radius_sq, outer.circle.radius_sq, true);
}

// --- floating mirror ------------------------------------------------------

bool FloatCircle::approx_same(const FloatCircle& o, double eps) const {
  double scale = std::max({1.0, std::abs(center), std::abs(o.center), radius_sq, o.radius_sq});
  return std::abs(center - o.center) <= eps * scale &&
         std::abs(radius_sq - o.radius_sq) <= eps * scale;
}

FloatCircle map_circle(const FloatMoebius& w, const FloatCircle& c) {
  double eps = float_tolerance();
  if (std::abs(w.c) <= eps * w.scale()) {
    FloatC scale = w.a / w.d;
    return {scale * c.center + w.b / w.d, std::norm(scale) * c.radius_sq};
  }
  FloatC pole = -(w.d / w.c);
  FloatC diff = pole - c.center;
  double u = std::norm(w.c * c.center + w.d) - std::norm(w.c) * c.radius_sq;
  if (std::abs(u) <= eps * std::max(1.0, std::norm(w.c) * c.radius_sq))
    fail(ErrKind::Internal, "circle image degenerates to a line (pole on the circle)");
  FloatPoint img = std::norm(diff) <= eps * eps * std::max(1.0, c.radius_sq)
                       ? w.apply(FloatPoint::infinity())
                       : w.apply(FloatPoint::finite(c.center + c.radius_sq / std::conj(diff)));
  if (img.infinite) fail(ErrKind::Internal, "circle image center at infinity");
  double r2 = c.radius_sq * std::norm(w.det()) / (u * u);
  return {img.value, r2};
}

FloatDisk map_disk(const FloatMoebius& w, const FloatDisk& d) {
  FloatCircle img = map_circle(w, d.circle);
  FloatPoint sample =
      d.interior ? FloatPoint::finite(d.circle.center) : FloatPoint::infinity();
  FloatPoint simg = w.apply(sample);
  bool interior = false;
  if (!simg.infinite) interior = std::norm(simg.value - img.center) < img.radius_sq;
  return {img, interior};
}

bool disks_disjoint_open(const FloatDisk& a, const FloatDisk& b, double eps) {
  if (a.circle.approx_same(b.circle, eps)) return a.interior != b.interior;
  double d = std::abs(a.circle.center - b.circle.center);
  double r1 = std::sqrt(std::max(0.0, a.circle.radius_sq));
  double r2 = std::sqrt(std::max(0.0, b.circle.radius_sq));
  if (a.interior && b.interior) return d >= r1 + r2 - eps;
  if (!a.interior && !b.interior) return false;
  double rin = a.interior ? r1 : r2;
  double rout = a.interior ? r2 : r1;
  return d <= rout - rin + eps;
}

bool disks_disjoint_closed(const FloatDisk& a, const FloatDisk& b, double eps) {
  if (a.circle.approx_same(b.circle, eps)) return false;
  double d = std::abs(a.circle.center - b.circle.center);
  double r1 = std::sqrt(std::max(0.0, a.circle.radius_sq));
  double r2 = std::sqrt(std::max(0.0, b.circle.radius_sq));
  if (a.interior && b.interior) return d > r1 + r2 + eps;
  if (!a.interior && !b.interior) return false;
  double rin = a.interior ? r1 : r2;
  double rout = a.interior ? r2 : r1;
  return d < rout - rin - eps;
}

FloatCircle embed_circle(const ExactCircle& c) {
  return {c.center.embed(), c.radius_sq.to_double()};
}
FloatDisk embed_disk(const ExactDisk& d) { return {embed_circle(d.circle), d.interior}; }

RealQuad lattice_min_norm_sq(const CycloNumber& tau_value) {
  if (tau_value.im().sign() <= 0)
    fail(ErrKind::InvalidTau, "lattice parameter needs positive imaginary part");
  CycloNumber u(1), v = tau_value;
  for (int iter = 0; iter < 256; ++iter) {
    RealQuad nu = u.norm_sq(), nv = v.norm_sq();
    if (nv < nu) {
      std::swap(u, v);
      std::swap(nu, nv);
    }
    // projection coefficient Re(v conj(u)) / |u|^2, rounded to the integers
    RealQuad mu = (v * u.conj()).re() / nu;
    BigInt t = (mu + RealQuad(Rational(1, 2))).floor();
    if (t == 0) return nu;
    v -= CycloNumber(Rational(t)) * u;
  }
  fail(ErrKind::Internal, "lattice reduction failed to converge");
}

}  // namespace mdc
