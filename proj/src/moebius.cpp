#include "mdc/moebius.hpp"

#include <cmath>
#include <sstream>

namespace mdc {

std::string TransClass::str() const {
  switch (kind) {
    case TransKind::Identity: return "identity";
    case TransKind::Parabolic: return "parabolic";
    case TransKind::Loxodromic: return "loxodromic";
    case TransKind::Elliptic:
      return order ? "elliptic(" + std::to_string(*order) + ")" : "elliptic(irrational)";
  }
  return "?";
}

ExactPoint ExactMoebius::apply(const ExactPoint& p) const {
  if (p.infinite) {
    if (c.is_zero()) return ExactPoint::infinity();
    return ExactPoint::finite(a / c);
  }
  CycloNumber den = c * p.value + d;
  if (den.is_zero()) return ExactPoint::infinity();
  return ExactPoint::finite((a * p.value + b) / den);
}

ExactMoebius ExactMoebius::canonical() const {
  for (const CycloNumber* e : {&a, &b, &c, &d}) {
    if (e->is_zero()) continue;
    CycloNumber inv = e->inverse();
    return {a * inv, b * inv, c * inv, d * inv};
  }
  fail(ErrKind::Internal, "canonical form of zero matrix");
}

std::optional<ExactMoebius> ExactMoebius::unit_det() const {
  auto s = cyclo_sqrt(det());
  if (!s) return std::nullopt;
  CycloNumber inv = s->inverse();
  return ExactMoebius{a * inv, b * inv, c * inv, d * inv};
}

std::string ExactMoebius::key() const {
  ExactMoebius m = canonical();
  return m.a.str() + ";" + m.b.str() + ";" + m.c.str() + ";" + m.d.str();
}

std::string ExactMoebius::str() const {
  return "exact:" + a.str() + ";" + b.str() + ";" + c.str() + ";" + d.str();
}

ExactMoebius ExactMoebius::parse(const std::string& s) {
  std::string body = s;
  if (body.rfind("exact:", 0) == 0) body = body.substr(6);
  std::vector<std::string> parts;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ';')) parts.push_back(tok);
  if (parts.size() != 4) fail(ErrKind::ParseError, "moebius literal needs 4 entries");
  return {CycloNumber::parse(parts[0]), CycloNumber::parse(parts[1]),
          CycloNumber::parse(parts[2]), CycloNumber::parse(parts[3])};
}

double FloatMoebius::scale() const {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

bool FloatMoebius::is_identity(double eps) const {
  double s = scale();
  if (s == 0.0) return false;
  return std::abs(b) <= eps * s && std::abs(c) <= eps * s && std::abs(a - d) <= eps * s;
}

FloatPoint FloatMoebius::apply(const FloatPoint& p) const {
  if (p.infinite) {
    if (approx_zero(c, float_tolerance() * scale())) return FloatPoint::infinity();
    return FloatPoint::finite(a / c);
  }
  FloatC den = c * p.value + d;
  if (std::abs(den) == 0.0) return FloatPoint::infinity();
  return FloatPoint::finite((a * p.value + b) / den);
}

std::string FloatMoebius::str() const {
  auto ent = [](const FloatC& z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << "," << z.imag();
    return os.str();
  };
  return "float:" + ent(a) + ";" + ent(b) + ";" + ent(c) + ";" + ent(d);
}

ExactMoebius compose(const ExactMoebius& f, const ExactMoebius& g) {
  return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
          f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d};
}

FloatMoebius compose(const FloatMoebius& f, const FloatMoebius& g) {
  return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
          f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d};
}

bool proj_eq(const ExactMoebius& f, const ExactMoebius& g) {
  // rank-1 test on the stacked 2x4 matrix of entries
  const CycloNumber fs[4] = {f.a, f.b, f.c, f.d};
  const CycloNumber gs[4] = {g.a, g.b, g.c, g.d};
  int lead = -1;
  for (int k = 0; k < 4; ++k)
    if (!fs[k].is_zero()) { lead = k; break; }
  if (lead < 0) return false;
  if (gs[lead].is_zero()) return false;
  CycloNumber ratio = gs[lead] / fs[lead];
  for (int k = 0; k < 4; ++k)
    if (gs[k] != ratio * fs[k]) return false;
  return true;
}

bool proj_eq(const FloatMoebius& f, const FloatMoebius& g, double eps) {
  double sf = f.scale(), sg = g.scale();
  if (sf == 0.0 || sg == 0.0) return false;
  const FloatC fs[4] = {f.a / sf, f.b / sf, f.c / sf, f.d / sf};
  const FloatC gs[4] = {g.a / sg, g.b / sg, g.c / sg, g.d / sg};
  int lead = 0;
  for (int k = 1; k < 4; ++k)
    if (std::abs(fs[k]) > std::abs(fs[lead])) lead = k;
  if (std::abs(gs[lead]) <= eps) return false;
  FloatC ratio = fs[lead] / gs[lead];
  for (int k = 0; k < 4; ++k)
    if (std::abs(fs[k] - ratio * gs[k]) > eps) return false;
  return true;
}

TransClass classify(const ExactMoebius& f) {
  if (f.degenerate()) fail(ErrKind::Internal, "classify of degenerate matrix");
  if (f.is_identity()) return TransClass::identity();
  CycloNumber kappa = f.tr() * f.tr() / f.det();
  if (kappa == CycloNumber(4)) return TransClass::parabolic();
  if (kappa.is_real()) {
    RealQuad k = kappa.to_realquad();
    if (k.sign() >= 0 && k < RealQuad(4)) {
      ExactMoebius p = f;
      for (int n = 2; n <= 24; ++n) {
        p = compose(p, f);
        if (p.is_identity()) return TransClass::elliptic(n);
      }
      return TransClass::elliptic(std::nullopt);
    }
  }
  return TransClass::loxodromic();
}

TransClass classify(const FloatMoebius& f) {
  double eps = float_tolerance();
  FloatC det = f.det();
  if (std::abs(det) <= eps * f.scale() * f.scale())
    fail(ErrKind::Internal, "classify of degenerate matrix");
  if (f.is_identity()) return TransClass::identity();
  FloatC kappa = f.tr() * f.tr() / det;
  if (approx_eq(kappa, FloatC(4.0, 0.0), eps)) return TransClass::parabolic();
  if (std::abs(kappa.imag()) <= eps * std::max(1.0, std::abs(kappa)) && kappa.real() >= -eps &&
      kappa.real() < 4.0) {
    // kappa = 4 cos^2(theta/2); search the projective order up to 24
    double ct = std::sqrt(std::max(0.0, kappa.real() / 4.0));
    double theta = 2.0 * std::acos(std::min(1.0, ct));
    for (int n = 1; n <= 24; ++n) {
      double turns = n * theta / (2.0 * M_PI);
      if (std::abs(turns - std::round(turns)) < 1e-6 && std::round(turns) > 0)
        return TransClass::elliptic(n);
    }
    return TransClass::elliptic(std::nullopt);
  }
  return TransClass::loxodromic();
}

std::vector<ExactPoint> fixed_points(const ExactMoebius& f) {
  if (f.is_identity()) fail(ErrKind::IdentityInput, "fixed points of the identity");
  if (f.c.is_zero()) {
    // affine: (a z + b)/d
    if (f.a == f.d) return {ExactPoint::infinity()};  // translation
    return {ExactPoint::finite(f.b / (f.d - f.a)), ExactPoint::infinity()};
  }
  // c z^2 + (d - a) z - b = 0
  CycloNumber A = f.c, B = f.d - f.a, C = -f.b;
  CycloNumber disc = B * B - CycloNumber(4) * A * C;
  if (disc.is_zero()) {
    return {ExactPoint::finite(-B / (CycloNumber(2) * A))};
  }
  auto s = cyclo_sqrt(disc);
  if (!s)
    fail(ErrKind::SymbolicObstruction,
         "fixed points exist but lie outside Q(zeta_12); use the floating backend");
  CycloNumber twoA = CycloNumber(2) * A;
  return {ExactPoint::finite((-B + *s) / twoA), ExactPoint::finite((-B - *s) / twoA)};
}

std::vector<FloatPoint> fixed_points(const FloatMoebius& f) {
  if (f.is_identity()) fail(ErrKind::IdentityInput, "fixed points of the identity");
  double eps = float_tolerance() * f.scale();
  if (std::abs(f.c) <= eps) {
    if (approx_eq(f.a, f.d, float_tolerance())) return {FloatPoint::infinity()};
    return {FloatPoint::finite(f.b / (f.d - f.a)), FloatPoint::infinity()};
  }
  FloatC A = f.c, B = f.d - f.a, C = -f.b;
  FloatC disc = B * B - 4.0 * A * C;
  FloatC s = std::sqrt(disc);
  if (std::abs(s) <= eps) return {FloatPoint::finite(-B / (2.0 * A))};
  return {FloatPoint::finite((-B + s) / (2.0 * A)), FloatPoint::finite((-B - s) / (2.0 * A))};
}

FloatMoebius embed_moebius(const ExactMoebius& f) {
  return {f.a.embed(), f.b.embed(), f.c.embed(), f.d.embed()};
}

}  // namespace mdc
