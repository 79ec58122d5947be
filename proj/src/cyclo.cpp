#include "mdc/cyclo.hpp"

#include <sstream>
#include <vector>

namespace mdc {

CycloNumber CycloNumber::root12(int k) {
  k %= 12;
  if (k < 0) k += 12;
  // zeta^4 = zeta^2 - 1, zeta^6 = -1
  static const Rational Z(0), I(1);
  switch (k) {
    case 0: return CycloNumber(1);
    case 1: return zeta();
    case 2: return tau6();
    case 3: return i();
    case 4: return CycloNumber(-1, 0, 1, 0);
    case 5: return CycloNumber(0, -1, 0, 1);
    default: return -root12(k - 6);
  }
}

CycloNumber CycloNumber::from_re_im(const RealQuad& re, const RealQuad& im) {
  // re + im * zeta^3 with sqrt3 = 2 zeta - zeta^3 and sqrt3*zeta^3 = 2 zeta^2 - 1
  const Rational &a1 = re.rat_part(), &b1 = re.root_part();
  const Rational &a2 = im.rat_part(), &b2 = im.root_part();
  return CycloNumber(a1 - b2, Rational(2) * b1, Rational(2) * b2, a2 - b1);
}

RealQuad CycloNumber::to_realquad() const {
  if (!is_real()) fail(ErrKind::Internal, "to_realquad on non-real cyclotomic value");
  return re();
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  std::array<Rational, 7> r{};
  for (int i = 0; i < 4; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) r[i + j] += c_[i] * o.c_[j];
  }
  // zeta^6 = -1, zeta^5 = zeta^3 - zeta, zeta^4 = zeta^2 - 1
  r[0] -= r[6];
  r[3] += r[5];
  r[1] -= r[5];
  r[2] += r[4];
  r[0] -= r[4];
  c_ = {r[0], r[1], r[2], r[3]};
  return *this;
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& o) { return *this *= o.inverse(); }

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) fail(ErrKind::DivisionByZero, "inverse of zero cyclotomic value");
  // Solve M x = e0 where M is multiplication by *this in the power basis.
  std::array<std::array<Rational, 5>, 4> m;
  CycloNumber col = *this;
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) m[i][j] = col.c_[i];
    if (j < 3) col *= zeta();
  }
  for (int i = 0; i < 4; ++i) m[i][4] = Rational(i == 0 ? 1 : 0);

  for (int col_i = 0, row = 0; col_i < 4 && row < 4; ++col_i) {
    int piv = -1;
    for (int r = row; r < 4; ++r)
      if (!m[r][col_i].is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    Rational inv = Rational(1) / m[row][col_i];
    for (int k = col_i; k <= 4; ++k) m[row][k] *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == row || m[r][col_i].is_zero()) continue;
      Rational f = m[r][col_i];
      for (int k = col_i; k <= 4; ++k) m[r][k] -= f * m[row][k];
    }
    ++row;
  }
  CycloNumber out(m[0][4], m[1][4], m[2][4], m[3][4]);
  if (out * *this != one()) fail(ErrKind::Internal, "cyclotomic inverse failed");
  return out;
}

CycloNumber CycloNumber::pow(long long n) const {
  CycloNumber base = n < 0 ? inverse() : *this;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-n) : n;
  CycloNumber acc = one();
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

int CycloNumber::unit_order() const {
  if (norm_sq() != RealQuad(1)) return 0;
  CycloNumber p = *this;
  for (int k = 1; k <= 12; ++k) {
    if (p.is_one()) return k;
    p *= *this;
  }
  return 0;
}

CycloNumber CycloNumber::parse(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) parts.push_back(tok);
  if (parts.size() != 4) fail(ErrKind::ParseError, "cyclotomic literal needs 4 components: '" + s + "'");
  return CycloNumber(Rational::parse(parts[0]), Rational::parse(parts[1]),
                     Rational::parse(parts[2]), Rational::parse(parts[3]));
}

CycloNumber cyclo_inverse(const CycloNumber& a) { return a.inverse(); }

std::optional<CycloNumber> cyclo_sqrt(const CycloNumber& x) {
  if (x.is_zero()) return CycloNumber::zero();
  RealQuad u = x.re(), v = x.im();
  auto canonical = [](CycloNumber y) {
    for (int k = 0; k < 4; ++k) {
      if (y[k].is_zero()) continue;
      return y[k].sign() > 0 ? y : -y;
    }
    return y;
  };
  if (v.is_zero()) {
    if (u.sign() > 0) {
      if (auto p = realquad_sqrt(u)) return canonical(CycloNumber::from_realquad(*p));
      return std::nullopt;
    }
    if (auto q = realquad_sqrt(-u))
      return canonical(CycloNumber::from_re_im(RealQuad(0), *q));
    return std::nullopt;
  }
  // y = p + q i with p, q in Q(sqrt3): p^2 - q^2 = u, 2 p q = v
  auto m = realquad_sqrt(u * u + v * v);
  if (!m) return std::nullopt;
  if (auto p = realquad_sqrt((u + *m) / RealQuad(2))) {
    if (!p->is_zero()) {
      RealQuad q = v / (RealQuad(2) * *p);
      CycloNumber y = CycloNumber::from_re_im(*p, q);
      if (y * y == x) return canonical(y);
    }
  }
  if (auto q = realquad_sqrt((*m - u) / RealQuad(2))) {
    if (!q->is_zero()) {
      RealQuad p = v / (RealQuad(2) * *q);
      CycloNumber y = CycloNumber::from_re_im(p, *q);
      if (y * y == x) return canonical(y);
    }
  }
  return std::nullopt;
}

}  // namespace mdc
