#include "mdc/qlattice.hpp"

#include <algorithm>
#include <numeric>

namespace mdc {

namespace {

BigInt gcd_big(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// extended gcd: returns (g, s, t) with s*a + t*b = g >= 0
std::tuple<BigInt, BigInt, BigInt> ext_gcd(const BigInt& a, const BigInt& b) {
  if (b == 0) {
    if (a < 0) return {-a, -1, 0};
    return {a, 1, 0};
  }
  auto [g, s, t] = ext_gcd(b, a % b);
  return {g, t, s - (a / b) * t};
}

}  // namespace

QLattice QLattice::from_generators(const std::vector<PlaneVec>& gens) {
  // clear denominators to work over Z
  BigInt den = 1;
  for (const auto& v : gens) {
    den = den / gcd_big(den, v.x.den()) * v.x.den();
    den = den / gcd_big(den, v.y.den()) * v.y.den();
  }
  struct IVec { BigInt x, y; };
  std::vector<IVec> ivs;
  for (const auto& v : gens) {
    if (v.is_zero()) continue;
    ivs.push_back({v.x.num() * (den / v.x.den()), v.y.num() * (den / v.y.den())});
  }
  QLattice out;
  if (ivs.empty()) return out;

  // combine to a single vector carrying gcd of the y components
  BigInt gy = 0, wx = 0;
  for (const auto& v : ivs) {
    if (v.y == 0) continue;
    if (gy == 0) {
      gy = v.y < 0 ? -v.y : v.y;
      wx = v.y < 0 ? -v.x : v.x;
    } else {
      auto [g, s, t] = ext_gcd(gy, v.y);
      wx = s * wx + t * v.x;
      gy = g;
    }
  }
  // eliminate y components, gather x gcd
  BigInt gx = 0;
  for (const auto& v : ivs) {
    BigInt rx = v.x;
    if (gy != 0) rx -= (v.y / gy) * wx;
    gx = gcd_big(gx, rx);
  }
  if (gx != 0 && gy != 0) {
    out.rank_ = 2;
    BigInt r = wx % gx;
    if (r < 0) r += gx;
    out.b1_ = PlaneVec(Rational(gx, den), Rational(0));
    out.b2_ = PlaneVec(Rational(r, den), Rational(gy, den));
  } else if (gx != 0) {
    out.rank_ = 1;
    out.b1_ = PlaneVec(Rational(gx, den), Rational(0));
  } else if (gy != 0) {
    out.rank_ = 1;
    out.b1_ = PlaneVec(Rational(wx, den), Rational(gy, den));
  }
  return out;
}

std::vector<PlaneVec> QLattice::basis() const {
  if (rank_ == 0) return {};
  if (rank_ == 1) return {b1_};
  return {b1_, b2_};
}

std::optional<std::pair<BigInt, BigInt>> QLattice::coords(const PlaneVec& v) const {
  if (rank_ == 0) {
    if (v.is_zero()) return std::pair<BigInt, BigInt>{0, 0};
    return std::nullopt;
  }
  if (rank_ == 1) {
    // v = k b1
    Rational k;
    if (!b1_.x.is_zero()) k = v.x / b1_.x; else k = v.y / b1_.y;
    if (!k.is_integer()) return std::nullopt;
    if (b1_.scaled(k) != v) return std::nullopt;
    return std::pair<BigInt, BigInt>{k.num(), 0};
  }
  Rational beta = v.y / b2_.y;
  if (!beta.is_integer()) return std::nullopt;
  Rational alpha = (v.x - beta * b2_.x) / b1_.x;
  if (!alpha.is_integer()) return std::nullopt;
  return std::pair<BigInt, BigInt>{alpha.num(), beta.num()};
}

bool QLattice::contains(const PlaneVec& v) const { return coords(v).has_value(); }

Rational QLattice::covolume() const {
  if (rank_ != 2) return Rational(0);
  return (b1_.x * b2_.y - b1_.y * b2_.x).abs();
}

std::optional<BigInt> QLattice::index_of(const QLattice& sub) const {
  if (rank_ != 2 || sub.rank_ != 2) return std::nullopt;
  if (!contains(sub.b1()) || !contains(sub.b2())) return std::nullopt;
  Rational q = sub.covolume() / covolume();
  if (!q.is_integer()) fail(ErrKind::Internal, "non-integral lattice index");
  return q.num();
}

QLattice QLattice::join(const QLattice& other) const {
  std::vector<PlaneVec> gens = basis();
  for (const auto& v : other.basis()) gens.push_back(v);
  return from_generators(gens);
}

QLattice QLattice::transformed(const Mat2Q& m) const {
  std::vector<PlaneVec> gens;
  for (const auto& v : basis()) gens.push_back(m.apply(v));
  return from_generators(gens);
}

PlaneVec QLattice::reduce(const PlaneVec& v) const {
  if (rank_ != 2) fail(ErrKind::Internal, "reduce needs a rank-2 lattice");
  // coordinates of v in (b1, b2), then take fractional parts
  Rational beta = v.y / b2_.y;
  Rational alpha = (v.x - beta * b2_.x) / b1_.x;
  Rational fa = alpha - Rational(alpha.floor());
  Rational fb = beta - Rational(beta.floor());
  return b1_.scaled(fa) + b2_.scaled(fb);
}

std::string QLattice::str() const {
  if (rank_ == 0) return "{0}";
  if (rank_ == 1) return "Z" + b1_.str();
  return "Z" + b1_.str() + "+Z" + b2_.str();
}

}  // namespace mdc
