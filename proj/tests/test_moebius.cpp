#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mdc/affine.hpp"
#include "mdc/moebius.hpp"

using namespace mdc;

namespace {

std::mt19937 rng(777);

Rational rnd_rat(int span = 6) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng), den(rng));
}

CycloNumber rnd_cyclo(int span = 6) {
  return CycloNumber(rnd_rat(span), rnd_rat(span), rnd_rat(span), rnd_rat(span));
}

ExactMoebius rnd_moebius() {
  while (true) {
    ExactMoebius m(rnd_cyclo(3), rnd_cyclo(3), rnd_cyclo(3), rnd_cyclo(3));
    if (!m.degenerate()) return m;
  }
}

const CycloNumber kTau = CycloNumber::tau6();
// data of the maximal genus-2 example
const ExactMoebius A = ExactMoebius::translation(CycloNumber(1));
const ExactMoebius B = ExactMoebius::translation(kTau);
const ExactMoebius E = ExactMoebius::scaling(kTau);
const ExactMoebius F{CycloNumber(0), kTau * CycloNumber(Rational(1, 16)), CycloNumber(1),
                     CycloNumber(0)};

}  // namespace

TEST_CASE("compose: E^6 = id, A A^{-1} = id") {
  ExactMoebius p = E;
  for (int k = 0; k < 5; ++k) p = compose(p, E);
  CHECK(p.is_identity());
  CHECK(compose(A, A.inverse()).is_identity());
  // order exactly 6: no earlier power is the identity
  ExactMoebius q = E;
  for (int k = 1; k < 6; ++k) {
    CHECK_FALSE(q.is_identity());
    q = compose(q, E);
  }
}

TEST_CASE("compose: F (E F) = E^{-1}, by exact matrix oracle") {
  // oracle: hand-folded product (F*E)*F entrywise
  auto mul = [](const ExactMoebius& x, const ExactMoebius& y) {
    return ExactMoebius{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                        x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  };
  ExactMoebius oracle = mul(mul(F, E), F);
  ExactMoebius got = compose(F, compose(E, F));
  CHECK(proj_eq(got, oracle));
  CHECK(proj_eq(got, E.inverse()));
}

TEST_CASE("compose agrees with pointwise action") {
  for (int it = 0; it < 200; ++it) {
    ExactMoebius f = rnd_moebius(), g = rnd_moebius();
    ExactMoebius fg = compose(f, g);
    for (const CycloNumber& z : {CycloNumber(0), CycloNumber(1), rnd_cyclo(2)}) {
      ExactPoint p = ExactPoint::finite(z);
      ExactPoint lhs = fg.apply(p);
      ExactPoint rhs = f.apply(g.apply(p));
      CHECK(lhs.infinite == rhs.infinite);
      if (!lhs.infinite) CHECK(lhs.value == rhs.value);
    }
  }
}

TEST_CASE("classify: the trichotomy examples") {
  CHECK(classify(A).kind == TransKind::Parabolic);
  TransClass e = classify(E);
  CHECK(e.kind == TransKind::Elliptic);
  CHECK(e.order == 6);
  CHECK(classify(ExactMoebius::scaling(CycloNumber(4))).kind == TransKind::Loxodromic);
  CHECK(classify(ExactMoebius::identity()).kind == TransKind::Identity);
  CHECK(classify(F) == TransClass::elliptic(2));
  CHECK(classify(ExactMoebius::scaling(CycloNumber::i())).order == 4);
  CHECK(classify(ExactMoebius::scaling(CycloNumber::omega3())).order == 3);
  CHECK(classify(ExactMoebius::scaling(CycloNumber::zeta())).order == 12);
}

TEST_CASE("classify is conjugation-invariant") {
  for (int it = 0; it < 1000; ++it) {
    ExactMoebius f = rnd_moebius(), h = rnd_moebius();
    ExactMoebius conj = compose(compose(h, f), h.inverse());
    CHECK(classify(conj) == classify(f));
  }
}

TEST_CASE("projective inverses: compose(f, inverse(f)) = identity on random maps") {
  for (int it = 0; it < 1000; ++it) {
    ExactMoebius f = rnd_moebius();
    CHECK(compose(f, f.inverse()).is_identity());
    CHECK(proj_eq(f, f));
  }
}

TEST_CASE("float and exact classification agree on catalog-style words") {
  std::vector<ExactMoebius> gens = {E, E.inverse(), ExactMoebius{-CycloNumber::one(),
                                    CycloNumber(1), CycloNumber(0), CycloNumber(1)},
                                    A, A.inverse(), B, B.inverse(), F};
  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  for (int it = 0; it < 400; ++it) {
    ExactMoebius w = ExactMoebius::identity();
    int len = 1 + it % 6;
    for (int k = 0; k < len; ++k) w = compose(w, gens[pick(rng)]);
    TransClass exact_cls = classify(w);
    TransClass float_cls = classify(embed_moebius(w));
    CHECK(exact_cls.kind == float_cls.kind);
    if (exact_cls.kind == TransKind::Elliptic) CHECK(exact_cls.order == float_cls.order);
  }
}

TEST_CASE("fixed points") {
  auto fp_a = fixed_points(A);
  REQUIRE(fp_a.size() == 1);
  CHECK(fp_a[0].infinite);

  auto fp_e = fixed_points(E);
  REQUIRE(fp_e.size() == 2);
  CHECK(((fp_e[0].infinite != fp_e[1].infinite)));
  for (auto& p : fp_e)
    if (!p.infinite) CHECK(p.value.is_zero());

  // F(z) = tau/(16 z): fixed points +/- zeta/4, exactly the circle/line data
  // of the genus-2 example (|p| = 1/4, p on the line through 0 and 1+tau)
  auto fp_f = fixed_points(F);
  REQUIRE(fp_f.size() == 2);
  CycloNumber expect = CycloNumber::zeta() * CycloNumber(Rational(1, 4));
  for (auto& p : fp_f) {
    REQUIRE_FALSE(p.infinite);
    CHECK((p.value == expect || p.value == -expect));
    CHECK(p.value.norm_sq() == RealQuad(Rational(1, 16)));
    CHECK((p.value / CycloNumber::zeta()).is_real());
    // f(p) = p exactly
    auto img = F.apply(ExactPoint::finite(p.value));
    REQUIRE_FALSE(img.infinite);
    CHECK(img.value == p.value);
  }
  CHECK(fp_f[0].value != fp_f[1].value);

  CHECK_THROWS_AS(fixed_points(ExactMoebius::identity()), Error);

  // float backend residual
  auto fp_float = fixed_points(embed_moebius(F));
  for (auto& p : fp_float) {
    auto img = embed_moebius(F).apply(p);
    CHECK(std::abs(img.value - p.value) < 1e-9);
  }
}

TEST_CASE("unit determinant normalization") {
  // z -> tau z normalizes via sqrt(tau) = zeta
  auto u = E.unit_det();
  REQUIRE(u.has_value());
  CHECK(u->det() == CycloNumber::one());
  CHECK(proj_eq(*u, E));
  // det 2 has no square root in the field: stored unnormalized
  auto v = ExactMoebius::scaling(CycloNumber(2)).unit_det();
  CHECK_FALSE(v.has_value());
}

TEST_CASE("serialization round trip") {
  CHECK(proj_eq(ExactMoebius::parse(F.str()), F));
  CHECK(ExactMoebius::parse(E.str()).a == kTau);
}

TEST_CASE("affine composition law and oracle") {
  // oracle: independent composition law evaluation
  auto affine_oracle = [](const AffineMap& f, const AffineMap& g) {
    return std::make_pair(f.multiplier() * g.multiplier(),
                          f.multiplier() * g.translation() + f.translation());
  };
  // symbolic-tau p2 generators: A(z) = -z+1+tau, B(z) = -z+1
  AffineMap Ak2(-CycloNumber::one(), TauScalar::symbolic(1, 1));
  AffineMap Bk2(-CycloNumber::one(), TauScalar::symbolic(1, 0));
  AffineMap prod = Ak2 * Bk2;
  auto [om, ot] = affine_oracle(Ak2, Bk2);
  CHECK(prod.multiplier() == om);
  CHECK(prod.translation() == ot);
  CHECK(prod.multiplier().is_one());
  CHECK(prod.translation() == TauScalar::symbolic(0, 1));  // z + tau

  // identity composition
  AffineMap id;
  CHECK((id * id) == id);

  // E A E^{-1} = z + tau with E(z) = tau z, A(z) = z + 1 (concrete)
  AffineMap Ec = AffineMap::rotation(kTau);
  AffineMap Ac = AffineMap::translation(TauScalar::concrete(CycloNumber(1)));
  AffineMap conj = Ec * Ac * Ec.inverse();
  CHECK(conj.is_translation());
  CHECK(conj.translation() == TauScalar::concrete(kTau));
}

TEST_CASE("affine symbolic multiplier restrictions") {
  CHECK_THROWS_AS(AffineMap(CycloNumber::i(), TauScalar::tau()), Error);
  CHECK_THROWS_AS(AffineMap(CycloNumber(2), TauScalar::concrete(CycloNumber(0))), Error);
  AffineMap rot = AffineMap::rotation(CycloNumber::i());
  AffineMap sym = AffineMap::translation(TauScalar::tau());
  CHECK_THROWS_AS(rot * sym, Error);
  // -1 multiplier is fine on symbolic translations
  AffineMap neg(-CycloNumber::one(), TauScalar::tau());
  CHECK((neg * neg).is_identity());
}

TEST_CASE("affine to moebius round trip preserves the action on sample points") {
  AffineMap f(kTau, TauScalar::concrete(CycloNumber(1) + CycloNumber::i()));
  ExactMoebius m = affine_to_moebius(f);
  for (const CycloNumber& z :
       {CycloNumber(0), CycloNumber(1), CycloNumber::zeta() + CycloNumber(2)}) {
    TauScalar az = f.eval(TauScalar::concrete(z));
    auto mz = m.apply(ExactPoint::finite(z));
    REQUIRE_FALSE(mz.infinite);
    CHECK(az.conc() == mz.value);
  }
  // symbolic translation has no matrix form without a tau value
  AffineMap s = AffineMap::translation(TauScalar::tau());
  CHECK_THROWS_AS(affine_to_moebius(s), Error);
  CHECK(s.to_moebius(kTau).b == kTau);
}

TEST_CASE("affine order and fixed point") {
  AffineMap rot6 = AffineMap::rotation(kTau);
  CHECK(rot6.order() == 6);
  AffineMap halfturn(-CycloNumber::one(),
                     TauScalar::concrete(CycloNumber(1)));  // z -> -z + 1
  CHECK(halfturn.order() == 2);
  CHECK(halfturn.fixed_point() == TauScalar::concrete(CycloNumber(Rational(1, 2))));
  CHECK(AffineMap::translation(TauScalar::concrete(CycloNumber(1))).order() == 0);
  AffineMap symneg(-CycloNumber::one(), TauScalar::symbolic(1, 1));  // z -> -z+1+tau
  CHECK(symneg.fixed_point() == TauScalar::symbolic(Rational(1, 2), Rational(1, 2)));
}
