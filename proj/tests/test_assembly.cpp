#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mdc/assembly.hpp"
#include "mdc/maximal_example.hpp"

using namespace mdc;

namespace {

ExtensionRecipe make_recipe(int free_rank, RecipeBase base,
                            std::vector<std::pair<std::string, int>> factors) {
  ExtensionRecipe r;
  r.free_rank = free_rank;
  r.base = std::move(base);
  for (auto& [name, t] : factors) r.factors.push_back({RankOneKind::parse(name), t});
  return r;
}

}  // namespace

TEST_CASE("recipe validation sweeps every (kind, amalgam-order) pair") {
  const std::map<std::string, std::set<int>> expected = {
      {"K1", {1}},          {"K2", {1, 2}},      {"K22", {1, 2}},
      {"K3", {1, 3}},       {"K4", {1, 2, 4}},   {"K6", {1, 2, 3, 6}}};
  for (const auto& [name, avail] : expected) {
    for (int t : {1, 2, 3, 4, 6}) {
      // a base that has every admissible order available on the left side
      ExtensionRecipe r = make_recipe(0, FiniteKind::s4(), {{name, t}});
      if (t == 6) r.base = FiniteKind::cyclic(6);
      bool kind_ok = avail.count(t) > 0;
      if (kind_ok)
        CHECK_NOTHROW(r.validate());
      else
        CHECK_THROWS_AS(r.validate(), Error);
    }
  }
  // amalgam order outside {1,2,3,4,6}
  ExtensionRecipe bad = make_recipe(0, FiniteKind::cyclic(5), {{"K2", 5}});
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("left-side availability is enforced") {
  // (K1,2): K1 is torsion-free, no order-2 amalgam exists
  CHECK_THROWS_AS(make_recipe(0, FiniteKind::trivial(), {{"K1", 2}}).validate(), Error);
  // trivial base and free factors provide no elliptic elements
  CHECK_THROWS_AS(make_recipe(3, FiniteKind::trivial(), {{"K3", 3}}).validate(), Error);
  // a first K3 factor (free edge) makes order 3 available for the second
  CHECK_NOTHROW(make_recipe(0, FiniteKind::trivial(), {{"K3", 1}, {"K3", 3}}).validate());
  // the swap involution base offers only orders 1 and 2
  CHECK_NOTHROW(
      make_recipe(0, G2Base(G2Base::Case::SwapInvolution), {{"K2", 2}}).validate());
  CHECK_THROWS_AS(
      make_recipe(0, G2Base(G2Base::Case::SwapInvolution), {{"K3", 3}}).validate(), Error);
}

TEST_CASE("rank-1 free product: certificate trivially passes") {
  AssemblyResult r = build_mdc_schottky(1);
  CHECK(r.exact);
  CHECK(r.certificate_passed());
  CHECK(r.exact_gens.size() == 2);
  for (const auto& gi : r.info) CHECK(gi.cls.kind == TransKind::Parabolic);
}

TEST_CASE("rank-2 free product: the maximal-example layout certifies exactly") {
  AssemblyResult r = build_mdc_schottky(2);
  REQUIRE(r.exact);
  CHECK(r.certificate_passed());
  REQUIRE(r.exact_gens.size() == 4);

  // generators are exactly A, B, F A F, F B F with F(z) = tau/(16 z)
  const CycloNumber tau = CycloNumber::tau6();
  const ExactMoebius A = ExactMoebius::translation(CycloNumber(1));
  const ExactMoebius B = ExactMoebius::translation(tau);
  const ExactMoebius F{CycloNumber(0), tau * CycloNumber(Rational(1, 16)), CycloNumber(1),
                       CycloNumber(0)};
  CHECK(proj_eq(r.exact_gens[0], A));
  CHECK(proj_eq(r.exact_gens[1], B));
  CHECK(proj_eq(r.exact_gens[2], compose(compose(F, A), F)));
  CHECK(proj_eq(r.exact_gens[3], compose(compose(F, B), F)));

  // the shortest-vector check carries the exact data 1 > 1/4 = (2r)^2
  bool found = false;
  for (const auto& e : r.edges)
    for (const auto& c : e.cert.checks)
      if (c.name.find("shortest_vector") != std::string::npos) {
        found = true;
        CHECK(c.passed);
        CHECK(c.tier == "exact-lattice");
        CHECK(c.detail.find("min |v|^2 = 1") != std::string::npos);
      }
  CHECK(found);
}

TEST_CASE("oracle: the hexagonal lattice minimum is 1 (brute force check)") {
  RealQuad min_sq = lattice_min_norm_sq(CycloNumber::tau6());
  // brute-force oracle over |m|,|n| <= 10 with the norm form m^2 + mn + n^2
  long long best = 1LL << 60;
  for (int m = -10; m <= 10; ++m)
    for (int n = -10; n <= 10; ++n) {
      if (m == 0 && n == 0) continue;
      best = std::min(best, static_cast<long long>(m) * m + m * n + static_cast<long long>(n) * n);
    }
  CHECK(best == 1);
  CHECK(min_sq == RealQuad(Rational(best)));
  // square lattice
  CHECK(lattice_min_norm_sq(CycloNumber::i()) == RealQuad(1));
  // tall rectangle keeps minimum 1; squat lattices go below
  CHECK(lattice_min_norm_sq(CycloNumber(Rational(1, 2)) * CycloNumber::i()) ==
        RealQuad(Rational(1, 4)));
}

TEST_CASE("oversized disk makes the certificate fail with the named check") {
  AssemblyOptions opts;
  opts.first_disk_radius = Rational(3, 5);  // diameter 6/5 > shortest vector 1
  AssemblyResult r = build_mdc_schottky(2, opts);
  CHECK_FALSE(r.certificate_passed());
  CHECK(r.first_failure().find("shortest_vector_clearance") != std::string::npos);
  CHECK_THROWS_AS(require_certificates(r), Error);
  try {
    require_certificates(r);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::CertificateFailure);
  }
}

TEST_CASE("rank-3 free product with the default disk schedule") {
  AssemblyResult r = build_mdc_schottky(3);
  CHECK(r.exact);
  CHECK(r.certificate_passed());
  CHECK(r.exact_gens.size() == 6);
}

TEST_CASE("pure free-product recipe of two K1 factors is a rank-2 group") {
  ExtensionRecipe r = make_recipe(0, FiniteKind::trivial(), {{"K1", 1}, {"K1", 1}});
  AssemblyResult a = assemble(r);
  CHECK(a.exact);
  CHECK(a.certificate_passed());
  CHECK(a.exact_gens.size() == 4);
  for (const auto& e : a.edges) CHECK(e.amalgam_order == 1);
}

TEST_CASE("K6 amalgamated with K6 over the full Z6") {
  ExtensionRecipe r = make_recipe(0, G2Base(G2Base::Case::AmalgamCyclic, 6), {});
  AssemblyResult a = assemble(r);
  REQUIRE(a.exact);
  INFO(a.first_failure());
  CHECK(a.certificate_passed());
  // base wallpaper gens + folded factor gens
  CHECK(a.exact_gens.size() == 4);
  REQUIRE(a.edges.size() == 1);
  CHECK(a.edges[0].amalgam_order == 6);
  CHECK(a.edges[0].cert.word_bound == 8);
  bool left_words = false, right_words = false;
  for (const auto& c : a.edges[0].cert.checks) {
    if (c.name == "left_words_move_factor_side") left_words = c.passed;
    if (c.name == "factor_words_move_left_side") right_words = c.passed;
  }
  CHECK(left_words);
  CHECK(right_words);
}

TEST_CASE("the dihedral rank-2 case at d=6 reproduces the maximal example group") {
  ExtensionRecipe r = make_recipe(0, G2Base(G2Base::Case::DihedralAmalgam, 6), {});
  AssemblyResult a = assemble(r);
  REQUIRE(a.exact);
  INFO(a.first_failure());
  CHECK(a.certificate_passed());
  // generators: E(z) = tau z, B(z) = -z + 1 (wallpaper) and F(z) = tau/(16z)
  REQUIRE(a.exact_gens.size() == 3);
  const CycloNumber tau = CycloNumber::tau6();
  CHECK(proj_eq(a.exact_gens[0], ExactMoebius::scaling(tau)));
  CHECK(proj_eq(a.exact_gens[2],
                ExactMoebius{CycloNumber(0), tau * CycloNumber(Rational(1, 16)), CycloNumber(1),
                             CycloNumber(0)}));
}

TEST_CASE("swap involution rank-2 case") {
  ExtensionRecipe r = make_recipe(0, G2Base(G2Base::Case::SwapInvolution), {});
  AssemblyResult a = assemble(r);
  REQUIRE(a.exact);
  CHECK(a.certificate_passed());
  CHECK(a.exact_gens.size() == 3);
  bool swap_check = false;
  for (const auto& e : a.edges)
    for (const auto& c : e.cert.checks)
      if (c.name == "involution_swaps_sides") swap_check = c.passed;
  CHECK(swap_check);
}

TEST_CASE("A4 base with one K3 amalgam (genus-4 family row)") {
  ExtensionRecipe r = make_recipe(0, FiniteKind::a4(), {{"K3", 3}});
  AssemblyResult a = assemble(r);
  REQUIRE(a.exact);
  INFO(a.first_failure());
  CHECK(a.certificate_passed());
  REQUIRE(a.edges.size() == 1);
  CHECK(a.edges[0].amalgam_order == 3);
}

TEST_CASE("cyclic base with two K4 amalgams uses both axis endpoints") {
  ExtensionRecipe r = make_recipe(0, FiniteKind::cyclic(4), {{"K4", 4}, {"K4", 4}});
  AssemblyResult a = assemble(r);
  REQUIRE(a.exact);
  INFO(a.first_failure());
  CHECK(a.certificate_passed());
  REQUIRE(a.edges.size() == 2);
  // one factor owns an interior disk, the other the exterior of a large circle
  CHECK(a.edges[0].cert.side != a.edges[1].cert.side);
}

TEST_CASE("free rank combines with a finite base") {
  ExtensionRecipe r = make_recipe(1, FiniteKind::cyclic(6), {{"K6", 6}});
  AssemblyOptions opts;
  opts.word_bound = 6;
  AssemblyResult a = assemble(r, opts);
  REQUIRE(a.exact);
  INFO(a.first_failure());
  CHECK(a.certificate_passed());
}

TEST_CASE("A5 base falls back to the floating backend") {
  ExtensionRecipe r = make_recipe(1, FiniteKind::a5(), {});
  AssemblyResult a = assemble(r);
  CHECK_FALSE(a.exact);
  CHECK(a.float_gens.size() == 4);  // 2 base generators + folded lattice pair
  INFO(a.first_failure());
  CHECK(a.certificate_passed());
}

TEST_CASE("attaching to a missing site fails honestly") {
  // cyclic(6) has a 6-fold axis; asking for two K2 amalgams finds no order-2 site
  ExtensionRecipe r = make_recipe(0, FiniteKind::cyclic(6), {{"K2", 2}});
  AssemblyResult a = assemble(r);
  CHECK_FALSE(a.certificate_passed());
  CHECK(a.first_failure().find("attachment_site") != std::string::npos);
}

TEST_CASE("word_value and torsion witnesses") {
  const CycloNumber tau = CycloNumber::tau6();
  std::vector<ExactMoebius> gens = {
      ExactMoebius::translation(CycloNumber(1)),                       // 0: A
      ExactMoebius::translation(tau),                                  // 1: B
      ExactMoebius::scaling(tau),                                      // 2: E
      ExactMoebius{CycloNumber(0), tau * CycloNumber(Rational(1, 16)), // 3: F
                   CycloNumber(1), CycloNumber(0)}};
  // F E F folded equals E^-1 (exact fold oracle)
  GroupWord fef{{{3, 1}, {2, 1}, {3, 1}}};
  ExactMoebius folded = word_value(fef, gens);
  ExactMoebius oracle = compose(compose(gens[3], gens[2]), gens[3]);
  CHECK(proj_eq(folded, oracle));
  CHECK(proj_eq(folded, gens[2].inverse()));

  GroupWord empty;
  CHECK(word_value(empty, gens).is_identity());
  CHECK(is_torsion_witness(empty, gens).kind == TransKind::Identity);

  // E^3 is the half turn z -> -z (tau^3 = -1)
  GroupWord e3{{{2, 3}}};
  TransClass c = is_torsion_witness(e3, gens);
  CHECK(c.kind == TransKind::Elliptic);
  CHECK(c.order == 2);
  CHECK(proj_eq(word_value(e3, gens), ExactMoebius::scaling(-CycloNumber::one())));

  GroupWord bad{{{7, 1}}};
  CHECK_THROWS_AS(word_value(bad, gens), Error);
}

TEST_CASE("finite base realizations have the right orders") {
  CHECK(finite_group_elements(finite_base_exact(FiniteKind::a4())).size() == 12);
  CHECK(finite_group_elements(finite_base_exact(FiniteKind::s4())).size() == 24);
  CHECK(finite_group_elements(finite_base_exact(FiniteKind::dihedral(6))).size() == 12);
  CHECK(finite_group_elements(finite_base_exact(FiniteKind::cyclic(12))).size() == 12);
  CHECK_THROWS_AS(finite_base_exact(FiniteKind::a5()), Error);
  CHECK_THROWS_AS(finite_base_exact(FiniteKind::cyclic(5)), Error);
  CHECK(finite_group_elements(finite_base_float(FiniteKind::a5())).size() == 60);
  CHECK(finite_group_elements(finite_base_float(FiniteKind::cyclic(5))).size() == 5);
}

TEST_CASE("assembled generators classify within the allowed conjugacy classes") {
  for (const auto& recipe :
       {make_recipe(2, FiniteKind::trivial(), {}),
        make_recipe(0, FiniteKind::cyclic(6), {{"K6", 6}}),
        make_recipe(0, G2Base(G2Base::Case::DihedralAmalgam, 4), {})}) {
    AssemblyResult a = assemble(recipe);
    for (const auto& gi : a.info) {
      bool ok = gi.cls.kind == TransKind::Parabolic || gi.cls.kind == TransKind::Loxodromic ||
                (gi.cls.kind == TransKind::Elliptic && gi.cls.order &&
                 (*gi.cls.order == 2 || *gi.cls.order == 3 || *gi.cls.order == 4 ||
                  *gi.cls.order == 6));
      CAPTURE(gi.name);
      CHECK(ok);
    }
  }
}

TEST_CASE("maximal genus-2 example: full exact verification") {
  MaximalExampleReport rep = verify_maximal_g2_example();
  for (const auto& s : rep.steps) {
    CAPTURE(s.name);
    CHECK(s.passed);
  }
  CHECK(rep.passed());
  CHECK(rep.index == 12);
  CHECK(rep.quotient == "dihedral of order 12");
  CHECK(rep.g_certificate.certificate_passed());
  CHECK(rep.g_certificate.exact);
}
