#include "mdc/catalog.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace mdc {

std::set<int> FiniteKind::element_orders() const {
  auto divisors = [](int m) {
    std::set<int> out;
    for (int d = 1; d <= m; ++d)
      if (m % d == 0) out.insert(d);
    return out;
  };
  switch (family) {
    case FiniteFamily::Trivial: return {1};
    case FiniteFamily::Cyclic: return divisors(n);
    case FiniteFamily::Dihedral: {
      auto out = divisors(n);
      out.insert(2);
      return out;
    }
    case FiniteFamily::A4: return {1, 2, 3};
    case FiniteFamily::S4: return {1, 2, 3, 4};
    case FiniteFamily::A5: return {1, 2, 3, 5};
  }
  return {1};
}

std::string FiniteKind::str() const {
  switch (family) {
    case FiniteFamily::Trivial: return "trivial";
    case FiniteFamily::Cyclic: return "cyclic(" + std::to_string(n) + ")";
    case FiniteFamily::Dihedral: return "dihedral(" + std::to_string(n) + ")";
    case FiniteFamily::A4: return "A4";
    case FiniteFamily::S4: return "S4";
    case FiniteFamily::A5: return "A5";
  }
  return "?";
}

FiniteKind FiniteKind::parse(const std::string& name, int n) {
  if (name == "trivial") return trivial();
  if (name == "cyclic") return cyclic(n);
  if (name == "dihedral") return dihedral(n);
  if (name == "A4" || name == "a4") return a4();
  if (name == "S4" || name == "s4") return s4();
  if (name == "A5" || name == "a5") return a5();
  fail(ErrKind::ParseError, "unknown finite kind '" + name + "'");
}

TauScalar RankOneKind::default_tau(Rank1Tag t) {
  switch (t) {
    case Rank1Tag::K3: return TauScalar::concrete(CycloNumber::omega3());
    case Rank1Tag::K4: return TauScalar::concrete(CycloNumber::i());
    case Rank1Tag::K6: return TauScalar::concrete(CycloNumber::tau6());
    default: return TauScalar::tau();
  }
}

RankOneKind::RankOneKind(Rank1Tag t, TauScalar tau_value) : tag(t), tau(std::move(tau_value)) {
  switch (tag) {
    case Rank1Tag::K3:
    case Rank1Tag::K4:
    case Rank1Tag::K6:
      if (tau != default_tau(tag))
        fail(ErrKind::TauConstraintViolation,
             name() + " forces its tau value; got " + tau.str());
      break;
    default:
      if (tau.is_concrete() && tau.conc().im().sign() <= 0)
        fail(ErrKind::TauConstraintViolation, "tau needs positive imaginary part");
      break;
  }
}

RankOneKind RankOneKind::parse(const std::string& name) {
  if (name == "K1") return RankOneKind(Rank1Tag::K1);
  if (name == "K2") return RankOneKind(Rank1Tag::K2);
  if (name == "K22") return RankOneKind(Rank1Tag::K22);
  if (name == "K3") return RankOneKind(Rank1Tag::K3);
  if (name == "K4") return RankOneKind(Rank1Tag::K4);
  if (name == "K6") return RankOneKind(Rank1Tag::K6);
  fail(ErrKind::ParseError, "unknown rank-one kind '" + name + "'");
}

std::string RankOneKind::name() const {
  switch (tag) {
    case Rank1Tag::K1: return "K1";
    case Rank1Tag::K2: return "K2";
    case Rank1Tag::K22: return "K22";
    case Rank1Tag::K3: return "K3";
    case Rank1Tag::K4: return "K4";
    case Rank1Tag::K6: return "K6";
  }
  return "?";
}

int RankOneKind::quotient_order() const {
  switch (tag) {
    case Rank1Tag::K1: return 1;
    case Rank1Tag::K2:
    case Rank1Tag::K22: return 2;
    case Rank1Tag::K3: return 3;
    case Rank1Tag::K4: return 4;
    case Rank1Tag::K6: return 6;
  }
  return 1;
}

std::set<int> RankOneKind::elliptic_orders() const {
  switch (tag) {
    case Rank1Tag::K1: return {};
    case Rank1Tag::K2:
    case Rank1Tag::K22: return {2};
    case Rank1Tag::K3: return {3};
    case Rank1Tag::K4: return {2, 4};
    case Rank1Tag::K6: return {2, 3, 6};
  }
  return {};
}

std::set<int> RankOneKind::amalgam_orders() const {
  auto out = elliptic_orders();
  out.insert(1);
  return out;
}

std::vector<AffineMap> build_catalog_group(const RankOneKind& kind) {
  const CycloNumber one(1), neg = -CycloNumber::one();
  auto sym = [](long long a, long long b) { return TauScalar::symbolic(a, b); };
  const TauScalar& tau = kind.tau;
  switch (kind.tag) {
    case Rank1Tag::K1:
      if (tau.is_symbolic())
        return {AffineMap(one, sym(1, 1)), AffineMap(one, sym(1, 0))};
      return {AffineMap(one, TauScalar::concrete(CycloNumber(1) + tau.conc())),
              AffineMap(one, TauScalar::concrete(CycloNumber(1)))};
    case Rank1Tag::K2:
      if (tau.is_symbolic())
        return {AffineMap(neg, sym(1, 1)), AffineMap(neg, sym(1, 0)), AffineMap(one, sym(1, 0))};
      return {AffineMap(neg, TauScalar::concrete(CycloNumber(1) + tau.conc())),
              AffineMap(neg, TauScalar::concrete(CycloNumber(1))),
              AffineMap(one, TauScalar::concrete(CycloNumber(1)))};
    case Rank1Tag::K22: {
      if (tau.is_symbolic())
        return {AffineMap(neg, sym(1, 1)), AffineMap(neg, sym(1, 0)),
                AffineMap(neg, TauScalar::symbolic(Rational(0), Rational(1, 2))),
                AffineMap(neg, TauScalar::symbolic(Rational(2), Rational(1, 2)))};
      CycloNumber half_tau = tau.conc() * CycloNumber(Rational(1, 2));
      return {AffineMap(neg, TauScalar::concrete(CycloNumber(1) + tau.conc())),
              AffineMap(neg, TauScalar::concrete(CycloNumber(1))),
              AffineMap(neg, TauScalar::concrete(half_tau)),
              AffineMap(neg, TauScalar::concrete(half_tau + CycloNumber(2)))};
    }
    case Rank1Tag::K3:
      return {AffineMap::rotation(CycloNumber::omega3()),
              AffineMap(one, TauScalar::concrete(CycloNumber(1)))};
    case Rank1Tag::K4:
      return {AffineMap::rotation(CycloNumber::i()),
              AffineMap(neg, TauScalar::concrete(CycloNumber(1)))};
    case Rank1Tag::K6:
      return {AffineMap::rotation(CycloNumber::tau6()),
              AffineMap(neg, TauScalar::concrete(CycloNumber(1)))};
  }
  fail(ErrKind::Internal, "unreachable");
}

PlaneVec tau_to_coords(const TauScalar& t, const TauScalar& tau_ctx) {
  if (tau_ctx.is_symbolic()) {
    if (t.is_symbolic()) return {t.sym().q0, t.sym().q1};
    if (t.conc().is_rational()) return {t.conc()[0], Rational(0)};
    fail(ErrKind::SymbolicObstruction,
         "non-rational concrete translation in a symbolic tau context");
  }
  const CycloNumber& tv = tau_ctx.conc();
  CycloNumber c = t.is_concrete() ? t.conc() : t.concretize(tv);
  // solve c = x + y * tv over Q
  Rational y;
  bool found = false;
  for (int i = 1; i < 4; ++i) {
    if (!tv[i].is_zero()) {
      y = c[i] / tv[i];
      found = true;
      break;
    }
  }
  if (!found) fail(ErrKind::InvalidTau, "tau context must be non-real");
  for (int i = 1; i < 4; ++i) {
    if (c[i] != y * tv[i])
      fail(ErrKind::NonDiscrete, "translation " + c.str() + " is not in Z-span of {1,tau}");
  }
  Rational x = c[0] - y * tv[0];
  return {x, y};
}

Mat2Q multiplier_matrix(const CycloNumber& m, const TauScalar& tau_ctx) {
  if (tau_ctx.is_symbolic()) {
    if (m.is_rational()) return Mat2Q::scalar(m[0]);
    fail(ErrKind::SymbolicObstruction,
         "multiplier " + m.str() + " on a symbolic tau plane would need tau*tau");
  }
  PlaneVec c0 = tau_to_coords(TauScalar::concrete(m), tau_ctx);
  PlaneVec c1 = tau_to_coords(TauScalar::concrete(m * tau_ctx.conc()), tau_ctx);
  return {c0.x, c1.x, c0.y, c1.y};
}

namespace {

struct PlaneIsom {
  CycloNumber mult;
  Mat2Q act;
  PlaneVec t;
};

PlaneIsom isom_compose(const PlaneIsom& f, const PlaneIsom& g) {
  return {f.mult * g.mult, f.act * g.act, f.act.apply(g.t) + f.t};
}

PlaneIsom isom_inverse(const PlaneIsom& f) {
  Mat2Q inv = f.act.inverse();
  return {f.mult.inverse(), inv, -(inv.apply(f.t))};
}

PlaneIsom planeify(const AffineMap& g, const TauScalar& ctx) {
  return {g.multiplier(), multiplier_matrix(g.multiplier(), ctx),
          tau_to_coords(g.translation(), ctx)};
}

}  // namespace

WallpaperDecomposition decompose_wallpaper(const std::vector<AffineMap>& gens,
                                           const TauScalar& tau_ctx) {
  if (gens.empty()) fail(ErrKind::EmptyGenerators, "no generators");
  std::vector<PlaneIsom> sgens;
  for (const auto& g : gens) {
    PlaneIsom p = planeify(g, tau_ctx);
    sgens.push_back(p);
    sgens.push_back(isom_inverse(p));
  }

  // coset section over the point group (multiplier image), BFS order
  std::map<std::string, PlaneIsom> section;
  std::deque<std::string> order;
  PlaneIsom id{CycloNumber(1), Mat2Q::identity(), PlaneVec()};
  section.emplace(id.mult.str(), id);
  order.push_back(id.mult.str());
  for (size_t qi = 0; qi < order.size(); ++qi) {
    PlaneIsom w = section.at(order[qi]);
    for (const auto& g : sgens) {
      PlaneIsom p = isom_compose(w, g);
      std::string k = p.mult.str();
      if (!section.count(k)) {
        section.emplace(k, p);
        order.push_back(k);
      }
    }
    if (section.size() > 12) fail(ErrKind::NonDiscrete, "point group exceeds 12 multipliers");
  }

  // Reidemeister-Schreier generators of the translation subgroup:
  // w g rep(w g)^{-1} over transversal elements w and generators g
  std::vector<PlaneVec> tgens;
  for (const auto& key : order) {
    const PlaneIsom& w = section.at(key);
    for (const auto& g : sgens) {
      PlaneIsom p = isom_compose(w, g);
      PlaneIsom k = isom_compose(p, isom_inverse(section.at(p.mult.str())));
      if (!k.mult.is_one()) fail(ErrKind::Internal, "kernel element with nontrivial multiplier");
      tgens.push_back(k.t);
    }
  }
  QLattice lattice = QLattice::from_generators(tgens);
  if (lattice.rank() != 2)
    fail(ErrKind::NonDiscrete,
         "translation subgroup has rank " + std::to_string(lattice.rank()) + ", not 2");

  WallpaperDecomposition d;
  d.tau_ctx = tau_ctx;
  d.lattice = lattice;
  for (const auto& key : order) {
    const PlaneIsom& w = section.at(key);
    d.point_group.push_back(w.mult);
    d.point_group_orders.push_back(w.mult.unit_order());
    d.cosets.push_back({w.mult, w.act, w.t});
  }
  std::sort(d.point_group_orders.begin(), d.point_group_orders.end());
  d.point_group_order = static_cast<long long>(d.point_group.size());

  // cone points: fixed points of the nontrivial cosets, reduced mod lattice
  std::map<std::string, std::set<PlaneVec>> fixed_sets;  // mult key -> points
  const Mat2Q I = Mat2Q::identity();
  for (const auto& c : d.cosets) {
    if (c.mult.is_one()) continue;
    Mat2Q N{I.m00 - c.action.m00, I.m01 - c.action.m01,
            I.m10 - c.action.m10, I.m11 - c.action.m11};
    Mat2Q Ninv = N.inverse();
    std::set<PlaneVec> pts;
    // lambda over representatives of lattice / N(lattice); exponent <= 4
    for (int mm = 0; mm <= 4; ++mm)
      for (int nn = 0; nn <= 4; ++nn) {
        PlaneVec lam = d.lattice.b1().scaled(Rational(mm)) + d.lattice.b2().scaled(Rational(nn));
        pts.insert(d.lattice.reduce(Ninv.apply(c.trans + lam)));
      }
    fixed_sets[c.mult.str()] = std::move(pts);
  }

  std::set<PlaneVec> all_pts;
  for (auto& [k, s] : fixed_sets) all_pts.insert(s.begin(), s.end());

  auto stab_order = [&](const PlaneVec& x) {
    int cnt = 1;
    for (auto& [k, s] : fixed_sets)
      if (s.count(x)) ++cnt;
    return cnt;
  };

  std::set<PlaneVec> seen;
  for (const PlaneVec& x : all_pts) {
    if (seen.count(x)) continue;
    // orbit of x under the full group modulo the lattice
    std::set<PlaneVec> orbit;
    std::deque<PlaneVec> queue{x};
    while (!queue.empty()) {
      PlaneVec p = queue.front();
      queue.pop_front();
      if (!orbit.insert(p).second) continue;
      for (const auto& c : d.cosets) queue.push_back(d.lattice.reduce(c.action.apply(p) + c.trans));
    }
    int ord = stab_order(x);
    for (const PlaneVec& p : orbit) {
      seen.insert(p);
      if (stab_order(p) != ord) fail(ErrKind::Internal, "stabilizer varies along a cone orbit");
    }
    d.cone_data.push_back({ord, *orbit.begin()});
  }
  std::sort(d.cone_data.begin(), d.cone_data.end(), [](const ConePoint& a, const ConePoint& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.point < b.point;
  });
  return d;
}

WallpaperDecomposition decompose_kind(const RankOneKind& kind) {
  return decompose_wallpaper(build_catalog_group(kind), kind.tau);
}

bool WallpaperDecomposition::member(const AffineMap& g) const {
  PlaneIsom p;
  try {
    p = planeify(g, tau_ctx);
  } catch (const Error&) {
    return false;
  }
  for (const auto& c : cosets) {
    if (c.mult != p.mult) continue;
    PlaneIsom w{c.mult, c.action, c.trans};
    PlaneIsom k = isom_compose(p, isom_inverse(w));
    return lattice.contains(k.t);
  }
  return false;
}

OrbifoldSignature quotient_signature(const WallpaperDecomposition& d) {
  Rational sum(0);
  std::vector<int> cones;
  for (const auto& c : d.cone_data) {
    sum += Rational(1) - Rational(1, c.order);
    cones.push_back(c.order);
  }
  Rational genus2 = Rational(2) - sum;  // 2 - sum = 2 genus
  Rational genus = genus2 / Rational(2);
  if (!genus.is_integer() || genus.sign() < 0)
    fail(ErrKind::NonOrbifold, "quotient genus " + genus.str() + " is not a nonnegative integer");
  return OrbifoldSignature(static_cast<int>(genus.num().convert_to<long long>()), cones);
}

CatalogRelationsReport check_catalog_relations() {
  CatalogRelationsReport rep;
  auto add = [&rep](std::string name, bool holds, bool asserted, std::string detail) {
    rep.claims.push_back({std::move(name), holds, asserted, std::move(detail)});
    if (asserted && !holds) rep.all_asserted_hold = false;
  };

  const AffineMap j(-CycloNumber::one(), TauScalar::concrete(CycloNumber(0)));

  RankOneKind k1(Rank1Tag::K1), k2(Rank1Tag::K2), k22(Rank1Tag::K22);
  RankOneKind k3(Rank1Tag::K3), k6(Rank1Tag::K6);
  auto g1 = build_catalog_group(k1);
  auto g2 = build_catalog_group(k2);
  auto g22 = build_catalog_group(k22);
  auto g3 = build_catalog_group(k3);
  auto g6 = build_catalog_group(k6);
  auto d1 = decompose_kind(k1);
  auto d2 = decompose_kind(k2);
  auto d22 = decompose_kind(k22);
  auto d3 = decompose_kind(k3);
  auto d6 = decompose_kind(k6);

  // (1) j normalizes K1 and K3
  auto normalized_by_j = [&](const std::vector<AffineMap>& gens,
                             const WallpaperDecomposition& d) {
    for (const auto& g : gens) {
      AffineMap conj = j * g * j.inverse();
      if (!d.member(conj)) return false;
    }
    return true;
  };
  add("j normalizes K1", normalized_by_j(g1, d1), true, "j g j^-1 in K1 for each generator");
  add("j normalizes K3", normalized_by_j(g3, d3), true, "j g j^-1 in K3 for each generator");

  // (2) K6 = <K3, j> and K2 = <K1, j>
  {
    auto g3j = g3;
    g3j.push_back(j);
    auto d3j = decompose_wallpaper(g3j, k3.tau);
    bool incl1 = true, incl2 = true;
    for (const auto& g : g6)
      incl1 = incl1 && d3j.member(g);
    for (const auto& g : g3j)
      incl2 = incl2 && d6.member(g);
    add("K6 = <K3, j>", incl1 && incl2, true,
        "two-sided generator containment in exact arithmetic");
  }
  {
    auto g1j = g1;
    g1j.push_back(j);
    auto d1j = decompose_wallpaper(g1j, k1.tau);
    bool incl1 = true, incl2 = true;
    for (const auto& g : g2)
      incl1 = incl1 && d1j.member(g);
    for (const auto& g : g1j)
      incl2 = incl2 && d2.member(g);
    add("K2 = <K1, j>", incl1 && incl2, true,
        "two-sided generator containment in exact arithmetic");
  }

  // (3) the printed K2 <= K22 index-two claim, tested literally
  {
    bool literal = true;
    std::string missing;
    for (const auto& g : g2) {
      if (!d22.member(g)) {
        literal = false;
        missing = g.str();
      }
    }
    add("K2 subgroup of K22 (printed generators, literal)", literal, false,
        literal ? "holds literally"
                : "fails literally (generator " + missing +
                      " is outside); the catalog is stated up to conjugation");
    add("[K2 : translation lattice] = 2", d2.point_group_order == 2, true,
        "lattice " + d2.lattice.str());
    add("[K22 : translation lattice] = 2", d22.point_group_order == 2, true,
        "lattice " + d22.lattice.str());
    QLattice expect22 = QLattice::from_generators(
        {PlaneVec(Rational(1), Rational(1, 2)), PlaneVec(Rational(0), Rational(1))});
    add("K22 lattice = Z(1+tau/2)+Z tau", d22.lattice == expect22, true,
        "canonical basis " + d22.lattice.str());
    add("K2, K22 lattices have equal covolume",
        d2.lattice.covolume() == d22.lattice.covolume(), false,
        "covolumes " + d2.lattice.covolume().str() + " and " + d22.lattice.covolume().str() +
            "; a literal index-2 containment is therefore impossible for the printed "
            "generators and can only hold after conjugation");
  }
  return rep;
}

}  // namespace mdc
