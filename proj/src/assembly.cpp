#include "mdc/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace mdc {

namespace {

Rank1Tag tag_of_order(int d) {
  switch (d) {
    case 2: return Rank1Tag::K2;
    case 3: return Rank1Tag::K3;
    case 4: return Rank1Tag::K4;
    case 6: return Rank1Tag::K6;
  }
  fail(ErrKind::Internal, "no rank-one kind of order " + std::to_string(d));
}

std::string qkey(double v) {
  double q = std::round(v * 1e8);
  if (q == 0.0) q = 0.0;  // normalize -0
  std::ostringstream os;
  os << q;
  return os.str();
}

// ---------------------------------------------------------------------------
// backends

struct ExactBK {
  static constexpr bool is_exact = true;
  using Mat = ExactMoebius;
  using Num = CycloNumber;
  using Disk = ExactDisk;

  static Num from_cyclo(const CycloNumber& c) { return c; }
  static Num from_rational(const Rational& r) { return CycloNumber(r); }
  static Num root12(int k) { return CycloNumber::root12(k); }
  static bool num_eq(const Num& a, const Num& b) { return a == b; }
  static Mat make(Num a, Num b, Num c, Num d) {
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
  }
  static std::string key(const Mat& m) { return m.key(); }
  static bool eq(const Mat& a, const Mat& b) { return proj_eq(a, b); }
  static bool is_id(const Mat& m) { return m.is_identity(); }
  static Disk make_disk(const Num& center, const Rational& radius, bool interior) {
    return {{center, RealQuad(radius * radius)}, interior};
  }
  static Disk image(const Mat& w, const Disk& d) { return map_disk(w, d); }
  static bool open_disjoint(const Disk& a, const Disk& b) { return disks_disjoint_open(a, b); }
  static bool closed_disjoint(const Disk& a, const Disk& b) {
    return disks_disjoint_closed(a, b);
  }
  static bool same_disk(const Disk& a, const Disk& b) {
    return a.circle == b.circle && a.interior == b.interior;
  }
  static FloatMoebius to_float(const Mat& m) { return embed_moebius(m); }
  static std::string tier() { return "exact"; }
};

struct FloatBK {
  static constexpr bool is_exact = false;
  using Mat = FloatMoebius;
  using Num = FloatC;
  using Disk = FloatDisk;

  static Num from_cyclo(const CycloNumber& c) { return c.embed(); }
  static Num from_rational(const Rational& r) { return FloatC(r.to_double(), 0.0); }
  static Num root12(int k) { return std::polar(1.0, k * M_PI / 6.0); }
  static bool num_eq(const Num& a, const Num& b) { return approx_eq(a, b); }
  static Mat make(Num a, Num b, Num c, Num d) { return {a, b, c, d}; }
  static std::string key(const Mat& m) {
    // canonical projective representative: divide by the largest entry
    const FloatC es[4] = {m.a, m.b, m.c, m.d};
    int lead = 0;
    for (int k = 1; k < 4; ++k)
      if (std::abs(es[k]) > std::abs(es[lead]) * (1 + 1e-12)) lead = k;
    FloatC inv = 1.0 / es[lead];
    std::string s;
    for (int k = 0; k < 4; ++k) {
      FloatC e = es[k] * inv;
      s += qkey(e.real()) + "," + qkey(e.imag()) + ";";
    }
    return s;
  }
  static bool eq(const Mat& a, const Mat& b) { return proj_eq(a, b, 1e-7); }
  static bool is_id(const Mat& m) { return m.is_identity(1e-7); }
  static Disk make_disk(const Num& center, const Rational& radius, bool interior) {
    double r = radius.to_double();
    return {{center, r * r}, interior};
  }
  static Disk image(const Mat& w, const Disk& d) { return map_disk(w, d); }
  static bool open_disjoint(const Disk& a, const Disk& b) {
    return disks_disjoint_open(a, b, 1e-7);
  }
  static bool closed_disjoint(const Disk& a, const Disk& b) {
    return disks_disjoint_closed(a, b, 1e-7);
  }
  static bool same_disk(const Disk& a, const Disk& b) {
    return a.circle.approx_same(b.circle, 1e-7) && a.interior == b.interior;
  }
  static FloatMoebius to_float(const Mat& m) { return m; }
  static std::string tier() { return "float eps=1e-7"; }
};

// marker: restart the whole assembly on the floating backend
struct NeedFloat {
  std::string why;
};

// ---------------------------------------------------------------------------
// bounded enumeration of group elements

template <class BK>
struct Enumeration {
  std::vector<typename BK::Mat> elements;  // identity excluded
  bool closed = false;                     // BFS reached closure below the bound
  bool capped = false;
  int length = 0;
};

template <class BK>
Enumeration<BK> bounded_elements(const std::vector<typename BK::Mat>& gens, int max_len,
                                 size_t cap) {
  Enumeration<BK> out;
  out.length = max_len;
  std::vector<typename BK::Mat> sym;
  for (const auto& g : gens) {
    sym.push_back(g);
    sym.push_back(g.inverse());
  }
  std::set<std::string> seen;
  typename BK::Mat id = BK::make(BK::from_rational(1), BK::from_rational(0),
                                 BK::from_rational(0), BK::from_rational(1));
  seen.insert(BK::key(id));
  std::vector<typename BK::Mat> frontier{id};
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<typename BK::Mat> next;
    for (const auto& w : frontier) {
      for (const auto& s : sym) {
        typename BK::Mat m = compose(w, s);
        if (!seen.insert(BK::key(m)).second) continue;
        out.elements.push_back(m);
        next.push_back(m);
        if (out.elements.size() > cap) {
          out.capped = true;
          return out;
        }
      }
    }
    if (next.empty()) {
      out.closed = true;
      return out;
    }
    frontier = std::move(next);
  }
  // one closure probe beyond the bound
  if (!frontier.empty()) {
    bool grew = false;
    for (const auto& w : frontier) {
      for (const auto& s : sym) {
        if (!seen.count(BK::key(compose(w, s)))) {
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
    out.closed = !grew;
  }
  return out;
}

// ---------------------------------------------------------------------------
// the assembler

template <class BK>
class Assembler {
 public:
  using Mat = typename BK::Mat;
  using Num = typename BK::Num;
  using Disk = typename BK::Disk;

  explicit Assembler(const AssemblyOptions& opts) : opts_(opts) {
    tau_default_ = opts.tau_value.value_or(CycloNumber::tau6());
    if (tau_default_.im().sign() <= 0)
      fail(ErrKind::InvalidTau, "lattice parameter needs positive imaginary part");
  }

  AssemblyResult run(const ExtensionRecipe& recipe);

 private:
  struct Site {
    Mat elliptic;
    int order = 0;
    Num p{};           // attachment fixed point (finite unless p_infinite)
    bool p_infinite = false;
    Num p2{};          // companion fixed point
    bool p2_infinite = false;
    bool used = false;
    bool needs_float = false;  // fixed points exist but leave the exact field
    std::string desc;
  };

  AssemblyOptions opts_;
  CycloNumber tau_default_;
  AssemblyResult out_;
  std::vector<Mat> left_;
  std::vector<Site> sites_;
  std::vector<std::pair<std::string, Disk>> claimed_;  // node label -> owned disk
  std::string left_label_;
  int next_free_disk_ = 0;
  int folded_planned_ = 0;   // folded free factors sharing the ambient lattice
  bool lattice_at_infinity_ = false;
  CycloNumber ambient_tau_;  // lattice parameter of the factor owning infinity
  bool need_left_words_ = false;  // base contributes non-translation left words

  static NamedCheck check(std::string name, std::string tier, bool ok, std::string detail = "") {
    return {std::move(name), std::move(tier), ok, std::move(detail)};
  }

  void push_gen(const Mat& m, const std::string& name, const std::string& node) {
    left_.push_back(m);
    out_.info.push_back({name, node, classify(m)});
    out_.float_gens.push_back(BK::to_float(m));
    if constexpr (BK::is_exact) out_.exact_gens.push_back(m);
  }

  Mat from_affine(const AffineMap& g) {
    AffineMap c = g.translation().is_symbolic() ? g.concretized(tau_default_) : g;
    ExactMoebius m = c.to_moebius();
    if constexpr (BK::is_exact) return m;
    else return embed_moebius(m);
  }

  std::vector<Mat> wallpaper_gens(const RankOneKind& kind) {
    std::vector<Mat> out;
    for (const auto& g : build_catalog_group(kind)) out.push_back(from_affine(g));
    return out;
  }

  CycloNumber concrete_tau(const RankOneKind& kind) const {
    return kind.tau.is_concrete() ? kind.tau.conc() : tau_default_;
  }

  // elliptic rotation of order m about the cone point p (and infinity)
  Mat cone_rotation(const CycloNumber& p, int m) {
    Num mult = BK::root12(12 / m);
    Num pc = BK::from_cyclo(p);
    return BK::make(mult, pc - mult * pc, BK::from_rational(0), BK::from_rational(1));
  }

  void add_wallpaper_sites(const RankOneKind& kind, const std::string& desc) {
    auto decomp = decompose_kind(kind);
    const CycloNumber tau_c = concrete_tau(kind);
    for (const auto& cone : decomp.cone_data) {
      CycloNumber p = CycloNumber(cone.point.x) + CycloNumber(cone.point.y) * tau_c;
      Site s;
      s.elliptic = cone_rotation(p, cone.order);
      s.order = cone.order;
      s.p = BK::from_cyclo(p);
      s.p2_infinite = true;
      s.desc = desc + " cone " + cone.point.str() + " order " + std::to_string(cone.order);
      sites_.push_back(std::move(s));
    }
  }

  // fixed-point pair of an elliptic map as a site; may leave the field
  Site site_from_elliptic(const Mat& e, int order, const std::string& desc) {
    Site s;
    s.elliptic = e;
    s.order = order;
    s.desc = desc;
    std::vector<ExtPoint<Num>> fps;
    if constexpr (BK::is_exact) {
      try {
        fps = fixed_points(e);
      } catch (const Error& err) {
        if (err.kind() == ErrKind::SymbolicObstruction) throw NeedFloat{desc + ": " + err.what()};
        throw;
      }
    } else {
      fps = fixed_points(e);
    }
    if (fps.size() != 2) throw NeedFloat{desc + ": elliptic with defective fixed-point pair"};
    s.p_infinite = fps[0].infinite;
    s.p = fps[0].value;
    s.p2_infinite = fps[1].infinite;
    s.p2 = fps[1].value;
    if (s.p_infinite) {
      std::swap(s.p, s.p2);
      std::swap(s.p_infinite, s.p2_infinite);
    }
    return s;
  }

  // Moebius map sending (0, infinity) to the site pair (p, p2)
  Mat align_map(const Site& s) {
    Num one = BK::from_rational(1), zero = BK::from_rational(0);
    if (s.p_infinite) return BK::make(s.p2, one, one, zero);        // 0->inf, inf->p2
    if (s.p2_infinite) return BK::make(one, s.p, zero, one);        // translation by p
    return BK::make(s.p2, s.p, one, one);                           // (p2 z + p)/(z + 1)
  }

  void init_base(const ExtensionRecipe& recipe);
  void init_finite_base(const FiniteKind& kind);
  void init_rank1_base(const RankOneKind& kind);
  void init_g2_base(const G2Base& base, ExtensionRecipe& rewritten);

  void attach_lattice_at_infinity(const CycloNumber& tau_value, const std::string& node);
  void attach_free_factor(const RankOneKind& kind, const std::string& node);
  void attach_amalgam_factor(const RankOneKind& kind, int d, const std::string& node);
  void add_dihedral_involution(const CycloNumber& rho, int d, const std::string& node);

  Rational next_free_center();
  void run_left_words_check(EdgeCertificate& cert, const Disk& factor_side, const Mat& amalgam,
                            int order, const std::string& name);
  void run_factor_words_check(EdgeCertificate& cert, const std::vector<Mat>& fgens,
                              const Disk& left_side, const Mat& amalgam, int order,
                              const std::string& name);
  void check_disk_against_claimed(EdgeCertificate& cert, const Disk& disk,
                                  const std::string& node);
  void record_curve(EdgeCertificate& cert, const Disk& disk);
};

template <class BK>
Rational Assembler<BK>::next_free_center() {
  // free-factor disks march along the real axis away from the base geometry
  return Rational(2) + Rational(next_free_disk_++, 2);
}

template <class BK>
void Assembler<BK>::record_curve(EdgeCertificate& cert, const Disk& disk) {
  if constexpr (BK::is_exact) cert.curve = disk.circle;
  else cert.fcurve = disk.circle;
  cert.side = disk.interior ? "factor owns the interior" : "factor owns the exterior";
}

template <class BK>
void Assembler<BK>::check_disk_against_claimed(EdgeCertificate& cert, const Disk& disk,
                                               const std::string& node) {
  for (const auto& [other_node, other] : claimed_) {
    bool ok = BK::closed_disjoint(disk, other);
    cert.checks.push_back(check("attachment_disks_disjoint(" + node + "," + other_node + ")",
                                BK::tier(), ok,
                                ok ? "" : "attachment regions overlap"));
  }
}

template <class BK>
void Assembler<BK>::run_left_words_check(EdgeCertificate& cert, const Disk& factor_side,
                                         const Mat& amalgam, int order,
                                         const std::string& name) {
  auto en = bounded_elements<BK>(left_, opts_.word_bound, opts_.element_cap);
  if (en.capped) {
    cert.checks.push_back(check(name, "bounded-word L=" + std::to_string(opts_.word_bound), false,
                                "element budget exceeded; rerun with a smaller word bound"));
    return;
  }
  std::vector<Mat> amalgam_powers;
  Mat p = amalgam;
  for (int k = 1; k < order; ++k) {
    amalgam_powers.push_back(p);
    p = compose(p, amalgam);
  }
  size_t checked = 0;
  for (const auto& w : en.elements) {
    bool in_amalgam = false;
    for (const auto& q : amalgam_powers)
      if (BK::eq(w, q)) {
        in_amalgam = true;
        break;
      }
    if (in_amalgam) continue;
    ++checked;
    Disk img;
    try {
      img = BK::image(w, factor_side);
    } catch (const Error&) {
      cert.checks.push_back(check(name, "bounded-word L=" + std::to_string(opts_.word_bound),
                                  false, "degenerate side image"));
      return;
    }
    if (!BK::open_disjoint(img, factor_side)) {
      cert.checks.push_back(check(name, "bounded-word L=" + std::to_string(opts_.word_bound),
                                  false,
                                  "left-side word " + w.str() + " fails to move the side"));
      return;
    }
  }
  std::string tier = en.closed ? BK::tier() + " (full enumeration, group closed)"
                               : "bounded-word L=" + std::to_string(opts_.word_bound);
  cert.checks.push_back(check(name, tier, true,
                              std::to_string(checked) + " nontrivial elements checked"));
}

template <class BK>
void Assembler<BK>::run_factor_words_check(EdgeCertificate& cert, const std::vector<Mat>& fgens,
                                           const Disk& left_side, const Mat& amalgam, int order,
                                           const std::string& name) {
  auto en = bounded_elements<BK>(fgens, opts_.word_bound, opts_.element_cap);
  if (en.capped) {
    cert.checks.push_back(check(name, "bounded-word L=" + std::to_string(opts_.word_bound), false,
                                "element budget exceeded; rerun with a smaller word bound"));
    return;
  }
  std::vector<Mat> amalgam_powers;
  Mat p = amalgam;
  for (int k = 1; k < order; ++k) {
    amalgam_powers.push_back(p);
    p = compose(p, amalgam);
  }
  size_t checked = 0;
  for (const auto& w : en.elements) {
    bool in_amalgam = false;
    for (const auto& q : amalgam_powers)
      if (BK::eq(w, q)) {
        in_amalgam = true;
        break;
      }
    if (in_amalgam) continue;
    ++checked;
    Disk img;
    try {
      img = BK::image(w, left_side);
    } catch (const Error&) {
      cert.checks.push_back(check(name, "bounded-word L=" + std::to_string(opts_.word_bound),
                                  false, "degenerate side image"));
      return;
    }
    if (!BK::open_disjoint(img, left_side)) {
      cert.checks.push_back(check(name, "bounded-word L=" + std::to_string(opts_.word_bound),
                                  false, "a factor word fails to move the left side off itself"));
      return;
    }
  }
  std::string tier = en.closed ? BK::tier() + " (full enumeration, group closed)"
                               : "bounded-word L=" + std::to_string(opts_.word_bound);
  cert.checks.push_back(check(name, tier, true,
                              std::to_string(checked) + " nontrivial elements checked"));
}

template <class BK>
void Assembler<BK>::attach_lattice_at_infinity(const CycloNumber& tau_value,
                                               const std::string& node) {
  push_gen(BK::make(BK::from_rational(1), BK::from_rational(1), BK::from_rational(0),
                    BK::from_rational(1)),
           node + ".A", node);
  push_gen(BK::make(BK::from_rational(1), BK::from_cyclo(tau_value), BK::from_rational(0),
                    BK::from_rational(1)),
           node + ".B", node);
  lattice_at_infinity_ = true;
  ambient_tau_ = tau_value;
  out_.nodes.push_back(node);
}

template <class BK>
void Assembler<BK>::attach_free_factor(const RankOneKind& kind, const std::string& node) {
  AssemblyEdge edge;
  edge.left = left_label_;
  edge.right = node;
  edge.amalgam_order = 1;
  edge.cert.label = node + " free edge";
  edge.cert.word_bound = 0;

  CycloNumber tau_c = concrete_tau(kind);
  Rational radius, center_x;
  if (lattice_at_infinity_) {
    // inside the fundamental cell, pairwise non-congruent modulo the lattice
    int k = next_free_disk_++;
    if (folded_planned_ <= 1) {
      radius = opts_.first_disk_radius.value_or(Rational(1, 4));
      center_x = Rational(0);
    } else {
      radius = Rational(1, 8 * folded_planned_);
      center_x = Rational(2 * k + 1, 2 * folded_planned_);
    }
  } else {
    // away from the base geometry, no ambient translates to clear
    radius = Rational(1, 8);
    center_x = next_free_center();
  }
  CycloNumber center_c(center_x);
  edge.cert.chosen_radius = radius;

  // exact shortest-vector vs disk diameter (the exact-lattice tier)
  if constexpr (BK::is_exact) {
    RealQuad min_sq = lattice_min_norm_sq(tau_c);
    RealQuad diam_sq = RealQuad(radius * radius * Rational(4));
    bool ok = min_sq > diam_sq;
    edge.cert.checks.push_back(check(
        node + "_shortest_vector_clearance", "exact-lattice", ok,
        "min |v|^2 = " + min_sq.str() + " vs (2r)^2 = " + diam_sq.str()));
  } else {
    double best = 1e300;
    FloatC tv = tau_c.embed();
    for (int m = -8; m <= 8; ++m)
      for (int n = -8; n <= 8; ++n) {
        if (m == 0 && n == 0) continue;
        best = std::min(best, std::norm(FloatC(m, 0) + FloatC(n, 0) * tv));
      }
    double diam_sq = 4.0 * radius.to_double() * radius.to_double();
    edge.cert.checks.push_back(check(node + "_shortest_vector_clearance", BK::tier(),
                                     best > diam_sq, ""));
  }

  Num c = BK::from_cyclo(center_c);
  Num rho = BK::from_cyclo(tau_c * CycloNumber(radius * radius));

  // the side checks run against the left side as assembled so far,
  // before this factor's own generators join it
  Disk disk = BK::make_disk(c, radius, true);
  record_curve(edge.cert, disk);
  check_disk_against_claimed(edge.cert, disk, node);
  if (need_left_words_ && !left_.empty()) {
    Mat id = BK::make(BK::from_rational(1), BK::from_rational(0), BK::from_rational(0),
                      BK::from_rational(1));
    run_left_words_check(edge.cert, disk, id, 1, "left_words_move_factor_side");
  }

  // inversion J(z) = c + rho/(z - c) swapping the sides of the circle
  Mat J = BK::make(c, rho - c * c, BK::from_rational(1), Num{} - c);
  Mat A = BK::make(BK::from_rational(1), BK::from_rational(1), BK::from_rational(0),
                   BK::from_rational(1));
  Mat B = BK::make(BK::from_rational(1), BK::from_cyclo(tau_c), BK::from_rational(0),
                   BK::from_rational(1));
  push_gen(compose(compose(J, A), J.inverse()), node + ".A", node);
  push_gen(compose(compose(J, B), J.inverse()), node + ".B", node);

  claimed_.push_back({node, disk});
  out_.nodes.push_back(node);
  out_.edges.push_back(std::move(edge));
}

template <class BK>
void Assembler<BK>::attach_amalgam_factor(const RankOneKind& kind, int d,
                                          const std::string& node) {
  AssemblyEdge edge;
  edge.left = left_label_;
  edge.right = node;
  edge.amalgam_order = d;
  edge.cert.label = node + " amalgam over Z_" + std::to_string(d);
  edge.cert.word_bound = opts_.word_bound;

  // pick the first unused site of the right order
  Site* site = nullptr;
  for (auto& s : sites_)
    if (!s.used && s.order == d) {
      site = &s;
      break;
    }
  if (!site) {
    edge.cert.checks.push_back(check("attachment_site_available", BK::tier(), false,
                                     "no unused base-level elliptic site of order " +
                                         std::to_string(d)));
    out_.edges.push_back(std::move(edge));
    out_.nodes.push_back(node);
    return;
  }
  if (site->needs_float)
    throw NeedFloat{site->desc + ": attachment point lies outside Q(zeta_12)"};
  site->used = true;

  // the factor's own cone of order exactly d, moved to the origin
  auto decomp = decompose_kind(kind);
  const CycloNumber tau_c = concrete_tau(kind);
  std::optional<PlaneVec> cone;
  for (const auto& cp : decomp.cone_data)
    if (cp.order == d && !cone) cone = cp.point;
  if (!cone) fail(ErrKind::Internal, "validated factor lacks a cone of order " + std::to_string(d));
  CycloNumber q = CycloNumber(cone->x) + CycloNumber(cone->y) * tau_c;

  Mat S = BK::make(BK::from_rational(1), Num{} - BK::from_cyclo(q), BK::from_rational(0),
                   BK::from_rational(1));  // z -> z - q
  // fold through the circle |z| = r about the cone point, then align (0,inf)
  // with the site's fixed-point pair
  Mat T = align_map(*site);

  const std::vector<Rational> radii = {Rational(1, 4), Rational(1, 8), Rational(1, 16),
                                       Rational(1, 32), Rational(1, 64)};
  std::vector<Mat> fgens_final;
  Disk factor_side{};
  Mat amalgam_right{};
  bool placed = false;
  EdgeCertificate best_cert;

  for (const Rational& radius : radii) {
    EdgeCertificate cert;
    cert.label = edge.cert.label;
    cert.word_bound = opts_.word_bound;
    cert.chosen_radius = radius;

    Num rho = BK::from_rational(radius * radius);
    Mat J = BK::make(BK::from_rational(0), rho, BK::from_rational(1), BK::from_rational(0));
    Mat TJ = compose(T, J);
    Mat TJS = compose(TJ, S);

    std::vector<Mat> fgens;
    for (const auto& g : wallpaper_gens(kind))
      fgens.push_back(compose(compose(TJS, g), TJS.inverse()));

    // amalgam generators on both sides
    Mat u = cone_rotation(q, d);                       // rotation in factor coordinates
    Mat v = compose(compose(TJS, u), TJS.inverse());   // transported to the site
    const Mat& e = site->elliptic;

    TransClass ce = classify(e), cv = classify(v);
    cert.checks.push_back(check("amalgam_order_left", BK::tier(),
                                ce.kind == TransKind::Elliptic && ce.order == d, ce.str()));
    cert.checks.push_back(check("amalgam_order_right", BK::tier(),
                                cv.kind == TransKind::Elliptic && cv.order == d, cv.str()));
    bool subgroups_match = false;
    Mat pw = v;
    for (int k = 1; k < d + 1; ++k) {
      if (BK::eq(pw, e)) subgroups_match = true;
      pw = compose(pw, v);
    }
    cert.checks.push_back(check("amalgam_subgroups_match", BK::tier(), subgroups_match,
                                "site elliptic is a power of the factor's amalgam generator"));

    Disk side = BK::image(T, BK::make_disk(BK::from_rational(0), radius, true));
    record_curve(cert, side);

    bool invariant = true;
    try {
      invariant = BK::same_disk(BK::image(e, side), side) &&
                  BK::same_disk(BK::image(v, side), side);
    } catch (const Error&) {
      invariant = false;
    }
    cert.checks.push_back(
        check("curve_invariant_under_amalgam", BK::tier(), invariant, ""));

    if (invariant && subgroups_match) {
      run_left_words_check(cert, side, e, d, "left_words_move_factor_side");
      Disk left_side = side;
      left_side.interior = !left_side.interior;
      run_factor_words_check(cert, fgens, left_side, v, d, "factor_words_move_left_side");
      check_disk_against_claimed(cert, side, node);
    }

    bool all = true;
    for (const auto& c : cert.checks) all = all && c.passed;
    best_cert = cert;
    if (all) {
      fgens_final = fgens;
      factor_side = side;
      amalgam_right = v;
      placed = true;
      break;
    }
  }

  edge.cert = best_cert;
  if (placed) {
    int gi = 0;
    for (const auto& g : fgens_final) push_gen(g, node + ".g" + std::to_string(gi++), node);
    claimed_.push_back({node, factor_side});
  }
  out_.nodes.push_back(node);
  out_.edges.push_back(std::move(edge));
}

template <class BK>
void Assembler<BK>::add_dihedral_involution(const CycloNumber& rho, int d,
                                            const std::string& node) {
  // F(z) = rho / z, swapping the sides of the circle |z|^2 = |rho|
  Mat F = BK::make(BK::from_rational(0), BK::from_cyclo(rho), BK::from_rational(1),
                   BK::from_rational(0));
  AssemblyEdge edge;
  edge.left = left_label_;
  edge.right = node;
  edge.amalgam_order = d;
  edge.cert.label = node + " dihedral edge over Z_" + std::to_string(d);
  edge.cert.word_bound = opts_.word_bound;
  edge.cert.chosen_radius = Rational(1, 4);

  Mat e = cone_rotation(CycloNumber(0), d);
  Disk side = BK::make_disk(BK::from_rational(0), Rational(1, 4), true);
  record_curve(edge.cert, side);

  TransClass cf = classify(F);
  edge.cert.checks.push_back(check("involution_order", BK::tier(),
                                   cf.kind == TransKind::Elliptic && cf.order == 2, cf.str()));
  bool conj_ok = BK::eq(compose(compose(F, e), F.inverse()), e.inverse());
  edge.cert.checks.push_back(
      check("involution_inverts_amalgam", BK::tier(), conj_ok, "F e F^-1 = e^-1"));
  bool swaps = false;
  try {
    Disk img = BK::image(F, side);
    Disk flipped = side;
    flipped.interior = !flipped.interior;
    swaps = BK::same_disk(img, flipped);
  } catch (const Error&) {
    swaps = false;
  }
  edge.cert.checks.push_back(check("involution_swaps_sides", BK::tier(), swaps, ""));
  bool inv = false;
  try {
    inv = BK::same_disk(BK::image(e, side), side);
  } catch (const Error&) {
  }
  edge.cert.checks.push_back(check("curve_invariant_under_amalgam", BK::tier(), inv, ""));

  run_left_words_check(edge.cert, side, e, d, "left_words_move_factor_side");
  // the finite dihedral side: elements E^k F map the closed exterior onto the
  // closed interior; the open exterior is moved off itself
  std::vector<Mat> dihedral_gens = {e, F};
  Disk left_side = side;
  left_side.interior = false;
  run_factor_words_check(edge.cert, dihedral_gens, left_side, e, d,
                         "factor_words_move_left_side");

  push_gen(F, node + ".F", node);
  out_.nodes.push_back(node);
  out_.edges.push_back(std::move(edge));
}

template <class BK>
void Assembler<BK>::init_finite_base(const FiniteKind& kind) {
  std::vector<Mat> gens;
  if constexpr (BK::is_exact) {
    std::vector<ExactMoebius> eg = finite_base_exact(kind);  // throws on A5 etc.
    gens = eg;
  } else {
    gens = finite_base_float(kind);
  }
  int gi = 0;
  for (const auto& g : gens) push_gen(g, "base.g" + std::to_string(gi++), "base");
  out_.nodes.push_back("base");

  // attachment sites: one per cone class of the quotient sphere; sites whose
  // fixed points leave the field are deferred to the floating backend
  auto add_axis_site = [&](const Mat& ell, int ord, const std::string& desc) {
    try {
      sites_.push_back(site_from_elliptic(ell, ord, desc));
    } catch (const NeedFloat&) {
      Site deferred;
      deferred.elliptic = ell;
      deferred.order = ord;
      deferred.needs_float = true;
      deferred.desc = desc;
      sites_.push_back(std::move(deferred));
    }
  };
  switch (kind.family) {
    case FiniteFamily::Trivial:
      break;
    case FiniteFamily::Cyclic: {
      // both endpoints of the rotation axis host a factor
      Mat rot = gens[0];
      Site s0;
      s0.elliptic = rot;
      s0.order = kind.n;
      s0.p = BK::from_rational(0);
      s0.p2_infinite = true;
      s0.desc = "cyclic axis at 0";
      sites_.push_back(s0);
      Site s1;
      s1.elliptic = rot;
      s1.order = kind.n;
      s1.p_infinite = true;
      s1.p2 = BK::from_rational(0);
      s1.desc = "cyclic axis at infinity";
      sites_.push_back(s1);
      break;
    }
    case FiniteFamily::Dihedral: {
      Mat rot = gens[0];
      Site s0;
      s0.elliptic = rot;
      s0.order = kind.n;
      s0.p = BK::from_rational(0);
      s0.p2_infinite = true;
      s0.desc = "dihedral n-axis at 0";
      sites_.push_back(s0);
      // the two involution cone classes
      Mat f0 = gens[1];  // z -> 1/z, fixed points +/-1
      Site f0s;
      f0s.elliptic = f0;
      f0s.order = 2;
      f0s.p = BK::from_rational(1);
      f0s.p2 = BK::from_rational(-1);
      f0s.desc = "dihedral flip at 1";
      sites_.push_back(f0s);
      if (kind.n % 2 == 1) {
        Site f1s = f0s;
        std::swap(f1s.p, f1s.p2);
        f1s.desc = "dihedral flip at -1";
        sites_.push_back(f1s);
      } else {
        // second class: the flip z -> w/z with w the primitive rotation value
        Mat f1 = compose(gens[0], f0);
        add_axis_site(f1, 2, "dihedral flip, second class");
      }
      break;
    }
    case FiniteFamily::A4: {
      Site s2;
      s2.elliptic = BK::make(BK::from_rational(-1), BK::from_rational(0), BK::from_rational(0),
                             BK::from_rational(1));
      s2.order = 2;
      s2.p = BK::from_rational(0);
      s2.p2_infinite = true;
      s2.desc = "A4 half-turn axis";
      sites_.push_back(s2);
      add_axis_site(gens[2], 3, "A4 three-fold axis");
      break;
    }
    case FiniteFamily::S4: {
      Site s4;
      s4.elliptic = gens[0];
      s4.order = 4;
      s4.p = BK::from_rational(0);
      s4.p2_infinite = true;
      s4.desc = "S4 four-fold axis";
      sites_.push_back(s4);
      // three-fold axis: (iz) o (edge flip) has order 3
      Mat three = compose(gens[0], gens[1]);
      add_axis_site(three, 3, "S4 three-fold axis");
      add_axis_site(gens[1], 2, "S4 edge axis");
      break;
    }
    case FiniteFamily::A5: {
      if constexpr (BK::is_exact)
        throw NeedFloat{"A5 has no exact realization in Q(zeta_12)"};
      else {
        Mat rot5 = gens[0];
        Mat invol = gens[1];
        add_axis_site(invol, 2, "A5 two-fold axis");
        Mat three = compose(rot5, invol);
        TransClass c3 = classify(three);
        if (c3.kind == TransKind::Elliptic && c3.order == 3)
          add_axis_site(three, 3, "A5 three-fold axis");
      }
      break;
    }
  }
}

template <class BK>
void Assembler<BK>::init_rank1_base(const RankOneKind& kind) {
  int gi = 0;
  for (const auto& g : wallpaper_gens(kind)) push_gen(g, "base.g" + std::to_string(gi++), "base");
  out_.nodes.push_back("base");
  add_wallpaper_sites(kind, "base");
  lattice_at_infinity_ = true;  // the wallpaper base owns the cusp at infinity
  ambient_tau_ = concrete_tau(kind);
}

template <class BK>
void Assembler<BK>::init_g2_base(const G2Base& base, ExtensionRecipe& rewritten) {
  switch (base.kind) {
    case G2Base::Case::FreeRank2:
      rewritten.base = FiniteKind::trivial();
      rewritten.free_rank += 2;
      break;
    case G2Base::Case::AmalgamCyclic: {
      RankOneKind kd(tag_of_order(base.d));
      rewritten.base = kd;
      rewritten.factors.insert(rewritten.factors.begin(), {kd, base.d});
      break;
    }
    case G2Base::Case::SwapInvolution: {
      rewritten.base = FiniteKind::trivial();
      // built directly: lattice at infinity plus the side-swapping involution
      attach_lattice_at_infinity(tau_default_, "base");
      left_label_ = "base";
      need_left_words_ = true;
      CycloNumber rho = tau_default_ * CycloNumber(Rational(1, 16));
      AssemblyEdge edge;
      edge.left = "base";
      edge.right = "swap";
      edge.amalgam_order = 1;
      edge.cert.label = "swap involution free edge";
      edge.cert.chosen_radius = Rational(1, 4);
      Mat F = BK::make(BK::from_rational(0), BK::from_cyclo(rho), BK::from_rational(1),
                       BK::from_rational(0));
      TransClass cf = classify(F);
      edge.cert.checks.push_back(check("involution_order", BK::tier(),
                                       cf.kind == TransKind::Elliptic && cf.order == 2,
                                       cf.str()));
      Disk side = BK::make_disk(BK::from_rational(0), Rational(1, 4), true);
      record_curve(edge.cert, side);
      bool swaps = false;
      try {
        Disk img = BK::image(F, side);
        Disk flipped = side;
        flipped.interior = !flipped.interior;
        swaps = BK::same_disk(img, flipped);
      } catch (const Error&) {
      }
      edge.cert.checks.push_back(check("involution_swaps_sides", BK::tier(), swaps, ""));
      if constexpr (BK::is_exact) {
        RealQuad min_sq = lattice_min_norm_sq(tau_default_);
        edge.cert.checks.push_back(check("lattice_shortest_vector_clearance", "exact-lattice",
                                         min_sq > RealQuad(Rational(1, 4)),
                                         "min |v|^2 = " + min_sq.str() + " vs (2r)^2 = 1/4"));
      }
      push_gen(F, "swap.F", "swap");
      out_.nodes.push_back("swap");
      out_.edges.push_back(std::move(edge));
      break;
    }
    case G2Base::Case::DihedralAmalgam: {
      RankOneKind kd(tag_of_order(base.d));
      rewritten.base = kd;
      init_rank1_base(kd);
      left_label_ = "base";
      // consume the base cone at the origin: the dihedral edge attaches there
      for (auto& s : sites_)
        if (!s.used && s.order == base.d && !s.p_infinite) {
          s.used = true;
          break;
        }
      CycloNumber rho = concrete_tau(kd) * CycloNumber(Rational(1, 16));
      add_dihedral_involution(rho, base.d, "dihedral");
      break;
    }
  }
}

template <class BK>
void Assembler<BK>::init_base(const ExtensionRecipe& recipe) {
  left_label_ = "base(" + recipe.base_str() + ")";
  if (std::holds_alternative<FiniteKind>(recipe.base))
    init_finite_base(std::get<FiniteKind>(recipe.base));
  else if (std::holds_alternative<RankOneKind>(recipe.base))
    init_rank1_base(std::get<RankOneKind>(recipe.base));
}

template <class BK>
AssemblyResult Assembler<BK>::run(const ExtensionRecipe& recipe_in) {
  ExtensionRecipe recipe = recipe_in;
  out_ = AssemblyResult{};
  out_.exact = BK::is_exact;
  out_.word_bound = opts_.word_bound;

  if (std::holds_alternative<G2Base>(recipe.base)) {
    ExtensionRecipe rewritten = recipe;
    init_g2_base(std::get<G2Base>(recipe.base), rewritten);
    if (!std::holds_alternative<G2Base>(rewritten.base) && left_.empty()) {
      // AmalgamCyclic / FreeRank2 reduce to an ordinary recipe
      recipe = rewritten;
      init_base(recipe);
    } else {
      recipe.free_rank = rewritten.free_rank;
      recipe.factors = rewritten.factors;
    }
  } else {
    init_base(recipe);
  }

  // free part
  bool base_trivial = std::holds_alternative<FiniteKind>(recipe.base) &&
                      std::get<FiniteKind>(recipe.base).family == FiniteFamily::Trivial;
  need_left_words_ = need_left_words_ || !base_trivial;
  bool first_at_infinity = base_trivial && !lattice_at_infinity_ && left_.empty() &&
                           recipe.free_rank >= 1;
  folded_planned_ = recipe.free_rank - (first_at_infinity ? 1 : 0);
  for (const auto& f : recipe.factors)
    if (f.amalgam_order == 1) ++folded_planned_;

  RankOneKind lattice_kind(Rank1Tag::K1, TauScalar::concrete(tau_default_));
  for (int i = 0; i < recipe.free_rank; ++i) {
    std::string node = "free" + std::to_string(i + 1);
    if (i == 0 && first_at_infinity) {
      attach_lattice_at_infinity(tau_default_, node);
      left_label_ = node;
    } else {
      attach_free_factor(lattice_kind, node);
    }
  }

  // factor chain
  for (size_t j = 0; j < recipe.factors.size(); ++j) {
    const RecipeFactor& f = recipe.factors[j];
    std::string node = "factor" + std::to_string(j + 1) + "(" + f.kind.name() + ")";
    if (f.amalgam_order == 1)
      attach_free_factor(f.kind, node);
    else
      attach_amalgam_factor(f.kind, f.amalgam_order, node);
    left_label_ += " * " + node;
  }

  // ambient translate clearance: the factor at infinity must move every disk
  // off every disk (exact finite enumeration over short lattice vectors)
  if (lattice_at_infinity_ && !claimed_.empty()) {
    if constexpr (BK::is_exact) {
      bool ok = true;
      std::string detail;
      RealQuad min_sq = lattice_min_norm_sq(ambient_tau_);
      // search box: |m|,|n| <= M with (3/4) M^2 |u|^2 > (max reach)^2
      RealQuad reach(0);
      for (const auto& [n1, d1] : claimed_)
        for (const auto& [n2, d2] : claimed_) {
          if (!d1.interior || !d2.interior) continue;
          RealQuad bound = (d1.circle.center - d2.circle.center).norm_sq();
          RealQuad radsum = d1.circle.radius_sq + d2.circle.radius_sq + RealQuad(2);
          RealQuad r = (bound + radsum) * RealQuad(2);
          if (r > reach) reach = r;
        }
      BigInt M = (reach * RealQuad(2) / min_sq + RealQuad(2)).floor() + 1;
      long long Mi = std::min<long long>(M.convert_to<long long>(), 64);
      CycloNumber tv = ambient_tau_;
      for (long long m = -Mi; m <= Mi && ok; ++m)
        for (long long n = -Mi; n <= Mi && ok; ++n) {
          if (m == 0 && n == 0) continue;
          CycloNumber lam = CycloNumber(Rational(m)) + CycloNumber(Rational(n)) * tv;
          ExactMoebius t{CycloNumber(1), lam, CycloNumber(0), CycloNumber(1)};
          for (const auto& [n1, d1] : claimed_) {
            ExactDisk img = map_disk(t, d1);
            for (const auto& [n2, d2] : claimed_) {
              if (!disks_disjoint_closed(img, d2)) {
                ok = false;
                detail = "lattice vector " + std::to_string(m) + "+" + std::to_string(n) +
                         "*tau collides " + n1 + " with " + n2;
              }
            }
          }
        }
      out_.global_checks.push_back(
          check("ambient_lattice_translate_clearance", "exact-lattice", ok, detail));
    } else {
      bool ok = true;
      FloatC tv = ambient_tau_.embed();
      for (int m = -6; m <= 6 && ok; ++m)
        for (int n = -6; n <= 6 && ok; ++n) {
          if (m == 0 && n == 0) continue;
          FloatMoebius t{FloatC(1), FloatC(m, 0) + FloatC(n, 0) * tv, FloatC(0), FloatC(1)};
          for (const auto& [n1, d1] : claimed_)
            for (const auto& [n2, d2] : claimed_)
              ok = ok && disks_disjoint_closed(map_disk(t, d1), d2, 1e-7);
        }
      out_.global_checks.push_back(
          check("ambient_lattice_translate_clearance", BK::tier(), ok, ""));
    }
  }

  // every generator is parabolic, elliptic of catalog order, or loxodromic
  bool cls_ok = true;
  std::string cls_detail;
  for (const auto& gi : out_.info) {
    const TransClass& c = gi.cls;
    bool good = c.kind == TransKind::Parabolic || c.kind == TransKind::Loxodromic ||
                (c.kind == TransKind::Elliptic && c.order &&
                 (*c.order == 2 || *c.order == 3 || *c.order == 4 || *c.order == 6 ||
                  (*c.order == 5 && !BK::is_exact)));
    if (!good) {
      cls_ok = false;
      cls_detail = gi.name + " classified as " + c.str();
    }
  }
  out_.global_checks.push_back(
      check("generator_classification", BK::tier(), cls_ok, cls_detail));

  return out_;
}

}  // namespace

// ---------------------------------------------------------------------------

AssemblyResult build_mdc_schottky(int rank, const AssemblyOptions& opts) {
  if (rank < 1) fail(ErrKind::RecipeInvariantViolation, "rank must be at least 1");
  ExtensionRecipe recipe;
  recipe.free_rank = rank;
  return assemble(recipe, opts);
}

AssemblyResult assemble(const ExtensionRecipe& recipe, const AssemblyOptions& opts) {
  recipe.validate();
  try {
    Assembler<ExactBK> eng(opts);
    return eng.run(recipe);
  } catch (const NeedFloat&) {
    Assembler<FloatBK> eng(opts);
    return eng.run(recipe);
  } catch (const Error& e) {
    if (e.kind() == ErrKind::SymbolicObstruction) {
      Assembler<FloatBK> eng(opts);
      return eng.run(recipe);
    }
    throw;
  }
}

void require_certificates(const AssemblyResult& r) {
  if (!r.certificate_passed())
    fail(ErrKind::CertificateFailure, "check failed: " + r.first_failure());
}

ExactMoebius word_value(const GroupWord& w, const std::vector<ExactMoebius>& gens) {
  ExactMoebius acc = ExactMoebius::identity();
  for (const auto& [id, exp] : w.letters) {
    if (id < 0 || static_cast<size_t>(id) >= gens.size())
      fail(ErrKind::UnknownGenerator, "generator id " + std::to_string(id));
    ExactMoebius base = exp < 0 ? gens[id].inverse() : gens[id];
    int count = exp < 0 ? -exp : exp;
    for (int k = 0; k < count; ++k) acc = compose(acc, base);
  }
  return acc;
}

TransClass is_torsion_witness(const GroupWord& w, const std::vector<ExactMoebius>& gens) {
  return classify(word_value(w, gens));
}

std::vector<ExactMoebius> finite_group_elements(const std::vector<ExactMoebius>& gens,
                                                size_t cap) {
  auto en = bounded_elements<ExactBK>(gens, 64, cap);
  if (!en.closed) fail(ErrKind::Internal, "group did not close within the element budget");
  std::vector<ExactMoebius> out = en.elements;
  out.insert(out.begin(), ExactMoebius::identity());
  return out;
}

std::vector<FloatMoebius> finite_group_elements(const std::vector<FloatMoebius>& gens,
                                                size_t cap) {
  auto en = bounded_elements<FloatBK>(gens, 64, cap);
  if (!en.closed) fail(ErrKind::Internal, "group did not close within the element budget");
  std::vector<FloatMoebius> out = en.elements;
  out.insert(out.begin(), FloatMoebius::identity());
  return out;
}

std::vector<ExactMoebius> finite_base_exact(const FiniteKind& kind) {
  const CycloNumber one(1), zero(0);
  switch (kind.family) {
    case FiniteFamily::Trivial:
      return {};
    case FiniteFamily::Cyclic: {
      if (12 % kind.n != 0)
        fail(ErrKind::SymbolicObstruction,
             "cyclic(" + std::to_string(kind.n) + ") has no exact realization in Q(zeta_12)");
      return {ExactMoebius::scaling(CycloNumber::root12(12 / kind.n))};
    }
    case FiniteFamily::Dihedral: {
      if (12 % kind.n != 0)
        fail(ErrKind::SymbolicObstruction,
             "dihedral(" + std::to_string(kind.n) + ") has no exact realization in Q(zeta_12)");
      return {ExactMoebius::scaling(CycloNumber::root12(12 / kind.n)),
              ExactMoebius{zero, one, one, zero}};
    }
    case FiniteFamily::A4: {
      // half-turn about the vertical axis and a three-fold rotation
      ExactMoebius v{-one, zero, zero, one};
      ExactMoebius f{zero, one, one, zero};
      ExactMoebius w{-one, CycloNumber::i(), one, CycloNumber::i()};
      std::vector<ExactMoebius> gens = {v, f, w};
      if (finite_group_elements(gens).size() != 12)
        fail(ErrKind::Internal, "A4 realization has the wrong order");
      return gens;
    }
    case FiniteFamily::S4: {
      ExactMoebius s = ExactMoebius::scaling(CycloNumber::i());
      ExactMoebius edge{one, one, one, -one};
      std::vector<ExactMoebius> gens = {s, edge};
      if (finite_group_elements(gens).size() != 24)
        fail(ErrKind::Internal, "S4 realization has the wrong order");
      return gens;
    }
    case FiniteFamily::A5:
      fail(ErrKind::SymbolicObstruction, "A5 has no exact realization in Q(zeta_12)");
  }
  fail(ErrKind::Internal, "unreachable");
}

std::vector<FloatMoebius> finite_base_float(const FiniteKind& kind) {
  switch (kind.family) {
    case FiniteFamily::A5: {
      FloatC e = std::polar(1.0, 2.0 * M_PI / 5.0);
      FloatC a = e - std::pow(e, 4), b = std::pow(e, 2) - std::pow(e, 3);
      FloatMoebius S{e, 0.0, 0.0, 1.0};
      FloatMoebius T{a, b, b, -a};
      std::vector<FloatMoebius> gens = {S, T};
      if (finite_group_elements(gens).size() != 60)
        fail(ErrKind::Internal, "A5 realization has the wrong order");
      return gens;
    }
    case FiniteFamily::Cyclic:
      return {FloatMoebius{std::polar(1.0, 2.0 * M_PI / kind.n), 0.0, 0.0, 1.0}};
    case FiniteFamily::Dihedral:
      return {FloatMoebius{std::polar(1.0, 2.0 * M_PI / kind.n), 0.0, 0.0, 1.0},
              FloatMoebius{0.0, 1.0, 1.0, 0.0}};
    default: {
      std::vector<FloatMoebius> out;
      for (const auto& g : finite_base_exact(kind)) out.push_back(embed_moebius(g));
      return out;
    }
  }
}

}  // namespace mdc
