#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mdc/affine.hpp"
#include "mdc/qlattice.hpp"
#include "mdc/signature.hpp"

namespace mdc {

// Finite Moebius group kinds (the rank-zero extension groups).
enum class FiniteFamily { Trivial, Cyclic, Dihedral, A4, S4, A5 };

struct FiniteKind {
  FiniteFamily family = FiniteFamily::Trivial;
  int n = 0;  // cyclic order / dihedral half-order

  FiniteKind() = default;
  FiniteKind(FiniteFamily f, int n_ = 0) : family(f), n(n_) {
    if ((f == FiniteFamily::Cyclic || f == FiniteFamily::Dihedral) && n < 2)
      fail(ErrKind::RecipeInvariantViolation, "cyclic/dihedral kind needs n >= 2");
  }
  static FiniteKind trivial() { return {}; }
  static FiniteKind cyclic(int n) { return {FiniteFamily::Cyclic, n}; }
  static FiniteKind dihedral(int n) { return {FiniteFamily::Dihedral, n}; }
  static FiniteKind a4() { return {FiniteFamily::A4}; }
  static FiniteKind s4() { return {FiniteFamily::S4}; }
  static FiniteKind a5() { return {FiniteFamily::A5}; }

  long long order() const {
    switch (family) {
      case FiniteFamily::Trivial: return 1;
      case FiniteFamily::Cyclic: return n;
      case FiniteFamily::Dihedral: return 2LL * n;
      case FiniteFamily::A4: return 12;
      case FiniteFamily::S4: return 24;
      case FiniteFamily::A5: return 60;
    }
    return 1;
  }

  // element orders present in the group
  std::set<int> element_orders() const;
  std::string str() const;
  static FiniteKind parse(const std::string& name, int n);
  bool operator==(const FiniteKind& o) const { return family == o.family && n == o.n; }
};

// The six rank-one extension kinds. K3, K4, K6 force their tau value;
// K1, K2, K22 default to the symbolic lattice parameter.
enum class Rank1Tag { K1, K2, K22, K3, K4, K6 };

struct RankOneKind {
  Rank1Tag tag;
  TauScalar tau;

  explicit RankOneKind(Rank1Tag t) : RankOneKind(t, default_tau(t)) {}
  RankOneKind(Rank1Tag t, TauScalar tau_value);

  static TauScalar default_tau(Rank1Tag t);
  static RankOneKind parse(const std::string& name);
  std::string name() const;

  // order of the point group K/lattice
  int quotient_order() const;
  // orders of elliptic elements present ({} for the torsion-free K1)
  std::set<int> elliptic_orders() const;
  // admissible amalgam orders = {1} plus the elliptic orders
  std::set<int> amalgam_orders() const;
};

// Exact generators precisely as the catalog prints them.
std::vector<AffineMap> build_catalog_group(const RankOneKind& kind);

struct ConePoint {
  int order = 0;
  PlaneVec point;  // representative fixed point modulo the lattice
};

struct WallpaperDecomposition {
  TauScalar tau_ctx;                         // symbolic marker or concrete tau
  QLattice lattice;                          // translation subgroup
  std::vector<CycloNumber> point_group;      // multipliers, deterministic order
  std::vector<int> point_group_orders;       // multiset of element orders
  long long point_group_order = 1;
  std::vector<ConePoint> cone_data;
  // section: one group element (multiplier, matrix, translation) per coset
  struct Coset {
    CycloNumber mult;
    Mat2Q action;
    PlaneVec trans;
  };
  std::vector<Coset> cosets;

  bool member(const AffineMap& g) const;
};

WallpaperDecomposition decompose_wallpaper(const std::vector<AffineMap>& gens,
                                           const TauScalar& tau_ctx);
WallpaperDecomposition decompose_kind(const RankOneKind& kind);

OrbifoldSignature quotient_signature(const WallpaperDecomposition& d);

// plane coordinates of a tau-scalar relative to {1, tau_ctx}
PlaneVec tau_to_coords(const TauScalar& t, const TauScalar& tau_ctx);
// action of a multiplier on {1, tau_ctx} coordinates
Mat2Q multiplier_matrix(const CycloNumber& m, const TauScalar& tau_ctx);

struct RelationClaim {
  std::string name;
  bool holds = false;
  bool asserted = false;  // printed claims are asserted; findings are reported
  std::string detail;
};

struct CatalogRelationsReport {
  std::vector<RelationClaim> claims;
  bool all_asserted_hold = true;
};

CatalogRelationsReport check_catalog_relations();

}  // namespace mdc
