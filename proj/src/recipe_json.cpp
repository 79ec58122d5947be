#include "mdc/recipe.hpp"

#include <algorithm>

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

std::set<int> clip(const std::set<int>& s) {
  std::set<int> out;
  for (int v : s)
    if (v == 1 || v == 2 || v == 3 || v == 4 || v == 6) out.insert(v);
  return out;
}

}  // namespace

std::set<int> G2Base::element_orders() const {
  switch (kind) {
    case Case::FreeRank2: return {1};
    case Case::AmalgamCyclic: {
      auto out = RankOneKind(tag_of_order(d)).elliptic_orders();
      out.insert(1);
      return out;
    }
    case Case::SwapInvolution: return {1, 2};
    case Case::DihedralAmalgam: {
      auto out = RankOneKind(tag_of_order(d)).elliptic_orders();
      out.insert(1);
      out.insert(2);
      return out;
    }
  }
  return {1};
}

std::string G2Base::str() const {
  switch (kind) {
    case Case::FreeRank2: return "g2:free_rank2";
    case Case::AmalgamCyclic: return "g2:amalgam_cyclic(" + std::to_string(d) + ")";
    case Case::SwapInvolution: return "g2:swap_involution";
    case Case::DihedralAmalgam: return "g2:dihedral_amalgam(" + std::to_string(d) + ")";
  }
  return "?";
}

std::set<int> base_element_orders(const RecipeBase& base) {
  if (std::holds_alternative<FiniteKind>(base))
    return clip(std::get<FiniteKind>(base).element_orders());
  if (std::holds_alternative<RankOneKind>(base)) {
    auto out = std::get<RankOneKind>(base).elliptic_orders();
    out.insert(1);
    return out;
  }
  return std::get<G2Base>(base).element_orders();
}

std::set<int> ExtensionRecipe::left_side_orders(size_t upto) const {
  std::set<int> out = base_element_orders(base);
  out.insert(1);
  for (size_t i = 0; i < upto && i < factors.size(); ++i)
    for (int d : factors[i].kind.elliptic_orders()) out.insert(d);
  return out;
}

std::string ExtensionRecipe::base_str() const {
  if (std::holds_alternative<FiniteKind>(base)) return std::get<FiniteKind>(base).str();
  if (std::holds_alternative<RankOneKind>(base)) return std::get<RankOneKind>(base).name();
  return std::get<G2Base>(base).str();
}

void ExtensionRecipe::validate() const {
  if (free_rank < 0)
    fail(ErrKind::RecipeInvariantViolation, "free rank must be nonnegative");
  for (size_t j = 0; j < factors.size(); ++j) {
    const RecipeFactor& f = factors[j];
    int t = f.amalgam_order;
    std::string where = "factor " + std::to_string(j) + " (" + f.kind.name() + ")";
    if (!(t == 1 || t == 2 || t == 3 || t == 4 || t == 6))
      fail(ErrKind::RecipeInvariantViolation,
           where + ": amalgam order " + std::to_string(t) + " is outside {1,2,3,4,6}");
    auto avail = f.kind.amalgam_orders();
    if (!avail.count(t)) {
      std::string why = f.kind.name() == "K1" ? " (K1 is torsion-free; only a free edge exists)"
                                              : "";
      fail(ErrKind::RecipeInvariantViolation,
           where + ": amalgam order " + std::to_string(t) + " is not available in " +
               f.kind.name() + why);
    }
    if (t != 1 && !left_side_orders(j).count(t))
      fail(ErrKind::RecipeInvariantViolation,
           where + ": amalgam order " + std::to_string(t) +
               " is not available in the already-assembled left side");
  }
}

}  // namespace mdc
