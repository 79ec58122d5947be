#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mdc/catalog.hpp"

namespace mdc {

// Rank-two base cases: the free rank-2 group, two rank-one factors
// amalgamated over a cyclic group, a free product with a side-swapping
// involution, and the dihedral edge-stabilizer case.
struct G2Base {
  enum class Case { FreeRank2, AmalgamCyclic, SwapInvolution, DihedralAmalgam };
  Case kind = Case::FreeRank2;
  int d = 0;  // cyclic order for the amalgam/dihedral cases

  G2Base() = default;
  G2Base(Case c, int d_ = 0) : kind(c), d(d_) {
    if ((kind == Case::AmalgamCyclic || kind == Case::DihedralAmalgam) &&
        !(d == 2 || d == 3 || d == 4 || d == 6))
      fail(ErrKind::RecipeInvariantViolation, "rank-two amalgam order must lie in {2,3,4,6}");
  }

  std::set<int> element_orders() const;
  std::string str() const;
};

using RecipeBase = std::variant<FiniteKind, RankOneKind, G2Base>;

struct RecipeFactor {
  RankOneKind kind;
  int amalgam_order = 1;  // t_j; 1 means a free attachment
};

// The assembly grammar: a free part of the given rank, a base group, and an
// ordered chain of rank-one factors, each amalgamated over a cyclic group of
// order t_j (t_j = 1 for a free product edge). The chain is uniform: factor j
// amalgamates against everything assembled before it.
struct ExtensionRecipe {
  int free_rank = 0;
  RecipeBase base = FiniteKind::trivial();
  std::vector<RecipeFactor> factors;

  // Throws RecipeInvariantViolation naming the offending factor/order.
  void validate() const;

  // amalgam orders available on the left side after `upto` factors
  std::set<int> left_side_orders(size_t upto) const;

  std::string base_str() const;
};

std::set<int> base_element_orders(const RecipeBase& base);

}  // namespace mdc
