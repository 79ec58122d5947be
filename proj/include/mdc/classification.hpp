#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdc/recipe.hpp"
#include "mdc/signature.hpp"

namespace mdc {

// Structure tree of an assembled group: vertices are the complementary
// components of the invariant loop system, edges are the loops.
struct StructureTree {
  struct Vertex {
    int genus = 0;  // 0 or 1, plus one merged genus-2 vertex in the edge case
    std::string label;
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;
  std::optional<int> invariant_vertex;
  std::optional<int> invariant_edge;

  int total_genus() const {
    int g = 0;
    for (const auto& v : vertices) g += v.genus;
    return g;
  }
  bool is_tree() const;
};

StructureTree recipe_to_tree(const ExtensionRecipe& recipe);

// genus of the normal rank-g subgroup an assembled recipe determines
long long recipe_genus(const ExtensionRecipe& recipe);

// Group descriptor for a symmetry case. Torus groups are translations
// extended by a rotation of order d in {1,2,3,4,6}.
struct GroupDesc {
  enum class Shape { Cyclic, Dihedral, A4, S4, A5, TorusGroup };
  Shape shape = Shape::Cyclic;
  long long order = 1;
  int cyclic_part = 1;       // rotation order (cyclic/dihedral/torus groups)
  long long translation_part = 1;  // torus groups only

  std::string str() const;
  bool is_dihedral() const { return shape == Shape::Dihedral; }
};

struct SymmetryCase {
  std::string case_id;  // the trichotomy label, e.g. "(2.3)", "(3.1)", "(3.2)"
  GroupDesc group;
  // loop-orbit data: (stabilizer order d, number of orbits with that d)
  std::vector<std::pair<int, int>> orbit_data;
  int free_rank = 0;  // trivially-stabilized loop orbits
  std::string detail;
};

// Enumerates the admissible symmetry groups at genus g across the three
// branches: invariant compressible disc (and the merged genus-2 vertex),
// invariant genus-0 vertex, and invariant genus-1 vertex.
std::vector<SymmetryCase> admissible_cases(int g);

struct MaxIndexResult {
  long long order = 1;
  SymmetryCase witness;
  std::vector<SymmetryCase> all_witnesses;  // every case achieving the maximum
};

MaxIndexResult max_index(int g);

// admissible translation-part orders for a torus rotation of order d
bool torus_translation_admissible(long long t, int d);

}  // namespace mdc
