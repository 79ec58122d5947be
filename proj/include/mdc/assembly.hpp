#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdc/geometry.hpp"
#include "mdc/recipe.hpp"

namespace mdc {

struct NamedCheck {
  std::string name;
  std::string tier;  // "exact-lattice", "exact", "bounded-word L=8", "float eps=..."
  bool passed = false;
  std::string detail;
};

// Jordan-curve certificate data for one combination edge.
struct EdgeCertificate {
  std::string label;
  std::optional<ExactCircle> curve;   // exact builds
  std::optional<FloatCircle> fcurve;  // floating builds
  Rational chosen_radius;             // the rational radius picked in standard coordinates
  std::string side;                   // which side the right factor owns
  int word_bound = 0;                 // 0 for exact-only certificates
  std::vector<NamedCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

struct GeneratorInfo {
  std::string name;     // e.g. "base.g0", "factor1.A"
  std::string node;     // graph node owning the generator
  TransClass cls;
};

struct AssemblyEdge {
  std::string left;   // accumulated left side label
  std::string right;  // factor node label
  int amalgam_order = 1;
  EdgeCertificate cert;
};

struct AssemblyResult {
  bool exact = true;  // exact cyclotomic build (else floating with tolerance)
  std::vector<ExactMoebius> exact_gens;
  std::vector<FloatMoebius> float_gens;  // always populated
  std::vector<GeneratorInfo> info;
  std::vector<std::string> nodes;
  std::vector<AssemblyEdge> edges;
  std::vector<NamedCheck> global_checks;
  int word_bound = 8;

  bool certificate_passed() const {
    for (const auto& c : global_checks)
      if (!c.passed) return false;
    for (const auto& e : edges)
      if (!e.cert.passed()) return false;
    return true;
  }
  std::string first_failure() const {
    for (const auto& e : edges)
      for (const auto& c : e.cert.checks)
        if (!c.passed) return e.cert.label.empty() ? c.name : e.cert.label + ": " + c.name;
    for (const auto& c : global_checks)
      if (!c.passed) return c.name;
    return "";
  }
};

struct AssemblyOptions {
  int word_bound = 8;          // L for the bounded-word checks
  size_t element_cap = 200000; // BFS element budget per side
  // circle layout overrides for the free-rank construction
  std::optional<Rational> first_disk_radius;
  std::optional<CycloNumber> tau_value;  // lattice parameter for symbolic factors
};

// Free product of g rank-one lattice groups: the first factor acts as the
// lattice Z + Z tau with infinity as its cusp, the others are folded into
// pairwise disjoint disks. The default g=2 layout uses the circle of radius
// 1/4 centered at 0.
AssemblyResult build_mdc_schottky(int rank, const AssemblyOptions& opts = {});

// Assemble an extension recipe. Validates the recipe first (throws
// RecipeInvariantViolation); geometric check failures are reported in the
// returned certificates, not thrown.
AssemblyResult assemble(const ExtensionRecipe& recipe, const AssemblyOptions& opts = {});

// Throws CertificateFailure with the first failed check named.
void require_certificates(const AssemblyResult& r);

// --- group words -----------------------------------------------------------

struct GroupWord {
  std::vector<std::pair<int, int>> letters;  // (generator id, exponent)
};

ExactMoebius word_value(const GroupWord& w, const std::vector<ExactMoebius>& gens);
TransClass is_torsion_witness(const GroupWord& w, const std::vector<ExactMoebius>& gens);

// --- finite groups ---------------------------------------------------------

// All elements of the finite group generated by exact maps (projective dedup).
std::vector<ExactMoebius> finite_group_elements(const std::vector<ExactMoebius>& gens,
                                                size_t cap = 256);
std::vector<FloatMoebius> finite_group_elements(const std::vector<FloatMoebius>& gens,
                                                size_t cap = 256);

// Exact standard realizations (A5 has none in this field: returns floats only).
std::vector<ExactMoebius> finite_base_exact(const FiniteKind& kind);    // throws if impossible
std::vector<FloatMoebius> finite_base_float(const FiniteKind& kind);

}  // namespace mdc
