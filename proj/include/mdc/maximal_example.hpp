#pragma once

#include <string>
#include <vector>

#include "mdc/assembly.hpp"

namespace mdc {

// Exact verification of the maximal genus-2 extension: tau = e^{i pi/3},
// A(z) = z+1, B(z) = z+tau, E(z) = tau z, F the involution with fixed points
// on the circle of radius 1/4 about 0 along the direction of 1+tau. Confirms
// index 12 with dihedral quotient over the rank-2 normal subgroup
// G = <A, B> * <FAF, FBF>.
struct MaximalExampleReport {
  struct Step {
    std::string name;
    bool passed = false;
    std::string detail;
  };
  std::vector<Step> steps;
  int index = 0;                 // 12 on success
  std::string quotient;          // "dihedral of order 12"
  AssemblyResult g_certificate;  // combination certificate for the rank-2 subgroup

  bool passed() const {
    for (const auto& s : steps)
      if (!s.passed) return false;
    return g_certificate.certificate_passed();
  }
  std::string first_failure() const {
    for (const auto& s : steps)
      if (!s.passed) return s.name;
    return g_certificate.first_failure();
  }
};

MaximalExampleReport verify_maximal_g2_example();

}  // namespace mdc
