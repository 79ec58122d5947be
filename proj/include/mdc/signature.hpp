#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mdc/rational.hpp"

namespace mdc {

// Quotient-orbifold signature (genus, k; m_1, ..., m_k), cone orders sorted.
struct OrbifoldSignature {
  int genus = 0;
  std::vector<int> cone_orders;

  OrbifoldSignature() = default;
  OrbifoldSignature(int g, std::vector<int> cones) : genus(g), cone_orders(std::move(cones)) {
    std::sort(cone_orders.begin(), cone_orders.end());
  }

  bool operator==(const OrbifoldSignature& o) const {
    return genus == o.genus && cone_orders == o.cone_orders;
  }
  bool operator!=(const OrbifoldSignature& o) const { return !(*this == o); }

  std::string str() const {
    std::string s = "(" + std::to_string(genus) + "," + std::to_string(cone_orders.size()) + ";";
    if (cone_orders.empty()) s += "-";
    for (size_t i = 0; i < cone_orders.size(); ++i)
      s += (i ? "," : "") + std::to_string(cone_orders[i]);
    return s + ")";
  }
};

// chi = 2 - 2 genus - sum(1 - 1/m_i), exactly.
inline Rational euler_char(const OrbifoldSignature& sig) {
  Rational chi(2 - 2 * sig.genus);
  for (int m : sig.cone_orders) chi -= Rational(1) - Rational(1, m);
  return chi;
}

// Riemann-Hurwitz balance 2 - 2g = |H| * chi(sig), exactly.
inline bool rh_check(int g, const BigInt& h_order, const OrbifoldSignature& sig) {
  return Rational(2 - 2 * g) == Rational(h_order) * euler_char(sig);
}
inline bool rh_check(int g, long long h_order, const OrbifoldSignature& sig) {
  return rh_check(g, BigInt(h_order), sig);
}

}  // namespace mdc
