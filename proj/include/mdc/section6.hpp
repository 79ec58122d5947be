#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdc/catalog.hpp"
#include "mdc/signature.hpp"

namespace mdc {

// g = |K0| (u + sum_j 1/d_j), exactly; the caller checks integrality.
Rational genus_from_master(long long k0_order, int u, const std::vector<int>& d_list);

// One table row for a finite base family, symbolic in the free rank r:
// genus(r) = h_order * r + genus_const and the signature is (r, k; cones).
struct Section6Row {
  FiniteFamily family = FiniteFamily::Trivial;
  int n = 0;     // concrete n for cyclic/dihedral rows
  int a = 0, b = 0, c = 0;
  long long h_order = 1;
  long long genus_const = 0;
  std::vector<int> cones;            // sorted cone orders
  std::vector<int> amalgam_orders;   // the d_j list of the master formula

  long long genus_at(int r) const { return h_order * r + genus_const; }
  OrbifoldSignature signature_at(int r) const { return OrbifoldSignature(r, cones); }
  std::string cell() const;  // parameter-cell label, e.g. "n=4,a=1,b=0"
};

// Rows derived from the family attachment rules (base quotient cones,
// one amalgam per cone slot). Every row satisfies the Riemann-Hurwitz
// balance by construction; a test asserts it.
std::vector<Section6Row> section6_rows(const FiniteKind& base);

// Parameter cells that the printed side-conditions leave undefined
// (dihedral: odd n with b = 1).
std::vector<std::string> section6_uncovered_cells(const FiniteKind& base);

// A cell of the printed table (typography preserved in `note`).
struct PrintedCell {
  std::string family;  // trivial|cyclic|dihedral|a4|a5|s4
  int n = -1;          // -1: any n
  int a = 0, b = 0, c = 0;
  std::vector<std::string> cones;  // entries are integers or the symbol "n"
  std::string note;
};

// Hard-coded copy of the printed table; the shipped data file must match.
const std::vector<PrintedCell>& printed_section6_cells();
std::string printed_section6_text();

struct GoldenDiff {
  std::string cell;
  std::string printed;
  std::string derived;
};

struct GoldenComparison {
  int cells_compared = 0;
  int matched = 0;
  std::vector<GoldenDiff> mismatches;
  std::vector<std::string> notes;  // typographical discrepancy notes
};

// Diff the derived rows against the printed table over sample n values.
GoldenComparison compare_with_golden();

// The complete rank-2 case list: amalgam cases over d in {2,3,4,6},
// the swap involution, and the dihedral cases.
struct G2Case {
  std::string case_id;  // "(2)a".."(2)d", "(3)", "(4)a".."(4)d"
  int d = 0;            // edge-stabilizer cyclic order (0 for the swap case)
  long long h_order = 1;
  OrbifoldSignature sig;
};
std::vector<G2Case> g2_signatures();

}  // namespace mdc
