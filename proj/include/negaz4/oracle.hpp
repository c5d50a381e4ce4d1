#pragma once

// Brute-force cross-checks. brute_force_all_ideals works from first
// principles (principal spans of every element, closed under sums) and never
// consults the case lists in ideal_enum.

#include "negaz4/ideal_enum.hpp"
#include "negaz4/submodule.hpp"

#include <map>
#include <string>
#include <vector>

namespace negaz4 {

struct Report {
  Report() = default;
  explicit Report(std::string n) : name(std::move(n)) {}

  std::string name;
  bool pass = true;
  std::vector<std::string> details;
  std::string summary;  // key numbers, e.g. "135=135"

  void check(bool ok, const std::string& line);
  void note(const std::string& line) { details.push_back(line); }
};

struct IdealLattice {
  std::vector<CanonModule> ideals;  // sorted
  unsigned principal = 0;           // distinct principal ideals
  unsigned join_rounds = 0;         // rounds until no new sum appeared
};

// Every ideal of Q + uQ, Q = Z4[x]/(modulus). Throws
// std::invalid_argument("oracle scale limit") when 2 deg(modulus) > 8.
IdealLattice brute_force_all_ideals(const Z4Poly& modulus);

// Every ideal of Z4[x]/(modulus) alone (no u), as modules of rank
// deg(modulus). Same scale limit: deg(modulus) <= 8.
IdealLattice brute_force_z4_ideals(const Z4Poly& modulus);

// Set equality between the brute-force lattice of x^{2^k n} + 1 and the
// spans of every enumerated CodeSpec, plus case subtotals and (for n = 1)
// the ideal count of Z4[z]/(z^{2^{k+1}} - 1), which must agree.
Report verify_enumeration(unsigned n, unsigned k);

// One row of the 24-code table for length 2 from the earlier literature,
// with generators written in powers of x + 1.
struct ReferenceCode {
  unsigned index;  // 1..24
  std::string label;
  std::vector<RingElementPair> generators;
  unsigned size;
};
std::vector<ReferenceCode> reference_length2_codes();

// Which reference code each enumerated ideal of length 2 equals.
struct CorrespondenceRow {
  IdealCase kase;
  std::optional<unsigned> lambda;
  std::optional<unsigned> t;
  std::map<unsigned, int> digits;  // digit index -> 0/1
  unsigned reference;
};
std::vector<CorrespondenceRow> length2_correspondence();

// Checks the reference sizes, that codes 22 and 24 coincide while the other
// 23 are distinct, that the comparison formula overcounts, and the full
// correspondence table.
Report verify_length2_reference();

struct SelfDualCensus {
  std::vector<CodeSpec> specs;
  std::vector<CanonModule> codes;
};
// Scans the full enumeration; throws std::invalid_argument when the code
// count exceeds 2^20.
SelfDualCensus self_dual_census(unsigned n, unsigned k);

// Brute-force ideal lattice of K + uK for the Galois ring K = Z4[x]/(f)
// against the 2^d + 5 listed ideals and their sizes.
Report verify_galois_ideals(const Z4Poly& f);
// verify_galois_ideals for each factor of y^n - 1 with degree <= 4.
Report verify_cyclic_odd(unsigned n);

}  // namespace negaz4
