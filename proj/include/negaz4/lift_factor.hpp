#pragma once

// Factorization of y^n - 1 (n odd) into pairwise coprime monic basic
// irreducible polynomials over Z4.

#include "negaz4/z4_poly.hpp"

#include <vector>

namespace negaz4 {

using Coset = std::vector<unsigned>;

// Orbits of i -> 2i mod n, each sorted by orbit order starting at its
// smallest element; cosets ordered by their smallest element.
std::vector<Coset> cyclotomic_cosets(unsigned n);

// Multiplicative order of 2 modulo odd n (1 for n = 1).
unsigned order_of_two(unsigned n);

// Smallest (in mask order) irreducible polynomial of the given degree over F2.
F2Poly find_irreducible_f2(unsigned degree);
bool is_irreducible_f2(const F2Poly& p);

// Irreducible factors of y^n - 1 over F2, one per cyclotomic coset, in coset
// order.
std::vector<F2Poly> factor_mod2(unsigned n);

// The unique monic lift of g dividing y^n - 1 over Z4 (one Graeffe step).
Z4Poly hensel_lift(const F2Poly& g, unsigned n);

struct FactorSet {
  unsigned n = 1;
  std::vector<Z4Poly> factors;   // f_1 = y - 1, then by degree, then coefficient order
  std::vector<unsigned> degrees;

  std::size_t size() const noexcept { return factors.size(); }
};

FactorSet factor_yn_minus_1(unsigned n);

// y^n - 1 as a Z4Poly.
Z4Poly yn_minus_1(unsigned n);

}  // namespace negaz4
