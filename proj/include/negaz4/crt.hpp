#pragma once

// Orthogonal idempotents splitting the ambient ring into local components.
//
// Negacyclic mode (k >= 1): the ambient ring is Z4[x]/(x^{2^k n} + 1) and the
// j-th component is Z4[x]/(f_j(-x^{2^k})). Cyclic mode (k = 0): the ambient
// ring is Z4[x]/(x^n - 1) and the components are the Galois rings Z4[x]/(f_j).

#include "negaz4/lift_factor.hpp"
#include "negaz4/ring_element.hpp"
#include "negaz4/submodule.hpp"

#include <vector>

namespace negaz4 {

struct AmbientCtx {
  unsigned n = 1;
  unsigned k = 0;
  Z4Poly modulus;  // monic in both modes
  FactorSet factors;
  std::vector<Z4Poly> idempotents;  // one per factor, reduced mod modulus

  bool cyclic() const noexcept { return k == 0; }
  // Length of the code, deg(modulus).
  unsigned length() const noexcept { return n << k; }
};

// Throws std::invalid_argument for even n, std::logic_error if any of the
// idempotent identities fails.
AmbientCtx make_ambient(unsigned n, unsigned k);

// Modulus of the j-th local ring: f_j(-x^{2^k}) for k >= 1, f_j for k = 0.
// For k >= 1 its leading coefficient is (-1)^{d_j}.
Z4Poly local_modulus(const AmbientCtx& ctx, std::size_t j);

// Lifts local generators of each C_j to ambient generators theta_j * g.
// local_gens has one entry per factor.
std::vector<RingElementPair> assemble_code(const AmbientCtx& ctx,
                                           const std::vector<std::vector<RingElementPair>>& local_gens);

CanonModule span(const AmbientCtx& ctx, const std::vector<RingElementPair>& gens);

// alpha(x) -> alpha(-x), carrying a cyclic code of odd length n to a
// negacyclic one. ctx must be in cyclic mode.
std::vector<RingElementPair> rho_transform(const AmbientCtx& ctx, const std::vector<RingElementPair>& gens);

// Modulus x^{2^k n} + 1 (k >= 1) or x^n - 1 (k = 0).
Z4Poly ambient_modulus(unsigned n, unsigned k);

}  // namespace negaz4
