#pragma once

#include "negaz4/z4_poly.hpp"

namespace negaz4 {

// a(x) + u*b(x) in Q + uQ for a quotient Q = Z4[x]/(modulus), u^2 = 0.
struct RingElementPair {
  Z4Poly a;
  Z4Poly b;

  friend bool operator==(const RingElementPair&, const RingElementPair&) = default;
};

// Reduction and product in Q + uQ. The modulus needs a unit leading
// coefficient.
RingElementPair reduce_pair(const RingElementPair& p, const Z4Poly& modulus);
RingElementPair mul_pair(const RingElementPair& p, const RingElementPair& q, const Z4Poly& modulus);

}  // namespace negaz4
