#pragma once

// Gray map R^N -> Z4^{2N}, a + ub -> (b, a + b), and Lee weights.

#include "negaz4/submodule.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace negaz4 {

// One coordinate a + ub of R = Z4 + uZ4.
struct RElem {
  std::uint8_t a = 0;
  std::uint8_t b = 0;

  friend bool operator==(const RElem&, const RElem&) = default;
};

using GrayVector = Z4Vector;

// (b_0..b_{N-1}, a_0+b_0..a_{N-1}+b_{N-1}).
GrayVector gray_map(const std::vector<RElem>& v);
// Same map on the slot layout of submodule.hpp (a-part then b-part).
GrayVector gray_map_slots(const Z4Vector& slots);

unsigned lee_weight_scalar(std::uint8_t c);
unsigned lee_weight_R(RElem x);
unsigned lee_weight_vec(const std::vector<RElem>& v);
unsigned lee_weight_z4(const Z4Vector& v);

using WeightEnumerator = std::map<unsigned, std::uint64_t>;

// Lee weight distribution over all codewords. Throws std::invalid_argument
// when the code has more than 2^20 words.
WeightEnumerator lee_weight_enumerator(const CanonModule& code);

}  // namespace negaz4
