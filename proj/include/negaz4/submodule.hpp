#pragma once

// Canonical Z4-submodules of Q + uQ, Q = Z4[x]/(modulus).
//
// An element a(x) + u*b(x) is laid out as 2m slots over Z/4 (m = deg of the
// modulus): slots [0, m) hold the coefficients of a, slots [m, 2m) those of b.
// Every module is stored as its Howell form, so set equality is row equality.

#include "negaz4/bigint.hpp"
#include "negaz4/howell.hpp"
#include "negaz4/ring_element.hpp"

#include <compare>
#include <vector>

namespace negaz4 {

struct CanonModule {
  std::size_t ambient_rank = 0;
  std::vector<Z4Vector> rows;

  friend bool operator==(const CanonModule&, const CanonModule&) = default;
  friend auto operator<=>(const CanonModule&, const CanonModule&) = default;
};

Z4Vector to_slots(const RingElementPair& p, std::size_t m);
RingElementPair from_slots(const Z4Vector& v);

// Smallest ideal of Q + uQ containing gens.
CanonModule span(const Z4Poly& modulus, const std::vector<RingElementPair>& gens);

CanonModule zero_module(std::size_t ambient_rank);
CanonModule full_module(std::size_t ambient_rank);
CanonModule module_sum(const CanonModule& a, const CanonModule& b);

// All three throw std::invalid_argument on a rank mismatch.
bool mod_equal(const CanonModule& a, const CanonModule& b);
bool mod_member(const CanonModule& a, const Z4Vector& v);
bool mod_subset(const CanonModule& a, const CanonModule& b);

BigInt mod_card(const CanonModule& a);
// log2 of the cardinality.
unsigned mod_log2_card(const CanonModule& a);

// Euclidean dual inside (Z4 + uZ4)^N, N = ambient_rank / 2.
CanonModule dual(const CanonModule& a);

// Closure under multiplication by x and by u in Q + uQ.
bool is_ideal(const Z4Poly& modulus, const CanonModule& a);

}  // namespace negaz4
