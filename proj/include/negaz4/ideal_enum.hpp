#pragma once

// Enumeration and counting of ideals of the local rings R_j + uR_j and of the
// codes they assemble into.
//
// Negacyclic local ring (k >= 1): R_j = Z4[x]/(f_j(-x^{2^k})) is a chain ring
// with maximal ideal (f_j) of nilpotency index nu = 2^{k+1}. Its ideals fall
// into five families:
//   I    <f b + u>
//   II   <f^{l+1} b + u f^l>,          1 <= l <= nu-1
//   III  <f^l>,                        0 <= l <= nu
//   IV   <f b + u, f^t>,               1 <= t <= nu-1
//   V    <f^{l+1} b + u f^l, f^{l+t}>, 1 <= l <= nu-2, 1 <= t <= nu-l-1
// where b = sum b_i f^i over a family-specific digit range, each b_i a
// 0/1-polynomial of degree < d. Boundary members (empty digit range) are the
// single-generator forms <u f^{nu-1}>, <u, f> and <u f^l, f^{l+1}>.
//
// Cyclic local ring (k = 0, odd length): K_j = Z4[x]/(f_j) is a Galois ring
// and K_j + uK_j has 2^d + 5 ideals, stored with
//   I    <u^i>          lambda = i in {0,1,2}
//   II   <2 u^s>        lambda = s in {0,1}
//   III  <u + 2h>       h = digit 0, nonzero
//   V    <u, 2>

#include "negaz4/bigint.hpp"
#include "negaz4/chain_ring.hpp"
#include "negaz4/crt.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace negaz4 {

enum class IdealCase { I, II, III, IV, V };

std::string to_string(IdealCase c);
IdealCase parse_ideal_case(const std::string& s);

struct IdealSpec {
  std::size_t j = 0;  // factor index, 0-based
  IdealCase kase = IdealCase::III;
  std::optional<unsigned> lambda;
  std::optional<unsigned> t;
  std::map<unsigned, Z4Poly> b_digits;
  std::vector<RingElementPair> generators;  // reduced in the local ring
  BigInt size;

  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;
};

// All ideals of one local ring, in a fixed order with random access.
class LocalIdealFamily {
 public:
  // Negacyclic family for the chain ring ctx.
  LocalIdealFamily(ChainRingCtx ctx, std::size_t j);
  // Cyclic family over the Galois ring Z4[x]/(f).
  static LocalIdealFamily galois(const Z4Poly& f, std::size_t j);

  bool cyclic() const noexcept { return !ctx_.has_value(); }
  std::size_t j() const noexcept { return j_; }
  unsigned d() const noexcept { return d_; }
  const Z4Poly& modulus() const noexcept { return modulus_; }
  const ChainRingCtx& chain() const { return ctx_.value(); }

  const BigInt& count() const noexcept { return count_; }
  IdealSpec at(const BigInt& index) const;
  // Materializes every member (count() must be small).
  std::vector<IdealSpec> all() const;

  // Builds one member from its parameters, validating ranges and digits.
  // Throws std::invalid_argument when the parameters name no member.
  IdealSpec make(IdealCase kase, std::optional<unsigned> lambda, std::optional<unsigned> t,
                 const std::map<unsigned, Z4Poly>& digits) const;

  CanonModule span_of(const IdealSpec& spec) const;

 private:
  struct Block {
    IdealCase kase;
    std::optional<unsigned> lambda;
    std::optional<unsigned> t;
    unsigned lo = 0;   // first digit index
    unsigned len = 0;  // number of digits
    bool skip_zero = false;
    BigInt count;
  };

  LocalIdealFamily() = default;
  void add_block(IdealCase kase, std::optional<unsigned> lambda, std::optional<unsigned> t, int lo, int hi,
                 bool skip_zero = false);
  const Block* find_block(IdealCase kase, std::optional<unsigned> lambda, std::optional<unsigned> t) const;
  IdealSpec build(const Block& block, std::map<unsigned, Z4Poly> digits) const;

  std::optional<ChainRingCtx> ctx_;
  std::size_t j_ = 0;
  unsigned d_ = 0;
  Z4Poly modulus_;
  std::vector<Block> blocks_;
  BigInt count_;
};

struct CodeSpec {
  unsigned n = 1;
  unsigned k = 0;
  std::vector<IdealSpec> choice;
  BigInt total_size;

  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

// Cartesian product of the local families, last factor varying fastest.
class CodeSpecStream {
 public:
  CodeSpecStream(AmbientCtx ambient, std::vector<LocalIdealFamily> families, std::optional<BigInt> limit = {});

  const AmbientCtx& ambient() const noexcept { return ambient_; }
  const std::vector<LocalIdealFamily>& families() const noexcept { return families_; }
  // Number of CodeSpecs the stream yields (after the limit).
  const BigInt& size() const noexcept { return size_; }
  CodeSpec at(const BigInt& index) const;

  class iterator {
   public:
    using value_type = CodeSpec;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const CodeSpecStream* s, BigInt i) : s_(s), i_(std::move(i)) {}
    CodeSpec operator*() const { return s_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    const CodeSpecStream* s_ = nullptr;
    BigInt i_;
  };
  iterator begin() const { return {this, BigInt(0)}; }
  iterator end() const { return {this, size_}; }

  // Ambient generators of a CodeSpec and their canonical span.
  std::vector<RingElementPair> generators(const CodeSpec& spec) const;
  CanonModule span_of(const CodeSpec& spec) const;

 private:
  AmbientCtx ambient_;
  std::vector<LocalIdealFamily> families_;
  std::vector<std::vector<IdealSpec>> cache_;  // filled for small families
  BigInt size_;
};

std::vector<LocalIdealFamily> negacyclic_families(const AmbientCtx& ambient);
std::vector<LocalIdealFamily> cyclic_families(const AmbientCtx& ambient);

CodeSpecStream enumerate_negacyclic(unsigned n, unsigned k, std::optional<BigInt> limit = {});
// Throws std::invalid_argument for even n.
CodeSpecStream enumerate_cyclic_odd(unsigned n, std::optional<BigInt> limit = {});

// Number of ideals of R + uR for a chain ring R with residue field of 2^d
// elements and nilpotency index 2^{k+1}: sum_{i=0}^{2^k} (1+4i) 2^{(2^k-i)d}.
// k = 0 gives the Galois-ring count 2^d + 5.
BigInt count_local_ideals(unsigned d, unsigned k);
// Rational closed form, valid for d >= 2 (throws std::domain_error for d = 1).
BigInt count_local_ideals_closed(unsigned d, unsigned k);
// d = 1: 10 * 2^{2^k} - 2^{k+2} - 9.
BigInt count_local_ideals_d1(unsigned k);
// Family sizes of the five negacyclic cases, from the case formulas.
std::array<BigInt, 5> case_subtotals(unsigned d, unsigned k);

BigInt count_negacyclic(unsigned n, unsigned k);
BigInt count_cyclic_odd(unsigned n);

// The count claimed for Z4+uZ4 negacyclic codes of length 2^k in earlier
// literature: 11*2^{2^k} + 2^{2^{k-1}-1}(5*2^k - 12) - (4^k + 5*2^k + 4).
BigInt claimed_length2k_count(unsigned k);
// Ideal count of GR(4,m)[z]/(z^{2^k} - 1) from the Galois-ring literature,
// evaluated over Q. Equals count_local_ideals(m, k - 1).
BigInt galois_ring_cyclic_count(unsigned m, unsigned k);

}  // namespace negaz4
