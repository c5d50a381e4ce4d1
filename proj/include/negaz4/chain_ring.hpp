#pragma once

// The local ring R = Z4[x]/(f(-x^{2^k})) attached to one basic irreducible
// factor f of y^n - 1. R is a chain ring: its maximal ideal is generated by
// f(x), f(x)^{2^k} = 2*theta for a unit theta, and f has nilpotency index
// nu = 2^{k+1}.

#include "negaz4/bigint.hpp"
#include "negaz4/submodule.hpp"
#include "negaz4/z4_poly.hpp"

#include <vector>

namespace negaz4 {

class ChainRingCtx {
 public:
  unsigned k() const noexcept { return k_; }
  const Z4Poly& f() const noexcept { return f_; }
  unsigned d() const noexcept { return d_; }
  // f(-x^{2^k}) exactly as substituted; its leading coefficient is (-1)^d.
  const Z4Poly& modulus() const noexcept { return modulus_; }
  const Z4Poly& monic_modulus() const noexcept { return monic_; }
  unsigned nu() const noexcept { return nu_; }
  // Degree of the modulus, 2^k * d.
  unsigned dim() const noexcept { return d_ << k_; }
  const Z4Poly& theta_unit() const noexcept { return theta_; }
  // f^i reduced in R for i = 0..nu.
  const Z4Poly& f_power(unsigned i) const { return f_powers_.at(i); }

  Z4Poly reduce(const Z4Poly& a) const { return z4_rem(a, monic_); }
  Z4Poly mul(const Z4Poly& a, const Z4Poly& b) const { return reduce(a * b); }

  // Matrix of multiplication by f on coefficient vectors, by columns.
  const std::vector<Z4Vector>& mul_by_f() const noexcept { return mul_by_f_; }

  // log2 |R| = 2 * 2^k * d.
  unsigned log2_size() const noexcept { return 2 * dim(); }

  friend ChainRingCtx make_ctx(const Z4Poly& f, unsigned k);

 private:
  unsigned k_ = 0;
  Z4Poly f_;
  unsigned d_ = 0;
  Z4Poly modulus_;
  Z4Poly monic_;
  unsigned nu_ = 0;
  Z4Poly theta_;
  std::vector<Z4Poly> f_powers_;
  std::vector<Z4Vector> mul_by_f_;  // column i = f * x^i in R
};

// Throws std::invalid_argument for a non-basic-irreducible f and
// std::logic_error if f^{2^k} does not reduce to an even polynomial.
ChainRingCtx make_ctx(const Z4Poly& f, unsigned k);

Z4Poly ring_reduce(const ChainRingCtx& ctx, const Z4Poly& a);

// Digits b_0..b_{nu-1}: polynomials of degree < d with 0/1 coefficients.
struct DigitVector {
  std::vector<Z4Poly> digits;

  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

DigitVector f_adic_expand(const ChainRingCtx& ctx, const Z4Poly& a);
Z4Poly f_adic_reconstruct(const ChainRingCtx& ctx, const DigitVector& digits);

// |<f^l>| = 2^{(nu - l) d} for 0 <= l <= nu.
BigInt ideal_size(const ChainRingCtx& ctx, unsigned l);

CanonModule span(const ChainRingCtx& ctx, const std::vector<RingElementPair>& gens);

}  // namespace negaz4
