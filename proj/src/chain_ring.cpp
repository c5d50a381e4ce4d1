#include "negaz4/chain_ring.hpp"

#include "negaz4/lift_factor.hpp"

#include <stdexcept>

namespace negaz4 {

ChainRingCtx make_ctx(const Z4Poly& f, unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!f.is_monic() || f.degree() < 1 || !is_irreducible_f2(bar_reduce(f)))
    throw std::invalid_argument("f is not a monic basic irreducible polynomial");

  ChainRingCtx ctx;
  ctx.k_ = k;
  ctx.f_ = f;
  ctx.d_ = static_cast<unsigned>(f.degree());
  ctx.nu_ = 2u << k;
  ctx.modulus_ = substitute_neg_x2k(f, k);
  ctx.monic_ = make_monic(ctx.modulus_);

  const Z4Poly power = z4_rem(pow(f, 1u << k), ctx.monic_);
  if (!power.all_even()) throw std::logic_error("f^(2^k) has an odd coefficient modulo f(-x^(2^k))");
  ctx.theta_ = halve(power);
  if (f2_rem(bar_reduce(ctx.theta_), bar_reduce(f)).is_zero())
    throw std::logic_error("halved power of f is not a unit");

  ctx.f_powers_.reserve(ctx.nu_ + 1);
  ctx.f_powers_.push_back(Z4Poly::constant(1));
  for (unsigned i = 1; i <= ctx.nu_; ++i) ctx.f_powers_.push_back(ctx.mul(ctx.f_powers_.back(), f));

  const unsigned dim = ctx.dim();
  Z4Poly col = ctx.reduce(f);
  for (unsigned i = 0; i < dim; ++i) {
    Z4Vector v(dim, 0);
    for (unsigned c = 0; c < dim; ++c) v[c] = col[c];
    ctx.mul_by_f_.push_back(std::move(v));
    col = ctx.reduce(shift(col, 1));
  }
  return ctx;
}

Z4Poly ring_reduce(const ChainRingCtx& ctx, const Z4Poly& a) { return ctx.reduce(a); }

DigitVector f_adic_expand(const ChainRingCtx& ctx, const Z4Poly& a) {
  const Z4Poly target = ctx.reduce(a);
  const F2Poly fbar = bar_reduce(ctx.f());
  const unsigned dim = ctx.dim();

  DigitVector out;
  out.digits.reserve(ctx.nu());
  Z4Poly rest = target;
  for (unsigned i = 0; i < ctx.nu(); ++i) {
    // The digit is the image of rest in the residue field F2[x]/(fbar).
    const Z4Poly digit = Z4Poly::lift(f2_rem(bar_reduce(rest), fbar));
    out.digits.push_back(digit);
    if (i + 1 == ctx.nu()) break;
    const Z4Poly diff = rest - digit;
    Z4Vector rhs(dim, 0);
    for (unsigned c = 0; c < dim; ++c) rhs[c] = diff[c];
    const auto quotient = solve_z4(ctx.mul_by_f(), rhs);
    if (!quotient) throw std::logic_error("remainder is not divisible by f");
    rest = Z4Poly(*quotient);
  }
  if (f_adic_reconstruct(ctx, out) != target) throw std::logic_error("f-adic digits do not reconstruct the input");
  return out;
}

Z4Poly f_adic_reconstruct(const ChainRingCtx& ctx, const DigitVector& digits) {
  Z4Poly acc;
  for (std::size_t i = 0; i < digits.digits.size(); ++i)
    acc += ctx.mul(digits.digits[i], ctx.f_power(static_cast<unsigned>(i)));
  return acc;
}

BigInt ideal_size(const ChainRingCtx& ctx, unsigned l) {
  if (l > ctx.nu()) throw std::out_of_range("ideal exponent exceeds the nilpotency index");
  return pow2(static_cast<unsigned long>(ctx.nu() - l) * ctx.d());
}

CanonModule span(const ChainRingCtx& ctx, const std::vector<RingElementPair>& gens) {
  return span(ctx.monic_modulus(), gens);
}

}  // namespace negaz4
