#include "negaz4/crt.hpp"

#include <stdexcept>

namespace negaz4 {

Z4Poly ambient_modulus(unsigned n, unsigned k) {
  if (k == 0) return yn_minus_1(n);
  return Z4Poly::monomial(static_cast<std::size_t>(n) << k) + Z4Poly::constant(1);
}

AmbientCtx make_ambient(unsigned n, unsigned k) {
  if (n % 2 == 0) throw std::invalid_argument("n must be odd");
  AmbientCtx ctx;
  ctx.n = n;
  ctx.k = k;
  ctx.modulus = ambient_modulus(n, k);
  ctx.factors = factor_yn_minus_1(n);

  const Z4Poly whole = yn_minus_1(n);
  Z4Poly product = Z4Poly::constant(1);
  for (const Z4Poly& f : ctx.factors.factors) {
    const auto [cofactor, rest] = z4_divrem(whole, f);
    if (!rest.is_zero()) throw std::logic_error("factor does not divide y^n - 1");
    const auto [a, b] = bezout_coprime_z4(cofactor, f);
    Z4Poly e;
    if (k == 0) {
      e = z4_rem(a * cofactor, ctx.modulus);
    } else {
      e = z4_rem(substitute_neg_x2k(a, k) * substitute_neg_x2k(cofactor, k), ctx.modulus);
      product = product * substitute_neg_x2k(f, k);
    }
    ctx.idempotents.push_back(std::move(e));
  }

  if (k > 0 && -product != ctx.modulus) throw std::logic_error("local moduli do not multiply to the ambient modulus");
  Z4Poly sum;
  for (std::size_t i = 0; i < ctx.idempotents.size(); ++i) {
    const Z4Poly& ei = ctx.idempotents[i];
    sum += ei;
    if (z4_rem(ei * ei, ctx.modulus) != ei) throw std::logic_error("idempotent is not idempotent");
    for (std::size_t j = i + 1; j < ctx.idempotents.size(); ++j)
      if (!z4_rem(ei * ctx.idempotents[j], ctx.modulus).is_zero())
        throw std::logic_error("idempotents are not orthogonal");
  }
  if (z4_rem(sum, ctx.modulus) != Z4Poly::constant(1)) throw std::logic_error("idempotents do not sum to 1");
  return ctx;
}

Z4Poly local_modulus(const AmbientCtx& ctx, std::size_t j) {
  const Z4Poly& f = ctx.factors.factors.at(j);
  return ctx.k == 0 ? f : substitute_neg_x2k(f, ctx.k);
}

std::vector<RingElementPair> assemble_code(const AmbientCtx& ctx,
                                           const std::vector<std::vector<RingElementPair>>& local_gens) {
  if (local_gens.size() != ctx.idempotents.size()) throw std::invalid_argument("one generator list per factor expected");
  std::vector<RingElementPair> out;
  for (std::size_t j = 0; j < local_gens.size(); ++j) {
    const Z4Poly& e = ctx.idempotents[j];
    for (const RingElementPair& g : local_gens[j]) {
      RingElementPair lifted{z4_rem(e * g.a, ctx.modulus), z4_rem(e * g.b, ctx.modulus)};
      if (!lifted.a.is_zero() || !lifted.b.is_zero()) out.push_back(std::move(lifted));
    }
  }
  return out;
}

CanonModule span(const AmbientCtx& ctx, const std::vector<RingElementPair>& gens) {
  if (gens.empty()) return zero_module(2 * ctx.length());
  return span(ctx.modulus, gens);
}

namespace {

Z4Poly negate_odd(const Z4Poly& p) {
  std::vector<std::uint8_t> c = p.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = (4 - c[i]) & 3;
  return Z4Poly(std::move(c));
}

}  // namespace

std::vector<RingElementPair> rho_transform(const AmbientCtx& ctx, const std::vector<RingElementPair>& gens) {
  if (!ctx.cyclic()) throw std::invalid_argument("rho_transform needs a cyclic ambient");
  const Z4Poly target = Z4Poly::monomial(ctx.n) + Z4Poly::constant(1);
  std::vector<RingElementPair> out;
  out.reserve(gens.size());
  for (const RingElementPair& g : gens)
    out.push_back({z4_rem(negate_odd(g.a), target), z4_rem(negate_odd(g.b), target)});
  return out;
}

}  // namespace negaz4
