#include "gen.hpp"
#include "negaz4/chain_ring.hpp"
#include "negaz4/lift_factor.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace negaz4;

namespace {

// Digits for d = 1 are 0 or 1.
DigitVector digits_from_mask(unsigned mask, unsigned nu) {
  DigitVector dv;
  for (unsigned i = 0; i < nu; ++i) dv.digits.push_back((mask >> i) & 1 ? Z4Poly{1} : Z4Poly{});
  return dv;
}

// Every element of Z4[x]/(deg m) as a coefficient vector.
Z4Poly element(std::uint64_t code, unsigned dim) {
  std::vector<std::uint8_t> c(dim);
  for (unsigned i = 0; i < dim; ++i, code >>= 2) c[i] = code & 3;
  return Z4Poly(std::move(c));
}

}  // namespace

TEST_SUITE("chain-ring") {
  TEST_CASE("context for x - 1") {
    const auto ctx = make_ctx(Z4Poly{3, 1}, 1);
    CHECK(ctx.modulus() == Z4Poly{3, 0, 3});
    CHECK(ctx.monic_modulus() == Z4Poly{1, 0, 1});
    CHECK(ctx.nu() == 4);
    CHECK(ctx.dim() == 2);
    CHECK(ctx.log2_size() == 4);
    // (x - 1)^2 = x^2 - 2x + 1 leaves 2x after dividing by x^2 + 1.
    const Z4Poly sq = testgen::naive_rem(pow(Z4Poly{3, 1}, 2), Z4Poly{1, 0, 1});
    CHECK(sq == Z4Poly{0, 2});
    CHECK(ctx.theta_unit() == halve(sq));
    CHECK(ctx.theta_unit() == Z4Poly{0, 1});

    const auto ctx3 = make_ctx(Z4Poly{3, 1, 2, 1}, 2);
    CHECK(ctx3.nu() == 8);
    CHECK(ctx3.dim() == 12);
    CHECK(ctx3.log2_size() == 24);
  }

  TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(make_ctx(Z4Poly{1, 3}, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_ctx(Z4Poly{1, 0, 1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_ctx(Z4Poly{3, 1}, 0), std::invalid_argument);
    // Basic irreducible but not a divisor of y^n - 1: the halved power is
    // not a unit.
    CHECK_THROWS_AS(make_ctx(Z4Poly{1, 1}, 1), std::logic_error);
    CHECK_THROWS_AS(make_ctx(Z4Poly{1, 3, 1}, 1), std::logic_error);
  }

  TEST_CASE("ring reduction") {
    const auto ctx = make_ctx(Z4Poly{3, 1}, 1);
    CHECK(ring_reduce(ctx, ctx.modulus()).is_zero());
    CHECK(ring_reduce(ctx, pow(Z4Poly{3, 1}, 4)).is_zero());
    const auto ctx7 = make_ctx(Z4Poly{3, 1, 2, 1}, 1);
    CHECK(ring_reduce(ctx7, ctx7.modulus()).is_zero());
    CHECK(ring_reduce(ctx7, pow(ctx7.f(), ctx7.nu())).is_zero());
    CHECK_FALSE(ring_reduce(ctx7, pow(ctx7.f(), ctx7.nu() - 1)).is_zero());
    const Z4Poly top = Z4Poly::monomial(ctx7.dim());
    CHECK(ring_reduce(ctx7, top) == testgen::naive_rem(top, ctx7.monic_modulus()));
    testgen::Rng rng(31);
    for (int i = 0; i < 300; ++i) {
      const Z4Poly a = rng.poly(rng.below(40));
      CHECK(ring_reduce(ctx7, a) == testgen::naive_rem(a, ctx7.monic_modulus()));
    }
  }

  TEST_CASE("f-adic expansion examples") {
    const auto ctx = make_ctx(Z4Poly{3, 1}, 1);
    CHECK(f_adic_expand(ctx, Z4Poly{}) == digits_from_mask(0, 4));
    CHECK(f_adic_expand(ctx, Z4Poly{3, 1}) == digits_from_mask(0b0010, 4));

    // Exhaustive search for the expansion of 2.
    std::vector<unsigned> hits;
    for (unsigned mask = 0; mask < 16; ++mask) {
      Z4Poly sum;
      for (unsigned i = 0; i < 4; ++i)
        if ((mask >> i) & 1) sum = sum + ctx.f_power(i);
      if (ctx.reduce(sum) == Z4Poly{2}) hits.push_back(mask);
    }
    REQUIRE(hits.size() == 1);
    CHECK(f_adic_expand(ctx, Z4Poly{2}) == digits_from_mask(hits[0], 4));
    CHECK(f_adic_reconstruct(ctx, f_adic_expand(ctx, Z4Poly{2})) == Z4Poly{2});
  }

  TEST_CASE("f-adic expansion is a bijection on small rings") {
    const std::vector<std::pair<Z4Poly, unsigned>> cases{
        {Z4Poly{3, 1}, 1}, {Z4Poly{3, 1}, 2}, {Z4Poly{1, 1, 1}, 1}};
    for (const auto& [f, k] : cases) {
      const auto ctx = make_ctx(f, k);
      std::set<std::vector<Z4Poly>> seen;
      const std::uint64_t total = std::uint64_t{1} << (2 * ctx.dim());
      for (std::uint64_t code = 0; code < total; ++code) {
        const Z4Poly a = element(code, ctx.dim());
        const auto dv = f_adic_expand(ctx, a);
        REQUIRE(dv.digits.size() == ctx.nu());
        for (const auto& b : dv.digits) {
          CHECK(b.degree() < static_cast<int>(ctx.d()));
          for (auto c : b.coeffs()) CHECK(c <= 1);
        }
        CHECK(f_adic_reconstruct(ctx, dv) == a);
        seen.insert(dv.digits);
      }
      CHECK(seen.size() == total);
    }
  }

  TEST_CASE("f-adic roundtrip on random elements of larger rings") {
    testgen::Rng rng(32);
    for (const auto& [n, k] : std::vector<std::pair<unsigned, unsigned>>{{7, 1}, {7, 2}, {15, 1}, {5, 3}}) {
      for (const auto& f : factor_yn_minus_1(n).factors) {
        const auto ctx = make_ctx(f, k);
        for (int i = 0; i < 40; ++i) {
          const Z4Poly a = rng.poly(ctx.dim());
          CHECK(f_adic_reconstruct(ctx, f_adic_expand(ctx, a)) == a);
        }
      }
    }
  }

  TEST_CASE("halved power of f is an even-free unit for every factor") {
    for (unsigned n = 1; n <= 31; n += 2) {
      for (const auto& f : factor_yn_minus_1(n).factors) {
        for (unsigned k = 1; k <= 3; ++k) {
          CAPTURE(n);
          CAPTURE(k);
          const Z4Poly monic = make_monic(substitute_neg_x2k(f, k));
          const Z4Poly power = testgen::naive_rem(pow(f, 1u << k), monic);
          REQUIRE(power.all_even());
          const Z4Poly theta = halve(power);
          // R / 2R = F2[x]/(fbar^(2^k)), so theta is a unit iff fbar does not divide it.
          CHECK(f2_gcd(bar_reduce(theta), bar_reduce(f)).is_one());
          const auto ctx = make_ctx(f, k);
          CHECK(ctx.theta_unit() == theta);
        }
      }
    }
  }

  TEST_CASE("ideal sizes") {
    const auto c11 = make_ctx(Z4Poly{3, 1}, 1);
    CHECK(ideal_size(c11, 0) == 16);
    CHECK(ideal_size(c11, c11.nu()) == 1);
    CHECK_THROWS_AS(ideal_size(c11, c11.nu() + 1), std::out_of_range);
    const auto c31 = make_ctx(Z4Poly{3, 1, 2, 1}, 1);
    CHECK(ideal_size(c31, 2) == 64);
    for (unsigned l = 0; l <= c31.nu(); ++l)
      CHECK(mod_card(span(c31, {{c31.f_power(l), {}}})) == ideal_size(c31, l) * ideal_size(c31, l));
  }
}
