#include "gen.hpp"
#include "negaz4/chain_ring.hpp"
#include "negaz4/code_json.hpp"
#include "negaz4/ideal_enum.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace negaz4;

namespace {

BigInt pow2(unsigned e) { return BigInt(1) << e; }

// Size predicted by the case formulas.
BigInt formula_size(const IdealSpec& s, unsigned d, unsigned nu) {
  switch (s.kase) {
    case IdealCase::I: return pow2(nu * d);
    case IdealCase::II: return pow2(d * (nu - *s.lambda));
    case IdealCase::III: return pow2(2 * d * (nu - *s.lambda));
    case IdealCase::IV: return pow2(d * (2 * nu - *s.t));
    case IdealCase::V: return pow2(d * (2 * nu - 2 * *s.lambda - *s.t));
  }
  return 0;
}

BigInt galois_size(const IdealSpec& s, unsigned d) {
  switch (s.kase) {
    case IdealCase::I: return pow2(2 * d * (2 - *s.lambda));
    case IdealCase::II: return pow2(d * (2 - *s.lambda));
    case IdealCase::III: return pow2(2 * d);
    case IdealCase::V: return pow2(3 * d);
    default: return 0;
  }
}

// A factor of y^n - 1 with the requested degree.
Z4Poly factor_of_degree(unsigned d) {
  static const unsigned n_for[] = {0, 1, 3, 7, 5};
  for (const auto& f : factor_yn_minus_1(n_for[d]).factors)
    if (f.degree() == static_cast<int>(d)) return f;
  throw std::logic_error("no factor");
}

std::array<BigInt, 5> tally(const LocalIdealFamily& fam) {
  std::array<BigInt, 5> out{};
  for (const auto& s : fam.all()) out[static_cast<int>(s.kase)] += 1;
  return out;
}

}  // namespace

TEST_SUITE("ideal-enum") {
  TEST_CASE("local counts") {
    CHECK(count_local_ideals(1, 1) == 23);
    CHECK(count_local_ideals(1, 2) == 135);
    CHECK(count_local_ideals(1, 3) == 2519);
    CHECK(count_local_ideals(1, 5) == BigInt("42949672823"));
    CHECK(count_local_ideals(3, 1) == 113);
    CHECK(count_local_ideals(4, 1) == 345);
    for (unsigned d = 1; d <= 8; ++d) {
      CHECK(count_local_ideals(d, 0) == pow2(d) + 5);
      CHECK(count_local_ideals(d, 1) == pow2(2 * d) + 5 * pow2(d) + 9);
    }
    CHECK_THROWS_AS(count_local_ideals(0, 1), std::invalid_argument);
  }

  TEST_CASE("closed forms agree with the sum") {
    for (unsigned d = 2; d <= 12; ++d)
      for (unsigned k = 0; k <= 6; ++k) CHECK(count_local_ideals_closed(d, k) == count_local_ideals(d, k));
    for (unsigned k = 0; k <= 10; ++k) CHECK(count_local_ideals_d1(k) == count_local_ideals(1, k));
    CHECK_THROWS_AS(count_local_ideals_closed(1, 2), std::domain_error);
  }

  TEST_CASE("case subtotals") {
    using A = std::array<BigInt, 5>;
    CHECK(case_subtotals(1, 1) == A{4, 5, 5, 5, 4});
    CHECK(case_subtotals(3, 1) == A{64, 17, 5, 17, 10});
    CHECK(case_subtotals(1, 2) == A{16, 29, 9, 29, 52});
    for (unsigned d = 1; d <= 6; ++d)
      for (unsigned k = 1; k <= 5; ++k) {
        BigInt sum = 0;
        for (const auto& v : case_subtotals(d, k)) sum += v;
        CHECK(sum == count_local_ideals(d, k));
      }
    CHECK(tally(LocalIdealFamily(make_ctx(Z4Poly{3, 1}, 2), 0)) == A{16, 29, 9, 29, 52});
    CHECK(tally(LocalIdealFamily(make_ctx(factor_of_degree(3), 1), 0)) == case_subtotals(3, 1));
    CHECK(tally(LocalIdealFamily(make_ctx(factor_of_degree(2), 2), 0)) == case_subtotals(2, 2));
  }

  TEST_CASE("family sizes match the formula") {
    for (unsigned d = 1; d <= 4; ++d)
      for (unsigned k = 1; k <= 3; ++k) {
        const LocalIdealFamily fam(make_ctx(factor_of_degree(d), k), 0);
        CHECK(fam.count() == count_local_ideals(d, k));
      }
  }

  TEST_CASE("declared sizes equal span cardinalities, exhaustively on small rings") {
    for (const auto& [d, k] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {1, 2}, {2, 1}}) {
      const LocalIdealFamily fam(make_ctx(factor_of_degree(d), k), 0);
      const unsigned nu = 2u << k;
      for (const auto& s : fam.all()) {
        CHECK(mod_card(fam.span_of(s)) == s.size);
        CHECK(s.size == formula_size(s, d, nu));
      }
    }
  }

  TEST_CASE("declared sizes equal span cardinalities, sampled") {
    testgen::Rng rng(51);
    for (const auto& [d, k] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {1, 3}, {2, 2}, {4, 1}, {3, 2}}) {
      const LocalIdealFamily fam(make_ctx(factor_of_degree(d), k), 0);
      const unsigned nu = 2u << k;
      for (int trial = 0; trial < 200; ++trial) {
        const auto s = fam.at(BigInt(rng.below(static_cast<std::uint64_t>(fam.count()))));
        CHECK(mod_card(fam.span_of(s)) == s.size);
        CHECK(s.size == formula_size(s, d, nu));
      }
    }
  }

  TEST_CASE("listed ideals are distinct ideals") {
    for (const auto& [d, k] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {1, 2}, {3, 1}}) {
      const LocalIdealFamily fam(make_ctx(factor_of_degree(d), k), 0);
      std::set<CanonModule> seen;
      for (const auto& s : fam.all()) {
        const auto m = fam.span_of(s);
        CHECK(is_ideal(fam.chain().monic_modulus(), m));
        seen.insert(m);
      }
      CHECK(seen.size() == fam.count());
    }
  }

  TEST_CASE("generators rebuilt from their parameters in powers of x - 1") {
    for (unsigned k : {1u, 2u}) {
      const auto ctx = make_ctx(Z4Poly{3, 1}, k);
      const Z4Poly m = ctx.monic_modulus();
      const Z4Poly f{3, 1};
      const LocalIdealFamily fam(ctx, 0);
      for (const auto& s : fam.all()) {
        Z4Poly b;
        for (const auto& [i, digit] : s.b_digits) b = b + digit * pow(f, i);
        const unsigned lam = s.lambda.value_or(0), t = s.t.value_or(0);
        std::vector<RingElementPair> gens;
        switch (s.kase) {
          case IdealCase::I: gens = {{f * b, Z4Poly{1}}}; break;
          case IdealCase::II: gens = {{pow(f, lam + 1) * b, pow(f, lam)}}; break;
          case IdealCase::III: gens = {{pow(f, lam), {}}}; break;
          case IdealCase::IV: gens = {{f * b, Z4Poly{1}}, {pow(f, t), {}}}; break;
          case IdealCase::V: gens = {{pow(f, lam + 1) * b, pow(f, lam)}, {pow(f, lam + t), {}}}; break;
        }
        CHECK(span(m, gens) == fam.span_of(s));
      }
    }
  }

  TEST_CASE("Galois families") {
    for (unsigned d = 1; d <= 4; ++d) {
      const auto fam = LocalIdealFamily::galois(factor_of_degree(d), 0);
      CHECK(fam.count() == pow2(d) + 5);
      std::set<CanonModule> seen;
      for (const auto& s : fam.all()) {
        CHECK(s.size == galois_size(s, d));
        const auto m = fam.span_of(s);
        CHECK(mod_card(m) == s.size);
        seen.insert(m);
      }
      CHECK(seen.size() == fam.count());
    }
  }

  TEST_CASE("code counts") {
    CHECK(count_negacyclic(1, 1) == 23);
    CHECK(count_negacyclic(3, 1) == 1035);
    CHECK(count_negacyclic(7, 1) == 293687);
    CHECK(count_negacyclic(1, 3) == 2519);
    CHECK(count_negacyclic(21, 1) == BigInt("258775875646875"));
    CHECK(enumerate_negacyclic(1, 1).size() == 23);
    CHECK(enumerate_negacyclic(1, 2).size() == 135);
    CHECK(enumerate_negacyclic(7, 1).size() == 293687);
    CHECK(enumerate_cyclic_odd(1).size() == 7);
    CHECK(enumerate_cyclic_odd(7).size() == 1183);
    CHECK(count_cyclic_odd(7) == 1183);
    CHECK(count_cyclic_odd(7) != 343);
    CHECK_THROWS_AS(enumerate_cyclic_odd(4), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_negacyclic(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_negacyclic(1, 0), std::invalid_argument);
  }

  TEST_CASE("limit yields a prefix") {
    const auto full = enumerate_negacyclic(7, 1);
    const auto cut = enumerate_negacyclic(7, 1, BigInt(100));
    CHECK(cut.size() == 100);
    std::size_t i = 0;
    for (const auto& spec : cut) CHECK(spec == full.at(BigInt(i++)));
    CHECK(i == 100);
    CHECK_THROWS_AS(cut.at(BigInt(100)), std::out_of_range);
  }

  TEST_CASE("last factor varies fastest") {
    const auto s = enumerate_negacyclic(3, 1);
    const auto a = s.at(BigInt(0)), b = s.at(BigInt(1));
    CHECK(a.choice[0] == b.choice[0]);
    CHECK_FALSE(a.choice[1] == b.choice[1]);
  }

  TEST_CASE("building members from parameters") {
    const LocalIdealFamily fam(make_ctx(Z4Poly{3, 1}, 1), 0);
    const auto s = fam.make(IdealCase::II, 1, std::nullopt, {{1, Z4Poly{1}}});
    CHECK(s.size == 8);
    CHECK(fam.make(IdealCase::III, 4, std::nullopt, {}).size == 1);
    CHECK_THROWS_AS(fam.make(IdealCase::III, 5, std::nullopt, {}), std::invalid_argument);
    CHECK_THROWS_AS(fam.make(IdealCase::II, 1, std::nullopt, {}), std::invalid_argument);
    CHECK_THROWS_AS(fam.make(IdealCase::II, 1, std::nullopt, {{0, Z4Poly{1}}}), std::invalid_argument);
    CHECK_THROWS_AS(fam.make(IdealCase::II, 1, std::nullopt, {{1, Z4Poly{2}}}), std::invalid_argument);
    CHECK_THROWS_AS(fam.make(IdealCase::V, 3, 1, {}), std::invalid_argument);
    CHECK(parse_ideal_case("IV") == IdealCase::IV);
    CHECK(to_string(IdealCase::V) == "V");
    CHECK_THROWS_AS(parse_ideal_case("VI"), std::invalid_argument);

    const auto g = LocalIdealFamily::galois(Z4Poly{3, 1}, 0);
    CHECK_THROWS_AS(g.make(IdealCase::III, std::nullopt, std::nullopt, {{0, Z4Poly{}}}), std::invalid_argument);
  }

  TEST_CASE("comparison formulas") {
    CHECK(claimed_length2k_count(1) == 24);
    CHECK(claimed_length2k_count(2) == 152);
    CHECK(claimed_length2k_count(1) > count_local_ideals(1, 1));
    CHECK(claimed_length2k_count(2) > count_local_ideals(1, 2));
    CHECK(galois_ring_cyclic_count(1, 2) == 23);
    CHECK(galois_ring_cyclic_count(3, 2) == 113);
    for (unsigned m = 1; m <= 5; ++m)
      for (unsigned k = 1; k <= 5; ++k) CHECK(galois_ring_cyclic_count(m, k) == count_local_ideals(m, k - 1));
  }

  TEST_CASE("JSON roundtrip") {
    testgen::Rng rng(52);
    for (const auto& [n, k] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {3, 1}, {7, 1}, {7, 0}}) {
      const auto stream = k ? enumerate_negacyclic(n, k) : enumerate_cyclic_odd(n);
      for (int trial = 0; trial < 30; ++trial) {
        const auto spec = stream.at(BigInt(rng.below(static_cast<std::uint64_t>(stream.size()))));
        const auto text = to_json(spec, stream).dump();
        const auto parsed = parse_code_spec(text);
        CHECK(parsed.spec == spec);
        CHECK(to_json(parsed.spec, parsed.stream).dump() == text);
      }
    }
    const auto s = enumerate_negacyclic(1, 1);
    const auto j = to_json(s.at(BigInt(0)), s);
    CHECK(j["n"] == 1);
    CHECK(j["choice"][0]["j"] == 1);
    CHECK(j["total_size"].is_string());
    CHECK_THROWS_AS(parse_code_spec(std::string("{not json")), std::invalid_argument);
    auto bad = j;
    bad["total_size"] = "3";
    CHECK_THROWS_AS(parse_code_spec(bad), std::invalid_argument);
  }
}
