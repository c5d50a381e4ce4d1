#include "gen.hpp"
#include "negaz4/crt.hpp"
#include "negaz4/howell.hpp"
#include "negaz4/ideal_enum.hpp"
#include "negaz4/submodule.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace negaz4;

namespace {

// Every vector of (Z/4)^cols as an integer 0..4^cols-1.
Z4Vector decode(std::uint64_t code, std::size_t cols) {
  Z4Vector v(cols);
  for (std::size_t i = 0; i < cols; ++i, code >>= 2) v[i] = code & 3;
  return v;
}

// Closure of rows under addition and scaling, by breadth-first search.
std::set<Z4Vector> brute_span(const std::vector<Z4Vector>& rows, std::size_t cols) {
  std::set<Z4Vector> seen{Z4Vector(cols, 0)};
  std::vector<Z4Vector> frontier{Z4Vector(cols, 0)};
  while (!frontier.empty()) {
    std::vector<Z4Vector> next;
    for (const auto& v : frontier)
      for (const auto& r : rows) {
        Z4Vector w = v;
        for (std::size_t i = 0; i < cols; ++i) w[i] = (w[i] + r[i]) & 3;
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen;
}

std::uint8_t dot(const Z4Vector& x, const Z4Vector& y) {
  unsigned s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s & 3;
}

// Euclidean inner product on (Z4+uZ4)^N in slot layout, both u-components.
bool orthogonal(const Z4Vector& x, const Z4Vector& y, std::size_t N) {
  unsigned a = 0, b = 0;
  for (std::size_t i = 0; i < N; ++i) {
    a += x[i] * y[i];
    b += x[i] * y[N + i] + x[N + i] * y[i];
  }
  return (a & 3) == 0 && (b & 3) == 0;
}

RingElementPair pair(Z4Poly a, Z4Poly b) { return {std::move(a), std::move(b)}; }

}  // namespace

TEST_SUITE("submodule-canon") {
  TEST_CASE("Howell form is independent of generator order and scaling") {
    testgen::Rng rng(21);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t cols = 1 + rng.below(6);
      std::vector<Z4Vector> rows;
      const std::size_t count = 1 + rng.below(5);
      for (std::size_t i = 0; i < count; ++i) rows.push_back(rng.z4_vector(cols));
      const auto h = howell_form(rows, cols);

      auto shuffled = rows;
      std::shuffle(shuffled.begin(), shuffled.end(), rng.engine());
      for (auto& r : shuffled) {
        const std::uint8_t u = rng.unit();
        for (auto& c : r) c = (c * u) & 3;
      }
      // A redundant combination must not change the span.
      Z4Vector extra(cols, 0);
      for (const auto& r : rows) {
        const std::uint8_t c = rng.z4();
        for (std::size_t i = 0; i < cols; ++i) extra[i] = (extra[i] + c * r[i]) & 3;
      }
      shuffled.push_back(extra);
      CHECK(howell_form(shuffled, cols) == h);
    }
  }

  TEST_CASE("Howell span matches brute-force closure") {
    testgen::Rng rng(22);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t cols = 1 + rng.below(4);
      std::vector<Z4Vector> rows;
      for (std::size_t i = 0, c = 1 + rng.below(3); i < c; ++i) rows.push_back(rng.z4_vector(cols));
      const auto h = howell_form(rows, cols);
      const auto brute = brute_span(rows, cols);

      unsigned log2 = 0;
      for (const auto& r : h) log2 += r[leading_index(r)] == 1 ? 2 : 1;
      CHECK((std::size_t{1} << log2) == brute.size());

      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * cols)); ++code) {
        const Z4Vector v = decode(code, cols);
        const auto residue = howell_reduce(h, v);
        const bool in = std::all_of(residue.begin(), residue.end(), [](auto c) { return c == 0; });
        CHECK(in == brute.count(v));
      }
    }
  }

  TEST_CASE("solve and kernel") {
    testgen::Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t rows = 1 + rng.below(4), vars = 1 + rng.below(4);
      std::vector<Z4Vector> columns(vars);
      for (auto& c : columns) c = rng.z4_vector(rows);
      Z4Vector x = rng.z4_vector(vars);
      Z4Vector rhs(rows, 0);
      for (std::size_t j = 0; j < vars; ++j)
        for (std::size_t i = 0; i < rows; ++i) rhs[i] = (rhs[i] + x[j] * columns[j][i]) & 3;
      const auto sol = solve_z4(columns, rhs);
      REQUIRE(sol.has_value());
      Z4Vector back(rows, 0);
      for (std::size_t j = 0; j < vars; ++j)
        for (std::size_t i = 0; i < rows; ++i) back[i] = (back[i] + (*sol)[j] * columns[j][i]) & 3;
      CHECK(back == rhs);

      // Kernel of the transposed system, checked against brute force.
      std::vector<Z4Vector> eqs(rows, Z4Vector(vars));
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < vars; ++j) eqs[i][j] = columns[j][i];
      const auto ker = kernel_z4(eqs, vars);
      std::set<Z4Vector> expected;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * vars)); ++code) {
        const Z4Vector v = decode(code, vars);
        if (std::all_of(eqs.begin(), eqs.end(), [&](const Z4Vector& e) { return dot(e, v) == 0; }))
          expected.insert(v);
      }
      CHECK(brute_span(ker, vars) == expected);
    }
    CHECK_FALSE(solve_z4({Z4Vector{2}}, Z4Vector{1}).has_value());
  }

  TEST_CASE("span examples at length 2") {
    const Z4Poly mod{1, 0, 1};
    const Z4Poly x1{1, 1};
    const Z4Poly x1cubed = pow(x1, 3);
    CHECK(mod_card(span(mod, {})) == 1);
    CHECK(mod_card(span(mod, {pair(Z4Poly{1}, {})})) == 256);
    const auto c22 = span(mod, {pair({}, x1), pair(x1cubed, {})});
    CHECK(mod_card(c22) == 16);
    const auto c24 = span(mod, {pair(x1cubed, Z4Poly{2}), pair({}, x1)});
    CHECK(mod_equal(c22, c24));
    CHECK(mod_card(span(mod, {pair({}, Z4Poly{1})})) == 16);
    CHECK(mod_log2_card(span(mod, {pair({}, Z4Poly{1})})) == 4);
    CHECK_FALSE(mod_equal(zero_module(4), full_module(4)));
    CHECK_THROWS_AS(mod_equal(zero_module(4), zero_module(8)), std::invalid_argument);
    CHECK_THROWS_AS(mod_subset(zero_module(2), full_module(4)), std::invalid_argument);
    CHECK_THROWS_AS(mod_member(zero_module(4), Z4Vector(3)), std::invalid_argument);
    CHECK(mod_subset(c22, full_module(4)));
    CHECK(mod_member(c22, to_slots(pair({}, x1), 2)));
    CHECK_FALSE(mod_member(c22, to_slots(pair({}, Z4Poly{1}), 2)));
    CHECK(is_ideal(mod, c22));
    CHECK(from_slots(to_slots(pair(Z4Poly{1, 2}, Z4Poly{3}), 2)) == pair(Z4Poly{1, 2}, Z4Poly{3}));
  }

  TEST_CASE("module sum") {
    const Z4Poly mod{1, 0, 1};
    const auto a = span(mod, {pair({}, Z4Poly{1})});
    const auto b = span(mod, {pair(Z4Poly{2}, {})});
    const auto s = module_sum(a, b);
    CHECK(mod_subset(a, s));
    CHECK(mod_subset(b, s));
    CHECK(s == span(mod, {pair({}, Z4Poly{1}), pair(Z4Poly{2}, {})}));
  }

  TEST_CASE("dual of trivial modules") {
    CHECK(dual(zero_module(4)) == full_module(4));
    CHECK(dual(full_module(4)) == zero_module(4));
  }

  TEST_CASE("dual against brute force at N = 2") {
    testgen::Rng rng(24);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Z4Vector> rows;
      for (std::size_t i = 0, c = rng.below(3); i < c; ++i) rows.push_back(rng.z4_vector(4));
      const CanonModule m{4, howell_form(rows, 4)};
      const auto d = dual(m);
      const auto members = brute_span(m.rows, 4);
      for (std::uint64_t code = 0; code < 256; ++code) {
        const Z4Vector v = decode(code, 4);
        const bool orth = std::all_of(members.begin(), members.end(), [&](const Z4Vector& w) {
          return orthogonal(v, w, 2);
        });
        CHECK(mod_member(d, v) == orth);
      }
    }
  }

  TEST_CASE("dual is an involution on every ideal of lengths 2 and 4") {
    for (unsigned k : {1u, 2u}) {
      const auto stream = enumerate_negacyclic(1, k);
      const unsigned N = 1u << k;
      const BigInt whole = BigInt(1) << (4 * N);
      for (const auto& spec : stream) {
        const auto c = stream.span_of(spec);
        const auto d = dual(c);
        CHECK(mod_card(c) * mod_card(d) == whole);
        CHECK(dual(d) == c);
      }
    }
  }
}
