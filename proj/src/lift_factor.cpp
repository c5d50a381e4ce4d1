#include "negaz4/lift_factor.hpp"

#include "negaz4/bigint.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace negaz4 {

namespace {

void require_odd(unsigned n) {
  if (n == 0 || n % 2 == 0) throw std::invalid_argument("n must be a positive odd integer");
}

F2Poly mulmod(const F2Poly& a, const F2Poly& b, const F2Poly& m) { return f2_rem(a * b, m); }

F2Poly powmod(F2Poly base, const BigInt& e, const F2Poly& m) {
  F2Poly result{1};
  base = f2_rem(base, m);
  if (e == 0) return result;
  const unsigned top = boost::multiprecision::msb(e);
  for (unsigned i = top + 1; i-- > 0;) {
    result = mulmod(result, result, m);
    if (boost::multiprecision::bit_test(e, i)) result = mulmod(result, base, m);
  }
  return result;
}

// y^(2^times) mod m by repeated squaring.
F2Poly frobenius_power(const F2Poly& m, unsigned times) {
  F2Poly r = F2Poly::monomial(1);
  for (unsigned i = 0; i < times; ++i) r = mulmod(r, r, m);
  return r;
}

std::vector<unsigned> prime_factors(unsigned v) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= v; ++p) {
    if (v % p) continue;
    out.push_back(p);
    while (v % p == 0) v /= p;
  }
  if (v > 1) out.push_back(v);
  return out;
}

// Polynomials in y whose coefficients live in F2[z]/(m).
using ExtPoly = std::vector<F2Poly>;

}  // namespace

std::vector<Coset> cyclotomic_cosets(unsigned n) {
  require_odd(n);
  std::vector<bool> seen(n, false);
  std::vector<Coset> cosets;
  for (unsigned i = 0; i < n; ++i) {
    if (seen[i]) continue;
    Coset c;
    unsigned j = i;
    while (!seen[j]) {
      seen[j] = true;
      c.push_back(j);
      j = static_cast<unsigned>((2ull * j) % n);
    }
    cosets.push_back(std::move(c));
  }
  return cosets;
}

unsigned order_of_two(unsigned n) {
  require_odd(n);
  if (n == 1) return 1;
  unsigned ord = 1;
  unsigned long long v = 2 % n;
  while (v != 1) {
    v = (v * 2) % n;
    ++ord;
  }
  return ord;
}

bool is_irreducible_f2(const F2Poly& p) {
  const int d = p.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const unsigned ud = static_cast<unsigned>(d);
  const F2Poly y = F2Poly::monomial(1);
  if (frobenius_power(p, ud) != f2_rem(y, p)) return false;
  for (unsigned q : prime_factors(ud)) {
    const F2Poly t = frobenius_power(p, ud / q) + y;
    if (!f2_gcd(p, t).is_one()) return false;
  }
  return true;
}

F2Poly find_irreducible_f2(unsigned degree) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  if (degree == 1) return F2Poly{0, 1};
  const F2Poly lead = F2Poly::monomial(degree);
  for (std::uint64_t low = 1;; low += 2) {
    F2Poly cand = lead + F2Poly::from_mask(low);
    if (is_irreducible_f2(cand)) return cand;
  }
}

std::vector<F2Poly> factor_mod2(unsigned n) {
  const std::vector<Coset> cosets = cyclotomic_cosets(n);
  if (n == 1) return {F2Poly{1, 1}};

  const unsigned ord = order_of_two(n);
  const F2Poly field = find_irreducible_f2(ord);
  const BigInt cofactor = (pow2(ord) - 1) / n;

  // A primitive n-th root of unity in F2[z]/(field).
  const std::vector<unsigned> primes = prime_factors(n);
  F2Poly alpha;
  for (std::uint64_t cand = 2;; ++cand) {
    const F2Poly beta = f2_rem(F2Poly::from_mask(cand), field);
    if (beta.is_zero()) continue;
    const F2Poly a = powmod(beta, cofactor, field);
    const bool primitive = std::all_of(primes.begin(), primes.end(), [&](unsigned p) {
      return !powmod(a, BigInt(n / p), field).is_one();
    });
    if (primitive) {
      alpha = a;
      break;
    }
  }

  std::vector<F2Poly> out;
  out.reserve(cosets.size());
  for (const Coset& c : cosets) {
    ExtPoly mp{F2Poly{1}};
    for (unsigned i : c) {
      const F2Poly root = powmod(alpha, BigInt(i), field);
      // mp *= (y + root)
      ExtPoly next(mp.size() + 1);
      for (std::size_t t = 0; t < mp.size(); ++t) {
        next[t + 1] += mp[t];
        next[t] += mulmod(mp[t], root, field);
      }
      mp = std::move(next);
    }
    std::vector<std::uint8_t> coeffs;
    coeffs.reserve(mp.size());
    for (const F2Poly& e : mp) {
      if (e.degree() > 0) throw std::logic_error("coset minimal polynomial left F2");
      coeffs.push_back(e.is_zero() ? 0 : 1);
    }
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

Z4Poly yn_minus_1(unsigned n) {
  std::vector<std::uint8_t> v(n + 1, 0);
  v[0] = 3;
  v[n] = 1;
  return Z4Poly(std::move(v));
}

Z4Poly hensel_lift(const F2Poly& g, unsigned n) {
  require_odd(n);
  const int d = g.degree();
  if (d < 1) throw std::invalid_argument("cannot lift a constant");
  const Z4Poly gt = Z4Poly::lift(g);
  // Graeffe step: h(y^2) = (-1)^d g(y) g(-y).
  const Z4Poly prod = gt * substitute_neg_x2k(gt, 0);
  std::vector<std::uint8_t> h(static_cast<std::size_t>(d) + 1, 0);
  for (std::size_t i = 0; i < prod.size(); ++i) {
    if (i % 2 == 1) {
      if (prod[i] != 0) throw std::logic_error("Graeffe product has an odd-degree term");
      continue;
    }
    h[i / 2] = (d % 2 == 0) ? prod[i] : static_cast<std::uint8_t>((4 - prod[i]) & 3);
  }
  Z4Poly lifted(std::move(h));
  if (!lifted.is_monic() || bar_reduce(lifted) != g)
    throw std::logic_error("Graeffe lift does not reduce to its input");
  if (!z4_rem(yn_minus_1(n), lifted).is_zero())
    throw std::logic_error("lifted factor does not divide y^n - 1");
  return lifted;
}

FactorSet factor_yn_minus_1(unsigned n) {
  require_odd(n);
  FactorSet fs;
  fs.n = n;
  for (const F2Poly& g : factor_mod2(n)) fs.factors.push_back(hensel_lift(g, n));

  const Z4Poly y_minus_1{3, 1};
  std::sort(fs.factors.begin(), fs.factors.end(), [&](const Z4Poly& a, const Z4Poly& b) {
    const bool a1 = a == y_minus_1, b1 = b == y_minus_1;
    if (a1 != b1) return a1;
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });

  Z4Poly prod = Z4Poly::constant(1);
  for (const Z4Poly& f : fs.factors) {
    prod = prod * f;
    fs.degrees.push_back(static_cast<unsigned>(f.degree()));
  }
  if (prod != yn_minus_1(n)) throw std::logic_error("factor product differs from y^n - 1");
  return fs;
}

}  // namespace negaz4
