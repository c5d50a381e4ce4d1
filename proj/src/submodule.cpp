#include "negaz4/submodule.hpp"

#include <algorithm>
#include <stdexcept>

namespace negaz4 {

RingElementPair reduce_pair(const RingElementPair& p, const Z4Poly& modulus) {
  const Z4Poly m = make_monic(modulus);
  return {z4_rem(p.a, m), z4_rem(p.b, m)};
}

RingElementPair mul_pair(const RingElementPair& p, const RingElementPair& q, const Z4Poly& modulus) {
  const Z4Poly m = make_monic(modulus);
  return {z4_rem(p.a * q.a, m), z4_rem(p.a * q.b + p.b * q.a, m)};
}

namespace {

void check_rank(const CanonModule& a, const CanonModule& b) {
  if (a.ambient_rank != b.ambient_rank) throw std::invalid_argument("ambient rank mismatch");
}

// part *= x modulo the monic modulus; part has length deg(modulus).
void times_x(std::uint8_t* part, std::size_t m, const Z4Poly& monic) {
  if (m == 0) return;
  const std::uint8_t top = part[m - 1];
  std::copy_backward(part, part + m - 1, part + m);
  part[0] = 0;
  if (!top) return;
  for (std::size_t i = 0; i < m; ++i) part[i] = (part[i] + 16 - top * monic[i]) & 3;
}

Z4Vector coeff_array(const Z4Poly& p, std::size_t m) {
  Z4Vector v(m, 0);
  for (std::size_t i = 0; i < m; ++i) v[i] = p[i];
  return v;
}

}  // namespace

Z4Vector to_slots(const RingElementPair& p, std::size_t m) {
  if (p.a.degree() >= static_cast<int>(m) || p.b.degree() >= static_cast<int>(m))
    throw std::invalid_argument("element is not reduced");
  Z4Vector v(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    v[i] = p.a[i];
    v[m + i] = p.b[i];
  }
  return v;
}

RingElementPair from_slots(const Z4Vector& v) {
  const std::size_t m = v.size() / 2;
  return {Z4Poly(Z4Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m))),
          Z4Poly(Z4Vector(v.begin() + static_cast<std::ptrdiff_t>(m), v.end()))};
}

CanonModule span(const Z4Poly& modulus, const std::vector<RingElementPair>& gens) {
  const Z4Poly monic = make_monic(modulus);
  const std::size_t m = static_cast<std::size_t>(monic.degree());
  std::vector<Z4Vector> rows;
  rows.reserve(gens.size() * 2 * m);
  for (const RingElementPair& g : gens) {
    Z4Vector a = coeff_array(z4_rem(g.a, monic), m);
    Z4Vector b = coeff_array(z4_rem(g.b, monic), m);
    for (std::size_t i = 0; i < m; ++i) {
      Z4Vector row(2 * m, 0), urow(2 * m, 0);
      std::copy(a.begin(), a.end(), row.begin());
      std::copy(b.begin(), b.end(), row.begin() + static_cast<std::ptrdiff_t>(m));
      std::copy(a.begin(), a.end(), urow.begin() + static_cast<std::ptrdiff_t>(m));
      rows.push_back(std::move(row));
      rows.push_back(std::move(urow));
      if (i + 1 < m) {
        times_x(a.data(), m, monic);
        times_x(b.data(), m, monic);
      }
    }
  }
  return {2 * m, howell_form(std::move(rows), 2 * m)};
}

CanonModule zero_module(std::size_t ambient_rank) { return {ambient_rank, {}}; }

CanonModule full_module(std::size_t ambient_rank) {
  CanonModule out{ambient_rank, {}};
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    Z4Vector r(ambient_rank, 0);
    r[i] = 1;
    out.rows.push_back(std::move(r));
  }
  return out;
}

CanonModule module_sum(const CanonModule& a, const CanonModule& b) {
  check_rank(a, b);
  std::vector<Z4Vector> rows = a.rows;
  rows.insert(rows.end(), b.rows.begin(), b.rows.end());
  return {a.ambient_rank, howell_form(std::move(rows), a.ambient_rank)};
}

bool mod_equal(const CanonModule& a, const CanonModule& b) {
  check_rank(a, b);
  return a.rows == b.rows;
}

bool mod_member(const CanonModule& a, const Z4Vector& v) {
  if (v.size() != a.ambient_rank) throw std::invalid_argument("ambient rank mismatch");
  const Z4Vector r = howell_reduce(a.rows, v);
  return leading_index(r) == r.size();
}

bool mod_subset(const CanonModule& a, const CanonModule& b) {
  check_rank(a, b);
  for (const Z4Vector& r : a.rows)
    if (!mod_member(b, r)) return false;
  return true;
}

unsigned mod_log2_card(const CanonModule& a) {
  unsigned bits = 0;
  for (const Z4Vector& r : a.rows) bits += r[leading_index(r)] == 1 ? 2 : 1;
  return bits;
}

BigInt mod_card(const CanonModule& a) { return pow2(mod_log2_card(a)); }

CanonModule dual(const CanonModule& a) {
  const std::size_t rank = a.ambient_rank;
  if (rank % 2) throw std::invalid_argument("ambient rank must be even");
  const std::size_t n = rank / 2;
  // For x = x0 + u x1 and a row r = r0 + u r1:
  //   [x, r] = x0.r0 + u (x0.r1 + x1.r0).
  std::vector<Z4Vector> eqs;
  eqs.reserve(2 * a.rows.size());
  for (const Z4Vector& r : a.rows) {
    Z4Vector e0(rank, 0), e1(rank, 0);
    for (std::size_t i = 0; i < n; ++i) {
      e0[i] = r[i];
      e1[i] = r[n + i];
      e1[n + i] = r[i];
    }
    eqs.push_back(std::move(e0));
    eqs.push_back(std::move(e1));
  }
  return {rank, kernel_z4(eqs, rank)};
}

bool is_ideal(const Z4Poly& modulus, const CanonModule& a) {
  const Z4Poly monic = make_monic(modulus);
  const std::size_t m = static_cast<std::size_t>(monic.degree());
  if (a.ambient_rank != 2 * m) throw std::invalid_argument("ambient rank mismatch");
  for (const Z4Vector& r : a.rows) {
    Z4Vector xr = r;
    times_x(xr.data(), m, monic);
    times_x(xr.data() + m, m, monic);
    if (!mod_member(a, xr)) return false;
    Z4Vector ur(2 * m, 0);
    std::copy(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(m), ur.begin() + static_cast<std::ptrdiff_t>(m));
    if (!mod_member(a, ur)) return false;
  }
  return true;
}

}  // namespace negaz4
