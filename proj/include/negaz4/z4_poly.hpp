#pragma once

// Dense polynomials over Z/4 and over F2.
//
// Coefficients are stored little-endian (index i holds the coefficient of
// y^i) with trailing zeros trimmed, so the zero polynomial is the empty
// sequence. Z4Poly residues live in {0,1,2,3}; F2Poly is a separate type
// because F2 sits inside Z4 as a subset, not as a subring.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace negaz4 {

class F2Poly;

class Z4Poly {
 public:
  Z4Poly() = default;
  explicit Z4Poly(std::vector<std::uint8_t> coeffs);
  Z4Poly(std::initializer_list<int> coeffs);

  static Z4Poly constant(int c);
  static Z4Poly monomial(std::size_t degree, int c = 1);
  // Embeds a 0/1 polynomial into Z4[y] coefficient-wise.
  static Z4Poly lift(const F2Poly& p);

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const noexcept { return c_.size(); }
  std::uint8_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  std::uint8_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint8_t>& coeffs() const noexcept { return c_; }

  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  bool all_even() const noexcept;

  Z4Poly& operator+=(const Z4Poly& o);
  Z4Poly& operator-=(const Z4Poly& o);

  friend bool operator==(const Z4Poly&, const Z4Poly&) = default;
  friend auto operator<=>(const Z4Poly& a, const Z4Poly& b) { return a.c_ <=> b.c_; }

 private:
  void normalize();
  std::vector<std::uint8_t> c_;
};

Z4Poly operator+(Z4Poly a, const Z4Poly& b);
Z4Poly operator-(Z4Poly a, const Z4Poly& b);
Z4Poly operator-(const Z4Poly& a);
Z4Poly operator*(const Z4Poly& a, const Z4Poly& b);
Z4Poly scale(const Z4Poly& a, int c);
// Multiplies by y^shift.
Z4Poly shift(const Z4Poly& a, std::size_t shift);
Z4Poly pow(const Z4Poly& a, unsigned e);

inline Z4Poly z4_add(const Z4Poly& a, const Z4Poly& b) { return a + b; }
inline Z4Poly z4_mul(const Z4Poly& a, const Z4Poly& b) { return a * b; }

// Division by a monic modulus: a = q*m + r with deg r < deg m.
// Throws std::invalid_argument("non-monic modulus") otherwise.
std::pair<Z4Poly, Z4Poly> z4_divrem(const Z4Poly& a, const Z4Poly& m);
Z4Poly z4_rem(const Z4Poly& a, const Z4Poly& m);

// Multiplies m by the inverse of its leading coefficient. The leading
// coefficient must be a unit (1 or 3); the generated ideal is unchanged.
Z4Poly make_monic(const Z4Poly& m);

// Halves a polynomial whose coefficients are all even (2 -> 1, 0 -> 0).
Z4Poly halve(const Z4Poly& a);

F2Poly bar_reduce(const Z4Poly& f);

// f(-x^{2^k}) expanded over Z4; k = 0 gives f(-x).
Z4Poly substitute_neg_x2k(const Z4Poly& f, unsigned k);

class F2Poly {
 public:
  F2Poly() = default;
  explicit F2Poly(std::vector<std::uint8_t> coeffs);
  F2Poly(std::initializer_list<int> coeffs);

  static F2Poly monomial(std::size_t degree);
  static F2Poly from_mask(std::uint64_t mask);

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::uint8_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint8_t>& coeffs() const noexcept { return c_; }
  // Bit i is the coefficient of y^i; requires degree < 64.
  std::uint64_t mask() const;

  F2Poly& operator+=(const F2Poly& o);

  friend bool operator==(const F2Poly&, const F2Poly&) = default;
  friend auto operator<=>(const F2Poly& a, const F2Poly& b) { return a.c_ <=> b.c_; }

 private:
  void normalize();
  std::vector<std::uint8_t> c_;
};

F2Poly operator+(F2Poly a, const F2Poly& b);
F2Poly operator*(const F2Poly& a, const F2Poly& b);
std::pair<F2Poly, F2Poly> f2_divrem(const F2Poly& a, const F2Poly& m);
F2Poly f2_rem(const F2Poly& a, const F2Poly& m);
F2Poly f2_gcd(const F2Poly& a, const F2Poly& b);

struct F2Xgcd {
  F2Poly g, s, t;  // s*a + t*b = g
};
F2Xgcd f2_xgcd(const F2Poly& a, const F2Poly& b);

// f(x^e) over F2.
F2Poly f2_compose_power(const F2Poly& f, std::size_t e);

// Solves a*F + b*f = 1 exactly in Z4[y] for F, f with coprime reductions mod 2.
// f must be monic. Returns (a, b) with deg a < deg f and deg b < deg F.
std::pair<Z4Poly, Z4Poly> bezout_coprime_z4(const Z4Poly& F, const Z4Poly& f);

// Bracket text form: "[3,0,1]" is 3 + y^2; the zero polynomial is "[]".
std::string to_string(const Z4Poly& p);
std::string to_string(const F2Poly& p);
Z4Poly parse_z4_poly(std::string_view text);

}  // namespace negaz4
