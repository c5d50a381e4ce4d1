#include "negaz4/z4_poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace negaz4 {

namespace {

std::uint8_t mod4(long v) { return static_cast<std::uint8_t>(((v % 4) + 4) % 4); }

}  // namespace

// ---- Z4Poly ----------------------------------------------------------------

Z4Poly::Z4Poly(std::vector<std::uint8_t> coeffs) : c_(std::move(coeffs)) { normalize(); }

Z4Poly::Z4Poly(std::initializer_list<int> coeffs) {
  c_.reserve(coeffs.size());
  for (int v : coeffs) c_.push_back(mod4(v));
  normalize();
}

Z4Poly Z4Poly::constant(int c) { return Z4Poly{c}; }

Z4Poly Z4Poly::monomial(std::size_t degree, int c) {
  std::vector<std::uint8_t> v(degree + 1, 0);
  v[degree] = mod4(c);
  return Z4Poly(std::move(v));
}

Z4Poly Z4Poly::lift(const F2Poly& p) { return Z4Poly(p.coeffs()); }

bool Z4Poly::all_even() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::uint8_t v) { return (v & 1) == 0; });
}

void Z4Poly::normalize() {
  for (auto& v : c_) v &= 3;
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Z4Poly& Z4Poly::operator+=(const Z4Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) & 3;
  normalize();
  return *this;
}

Z4Poly& Z4Poly::operator-=(const Z4Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + 4 - o.c_[i]) & 3;
  normalize();
  return *this;
}

Z4Poly operator+(Z4Poly a, const Z4Poly& b) { return a += b; }
Z4Poly operator-(Z4Poly a, const Z4Poly& b) { return a -= b; }
Z4Poly operator-(const Z4Poly& a) { return Z4Poly() - a; }

Z4Poly operator*(const Z4Poly& a, const Z4Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint8_t> out(a.size() + b.size() - 1, 0);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] = (out[i + j] + ac[i] * bc[j]) & 3;
  }
  return Z4Poly(std::move(out));
}

Z4Poly scale(const Z4Poly& a, int c) {
  std::vector<std::uint8_t> v = a.coeffs();
  const std::uint8_t m = mod4(c);
  for (auto& x : v) x = (x * m) & 3;
  return Z4Poly(std::move(v));
}

Z4Poly shift(const Z4Poly& a, std::size_t s) {
  if (a.is_zero()) return {};
  std::vector<std::uint8_t> v(s, 0);
  v.insert(v.end(), a.coeffs().begin(), a.coeffs().end());
  return Z4Poly(std::move(v));
}

Z4Poly pow(const Z4Poly& a, unsigned e) {
  Z4Poly result = Z4Poly::constant(1);
  Z4Poly base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::pair<Z4Poly, Z4Poly> z4_divrem(const Z4Poly& a, const Z4Poly& m) {
  if (!m.is_monic()) throw std::invalid_argument("non-monic modulus");
  const int dm = m.degree();
  if (a.degree() < dm) return {Z4Poly(), a};
  std::vector<std::uint8_t> r = a.coeffs();
  std::vector<std::uint8_t> q(a.size() - m.size() + 1, 0);
  const auto& mc = m.coeffs();
  for (int i = a.degree(); i >= dm; --i) {
    const std::uint8_t c = r[i];
    if (c == 0) continue;
    const std::size_t off = static_cast<std::size_t>(i - dm);
    q[off] = c;
    for (std::size_t j = 0; j < mc.size(); ++j) r[off + j] = (r[off + j] + 4 * 4 - c * mc[j]) & 3;
  }
  r.resize(static_cast<std::size_t>(dm));
  return {Z4Poly(std::move(q)), Z4Poly(std::move(r))};
}

Z4Poly z4_rem(const Z4Poly& a, const Z4Poly& m) { return z4_divrem(a, m).second; }

Z4Poly make_monic(const Z4Poly& m) {
  const std::uint8_t lc = m.leading();
  if (lc == 1) return m;
  if (lc == 3) return scale(m, 3);
  throw std::invalid_argument("leading coefficient is not a unit");
}

Z4Poly halve(const Z4Poly& a) {
  if (!a.all_even()) throw std::invalid_argument("cannot halve a polynomial with odd coefficients");
  std::vector<std::uint8_t> v = a.coeffs();
  for (auto& x : v) x >>= 1;
  return Z4Poly(std::move(v));
}

F2Poly bar_reduce(const Z4Poly& f) {
  std::vector<std::uint8_t> v = f.coeffs();
  for (auto& x : v) x &= 1;
  return F2Poly(std::move(v));
}

Z4Poly substitute_neg_x2k(const Z4Poly& f, unsigned k) {
  if (f.is_zero()) return {};
  const std::size_t step = std::size_t{1} << k;
  std::vector<std::uint8_t> v(static_cast<std::size_t>(f.degree()) * step + 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::uint8_t c = f[i];
    v[i * step] = (i % 2 == 0) ? c : static_cast<std::uint8_t>((4 - c) & 3);
  }
  return Z4Poly(std::move(v));
}

// ---- F2Poly ----------------------------------------------------------------

F2Poly::F2Poly(std::vector<std::uint8_t> coeffs) : c_(std::move(coeffs)) { normalize(); }

F2Poly::F2Poly(std::initializer_list<int> coeffs) {
  c_.reserve(coeffs.size());
  for (int v : coeffs) c_.push_back(static_cast<std::uint8_t>(((v % 2) + 2) % 2));
  normalize();
}

F2Poly F2Poly::monomial(std::size_t degree) {
  std::vector<std::uint8_t> v(degree + 1, 0);
  v[degree] = 1;
  return F2Poly(std::move(v));
}

F2Poly F2Poly::from_mask(std::uint64_t mask) {
  std::vector<std::uint8_t> v;
  for (; mask; mask >>= 1) v.push_back(static_cast<std::uint8_t>(mask & 1));
  return F2Poly(std::move(v));
}

std::uint64_t F2Poly::mask() const {
  if (c_.size() > 64) throw std::out_of_range("F2Poly too large for a 64-bit mask");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) m |= std::uint64_t{c_[i]} << i;
  return m;
}

void F2Poly::normalize() {
  for (auto& v : c_) v &= 1;
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

F2Poly& F2Poly::operator+=(const F2Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] ^= o.c_[i];
  normalize();
  return *this;
}

F2Poly operator+(F2Poly a, const F2Poly& b) { return a += b; }

F2Poly operator*(const F2Poly& a, const F2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<std::uint8_t> out(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (!ac[i]) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] ^= bc[j];
  }
  return F2Poly(std::move(out));
}

std::pair<F2Poly, F2Poly> f2_divrem(const F2Poly& a, const F2Poly& m) {
  if (m.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const int dm = m.degree();
  if (a.degree() < dm) return {F2Poly(), a};
  std::vector<std::uint8_t> r = a.coeffs();
  std::vector<std::uint8_t> q(r.size() - static_cast<std::size_t>(dm), 0);
  const auto& mc = m.coeffs();
  for (int i = a.degree(); i >= dm; --i) {
    if (!r[i]) continue;
    const std::size_t off = static_cast<std::size_t>(i - dm);
    q[off] = 1;
    for (std::size_t j = 0; j < mc.size(); ++j) r[off + j] ^= mc[j];
  }
  r.resize(static_cast<std::size_t>(dm));
  return {F2Poly(std::move(q)), F2Poly(std::move(r))};
}

F2Poly f2_rem(const F2Poly& a, const F2Poly& m) { return f2_divrem(a, m).second; }

F2Poly f2_gcd(const F2Poly& a, const F2Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  F2Poly x = a, y = b;
  while (!y.is_zero()) {
    F2Poly r = f2_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x;  // monic automatically over F2
}

F2Xgcd f2_xgcd(const F2Poly& a, const F2Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  F2Poly r0 = a, r1 = b;
  F2Poly s0{1}, s1;
  F2Poly t0, t1{1};
  while (!r1.is_zero()) {
    auto [q, r] = f2_divrem(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 + q * s1);
    t0 = std::exchange(t1, t0 + q * t1);
  }
  return {r0, s0, t0};
}

F2Poly f2_compose_power(const F2Poly& f, std::size_t e) {
  if (f.is_zero()) return {};
  std::vector<std::uint8_t> v(static_cast<std::size_t>(f.degree()) * e + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) v[i * e] = f[i];
  return F2Poly(std::move(v));
}

// ---- Bezout over Z4 ----------------------------------------------------------

std::pair<Z4Poly, Z4Poly> bezout_coprime_z4(const Z4Poly& F, const Z4Poly& f) {
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("non-monic modulus");
  const F2Xgcd xg = f2_xgcd(bar_reduce(F), bar_reduce(f));
  if (!xg.g.is_one()) throw std::invalid_argument("factors not coprime mod 2");

  // a0*F + b0*f = 1 + 2e over Z4; multiplying by (1 - 2e) kills the error
  // term because (2e)^2 = 0.
  const Z4Poly a0 = Z4Poly::lift(xg.s);
  const Z4Poly b0 = Z4Poly::lift(xg.t);
  const Z4Poly one = Z4Poly::constant(1);
  const Z4Poly err = a0 * F + b0 * f - one;
  const Z4Poly corr = one - err;
  Z4Poly a = a0 * corr;
  Z4Poly b = b0 * corr;

  auto [q, a_red] = z4_divrem(a, f);
  b = b + q * F;
  a = std::move(a_red);
  if (a * F + b * f != one) throw std::logic_error("Bezout lift failed to reach 1");
  return {a, b};
}

// ---- text form ---------------------------------------------------------------

namespace {

template <class Poly>
std::string bracket(const Poly& p) {
  std::ostringstream os;
  os << '[';
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << static_cast<int>(c[i]);
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string to_string(const Z4Poly& p) { return bracket(p); }
std::string to_string(const F2Poly& p) { return bracket(p); }

Z4Poly parse_z4_poly(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("polynomial must be a bracketed coefficient list");
  s = trim(s.substr(1, s.size() - 2));
  std::vector<std::uint8_t> coeffs;
  while (!s.empty()) {
    const auto comma = s.find(',');
    std::string_view tok = trim(s.substr(0, comma));
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad coefficient '" + std::string(tok) + "'");
    coeffs.push_back(mod4(v));
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
    if (trim(s).empty()) throw std::invalid_argument("trailing comma in coefficient list");
  }
  return Z4Poly(std::move(coeffs));
}

}  // namespace negaz4
