#include "negaz4/ideal_enum.hpp"

#include <stdexcept>

namespace negaz4 {

std::string to_string(IdealCase c) {
  switch (c) {
    case IdealCase::I: return "I";
    case IdealCase::II: return "II";
    case IdealCase::III: return "III";
    case IdealCase::IV: return "IV";
    case IdealCase::V: return "V";
  }
  return "?";
}

IdealCase parse_ideal_case(const std::string& s) {
  if (s == "I") return IdealCase::I;
  if (s == "II") return IdealCase::II;
  if (s == "III") return IdealCase::III;
  if (s == "IV") return IdealCase::IV;
  if (s == "V") return IdealCase::V;
  throw std::invalid_argument("unknown ideal case '" + s + "'");
}

namespace {

unsigned ceil_half(unsigned v) { return (v + 1) / 2; }

bool is_digit(const Z4Poly& p, unsigned d) {
  if (p.degree() >= static_cast<int>(d)) return false;
  for (std::uint8_t c : p.coeffs())
    if (c > 1) return false;
  return true;
}

}  // namespace

void LocalIdealFamily::add_block(IdealCase kase, std::optional<unsigned> lambda, std::optional<unsigned> t, int lo,
                                 int hi, bool skip_zero) {
  Block b{kase, lambda, t, 0, 0, skip_zero, 1};
  if (hi >= lo) {
    b.lo = static_cast<unsigned>(lo);
    b.len = static_cast<unsigned>(hi - lo + 1);
  }
  b.count = pow2(static_cast<unsigned long>(b.len) * d_);
  if (skip_zero) b.count -= 1;
  count_ += b.count;
  blocks_.push_back(std::move(b));
}

LocalIdealFamily::LocalIdealFamily(ChainRingCtx ctx, std::size_t j)
    : ctx_(std::move(ctx)), j_(j), d_(ctx_->d()), modulus_(ctx_->modulus()) {
  const int nu = static_cast<int>(ctx_->nu());
  const int half = nu / 2;
  add_block(IdealCase::I, {}, {}, half - 1, nu - 2);
  for (int l = 1; l <= nu - 1; ++l)
    add_block(IdealCase::II, l, {}, static_cast<int>(ceil_half(nu - l)) - 1, nu - l - 2);
  for (int l = 0; l <= nu; ++l) add_block(IdealCase::III, l, {}, 0, -1);
  for (int t = 1; t <= nu - 1; ++t) add_block(IdealCase::IV, {}, t, static_cast<int>(ceil_half(t)) - 1, t - 2);
  for (int l = 1; l <= nu - 2; ++l)
    for (int t = 1; t <= nu - l - 1; ++t)
      add_block(IdealCase::V, l, t, static_cast<int>(ceil_half(t)) - 1, t - 2);
}

LocalIdealFamily LocalIdealFamily::galois(const Z4Poly& f, std::size_t j) {
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("f must be monic of positive degree");
  LocalIdealFamily fam;
  fam.j_ = j;
  fam.d_ = static_cast<unsigned>(f.degree());
  fam.modulus_ = f;
  for (unsigned i = 0; i <= 2; ++i) fam.add_block(IdealCase::I, i, {}, 0, -1);
  for (unsigned s = 0; s <= 1; ++s) fam.add_block(IdealCase::II, s, {}, 0, -1);
  fam.add_block(IdealCase::III, {}, {}, 0, 0, true);
  fam.add_block(IdealCase::V, {}, {}, 0, -1);
  return fam;
}

IdealSpec LocalIdealFamily::build(const Block& block, std::map<unsigned, Z4Poly> digits) const {
  IdealSpec spec;
  spec.j = j_;
  spec.kase = block.kase;
  spec.lambda = block.lambda;
  spec.t = block.t;
  spec.b_digits = std::move(digits);
  const unsigned d = d_;
  const Z4Poly one = Z4Poly::constant(1);

  if (cyclic()) {
    const Z4Poly two = Z4Poly::constant(2);
    switch (block.kase) {
      case IdealCase::I: {
        const unsigned i = *block.lambda;
        if (i == 0) spec.generators = {{one, {}}};
        if (i == 1) spec.generators = {{{}, one}};
        spec.size = pow2(2ul * d * (2 - i));
        break;
      }
      case IdealCase::II: {
        const unsigned s = *block.lambda;
        spec.generators = {s == 0 ? RingElementPair{two, {}} : RingElementPair{{}, two}};
        spec.size = pow2(static_cast<unsigned long>(d) * (2 - s));
        break;
      }
      case IdealCase::III:
        spec.generators = {{z4_rem(scale(spec.b_digits.at(0), 2), modulus_), one}};
        spec.size = pow2(2ul * d);
        break;
      default:
        spec.generators = {{{}, one}, {two, {}}};
        spec.size = pow2(3ul * d);
        break;
    }
    return spec;
  }

  const ChainRingCtx& ctx = *ctx_;
  const unsigned nu = ctx.nu();
  Z4Poly b;
  for (const auto& [i, digit] : spec.b_digits) b += ctx.mul(digit, ctx.f_power(i));
  b = ctx.reduce(b);
  const auto pw = [&](unsigned e) { return ctx.f_power(e); };
  switch (block.kase) {
    case IdealCase::I:
      spec.generators = {{ctx.mul(pw(1), b), one}};
      spec.size = pow2(static_cast<unsigned long>(nu) * d);
      break;
    case IdealCase::II: {
      const unsigned l = *block.lambda;
      spec.generators = {{ctx.mul(pw(l + 1), b), pw(l)}};
      spec.size = pow2(static_cast<unsigned long>(d) * (nu - l));
      break;
    }
    case IdealCase::III: {
      const unsigned l = *block.lambda;
      spec.generators = {{pw(l), {}}};
      spec.size = pow2(2ul * d * (nu - l));
      break;
    }
    case IdealCase::IV: {
      const unsigned t = *block.t;
      spec.generators = {{ctx.mul(pw(1), b), one}, {pw(t), {}}};
      spec.size = pow2(static_cast<unsigned long>(d) * (2 * nu - t));
      break;
    }
    case IdealCase::V: {
      const unsigned l = *block.lambda;
      const unsigned t = *block.t;
      spec.generators = {{ctx.mul(pw(l + 1), b), pw(l)}, {pw(l + t), {}}};
      spec.size = pow2(static_cast<unsigned long>(d) * (2 * nu - 2 * l - t));
      break;
    }
  }
  return spec;
}

IdealSpec LocalIdealFamily::at(const BigInt& index) const {
  if (index < 0) throw std::out_of_range("negative ideal index");
  BigInt r = index;
  for (const Block& block : blocks_) {
    if (r >= block.count) {
      r -= block.count;
      continue;
    }
    if (block.skip_zero) r += 1;
    const BigInt digit_mask = pow2(d_) - 1;
    std::map<unsigned, Z4Poly> digits;
    // The lowest digit index is the most significant position.
    for (unsigned pos = block.len; pos-- > 0;) {
      const auto mask = static_cast<std::uint64_t>(r & digit_mask);
      digits[block.lo + pos] = Z4Poly::lift(F2Poly::from_mask(mask));
      r >>= d_;
    }
    return build(block, std::move(digits));
  }
  throw std::out_of_range("ideal index past the end of the family");
}

std::vector<IdealSpec> LocalIdealFamily::all() const {
  std::vector<IdealSpec> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (BigInt i = 0; i < count_; ++i) out.push_back(at(i));
  return out;
}

const LocalIdealFamily::Block* LocalIdealFamily::find_block(IdealCase kase, std::optional<unsigned> lambda,
                                                            std::optional<unsigned> t) const {
  for (const Block& b : blocks_)
    if (b.kase == kase && b.lambda == lambda && b.t == t) return &b;
  return nullptr;
}

IdealSpec LocalIdealFamily::make(IdealCase kase, std::optional<unsigned> lambda, std::optional<unsigned> t,
                                 const std::map<unsigned, Z4Poly>& digits) const {
  const Block* block = find_block(kase, lambda, t);
  if (!block) throw std::invalid_argument("no ideal family with case " + to_string(kase) + " and these parameters");
  if (digits.size() != block->len) throw std::invalid_argument("wrong number of digits");
  bool nonzero = false;
  for (const auto& [i, digit] : digits) {
    if (i < block->lo || i >= block->lo + block->len) throw std::invalid_argument("digit index out of range");
    if (!is_digit(digit, d_)) throw std::invalid_argument("digit is not a 0/1 polynomial of degree < d");
    nonzero = nonzero || !digit.is_zero();
  }
  if (block->skip_zero && !nonzero) throw std::invalid_argument("digit must be nonzero");
  return build(*block, digits);
}

CanonModule LocalIdealFamily::span_of(const IdealSpec& spec) const { return span(modulus_, spec.generators); }

CodeSpecStream::CodeSpecStream(AmbientCtx ambient, std::vector<LocalIdealFamily> families,
                               std::optional<BigInt> limit)
    : ambient_(std::move(ambient)), families_(std::move(families)) {
  if (families_.size() != ambient_.factors.size()) throw std::invalid_argument("one family per factor expected");
  size_ = 1;
  cache_.resize(families_.size());
  for (std::size_t j = 0; j < families_.size(); ++j) {
    size_ *= families_[j].count();
    if (families_[j].count() <= 4096) cache_[j] = families_[j].all();
  }
  if (limit && *limit < size_) size_ = *limit < 0 ? BigInt(0) : *limit;
}

CodeSpec CodeSpecStream::at(const BigInt& index) const {
  if (index < 0 || index >= size_) throw std::out_of_range("code index out of range");
  CodeSpec spec;
  spec.n = ambient_.n;
  spec.k = ambient_.k;
  spec.choice.resize(families_.size());
  spec.total_size = 1;
  BigInt r = index;
  for (std::size_t j = families_.size(); j-- > 0;) {
    const BigInt& c = families_[j].count();
    const BigInt local = r % c;
    r /= c;
    spec.choice[j] = cache_[j].empty() ? families_[j].at(local) : cache_[j][static_cast<std::size_t>(local)];
  }
  for (const IdealSpec& s : spec.choice) spec.total_size *= s.size;
  return spec;
}

std::vector<RingElementPair> CodeSpecStream::generators(const CodeSpec& spec) const {
  std::vector<std::vector<RingElementPair>> local;
  local.reserve(spec.choice.size());
  for (const IdealSpec& s : spec.choice) local.push_back(s.generators);
  return assemble_code(ambient_, local);
}

CanonModule CodeSpecStream::span_of(const CodeSpec& spec) const { return span(ambient_, generators(spec)); }

std::vector<LocalIdealFamily> negacyclic_families(const AmbientCtx& ambient) {
  if (ambient.cyclic()) throw std::invalid_argument("negacyclic families need k >= 1");
  std::vector<LocalIdealFamily> out;
  for (std::size_t j = 0; j < ambient.factors.size(); ++j)
    out.emplace_back(make_ctx(ambient.factors.factors[j], ambient.k), j);
  return out;
}

std::vector<LocalIdealFamily> cyclic_families(const AmbientCtx& ambient) {
  if (!ambient.cyclic()) throw std::invalid_argument("cyclic families need k = 0");
  std::vector<LocalIdealFamily> out;
  for (std::size_t j = 0; j < ambient.factors.size(); ++j)
    out.push_back(LocalIdealFamily::galois(ambient.factors.factors[j], j));
  return out;
}

CodeSpecStream enumerate_negacyclic(unsigned n, unsigned k, std::optional<BigInt> limit) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  AmbientCtx ambient = make_ambient(n, k);
  auto families = negacyclic_families(ambient);
  return CodeSpecStream(std::move(ambient), std::move(families), std::move(limit));
}

CodeSpecStream enumerate_cyclic_odd(unsigned n, std::optional<BigInt> limit) {
  AmbientCtx ambient = make_ambient(n, 0);
  auto families = cyclic_families(ambient);
  return CodeSpecStream(std::move(ambient), std::move(families), std::move(limit));
}

BigInt count_local_ideals(unsigned d, unsigned k) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  const unsigned long half = 1ul << k;
  BigInt total = 0;
  for (unsigned long i = 0; i <= half; ++i) total += BigInt(1 + 4 * i) * pow2((half - i) * d);
  return total;
}

BigInt count_local_ideals_closed(unsigned d, unsigned k) {
  if (d < 2) throw std::domain_error("closed form needs d >= 2");
  const unsigned long half = 1ul << k;
  const BigInt q = pow2(d);
  const BigInt num = (q + 3) * pow2((half + 1) * d) - q * (4 * half + 5) + 4 * half + 1;
  const BigInt den = (q - 1) * (q - 1);
  if (num % den != 0) throw std::logic_error("closed form is not an integer");
  return num / den;
}

BigInt count_local_ideals_d1(unsigned k) {
  const unsigned long half = 1ul << k;
  return 10 * pow2(half) - BigInt(4 * half) - 9;
}

std::array<BigInt, 5> case_subtotals(unsigned d, unsigned k) {
  const unsigned nu = 2u << k;
  std::array<BigInt, 5> out;
  out[0] = pow2(static_cast<unsigned long>(nu / 2) * d);
  out[1] = 0;
  for (unsigned l = 1; l <= nu - 1; ++l) out[1] += pow2(static_cast<unsigned long>(nu - l - ceil_half(nu - l)) * d);
  out[2] = nu + 1;
  out[3] = 0;
  for (unsigned t = 1; t <= nu - 1; ++t) out[3] += pow2(static_cast<unsigned long>(t - ceil_half(t)) * d);
  out[4] = 0;
  for (unsigned l = 1; l + 2 <= nu; ++l)
    for (unsigned t = 1; t + l + 1 <= nu; ++t) out[4] += pow2(static_cast<unsigned long>(t - ceil_half(t)) * d);
  return out;
}

BigInt count_negacyclic(unsigned n, unsigned k) {
  if (n % 2 == 0) throw std::invalid_argument("n must be odd");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  BigInt total = 1;
  for (unsigned d : factor_yn_minus_1(n).degrees) total *= count_local_ideals(d, k);
  return total;
}

BigInt count_cyclic_odd(unsigned n) {
  if (n % 2 == 0) throw std::invalid_argument("n must be odd");
  BigInt total = 1;
  for (unsigned d : factor_yn_minus_1(n).degrees) total *= pow2(d) + 5;
  return total;
}

BigInt claimed_length2k_count(unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const BigInt len = pow2(k);
  const unsigned long half = 1ul << (k - 1);
  return 11 * pow2(1ul << k) + pow2(half - 1) * (5 * len - 12) - (len * len + 5 * len + 4);
}

BigInt galois_ring_cyclic_count(unsigned m, unsigned k) {
  if (m < 1 || k < 1) throw std::invalid_argument("m and k must be positive");
  const BigRational q{pow2(m)};
  const unsigned long e = 1ul << (k - 1);
  const BigRational qe{pow2(static_cast<unsigned long>(m) * e)};
  const BigRational qe1{pow2(static_cast<unsigned long>(m) * (e - 1))};
  const BigRational value =
      5 + qe + (5 * q - 1) * q * (qe1 - 1) / ((q - 1) * (q - 1)) - 4 * BigRational(e - 1) / (q - 1);
  if (denominator(value) != 1) throw std::logic_error("count is not an integer");
  return numerator(value);
}

}  // namespace negaz4
