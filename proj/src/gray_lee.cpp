#include "negaz4/gray_lee.hpp"

#include "negaz4/parallel.hpp"

#include <mutex>
#include <stdexcept>

namespace negaz4 {

GrayVector gray_map(const std::vector<RElem>& v) {
  const std::size_t n = v.size();
  GrayVector out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = v[i].b & 3;
    out[n + i] = (v[i].a + v[i].b) & 3;
  }
  return out;
}

GrayVector gray_map_slots(const Z4Vector& slots) {
  if (slots.size() % 2) throw std::invalid_argument("slot vector must have even length");
  const std::size_t n = slots.size() / 2;
  GrayVector out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = slots[n + i] & 3;
    out[n + i] = (slots[i] + slots[n + i]) & 3;
  }
  return out;
}

unsigned lee_weight_scalar(std::uint8_t c) {
  static constexpr unsigned table[4] = {0, 1, 2, 1};
  return table[c & 3];
}

unsigned lee_weight_R(RElem x) { return lee_weight_scalar(x.b) + lee_weight_scalar((x.a + x.b) & 3); }

unsigned lee_weight_vec(const std::vector<RElem>& v) {
  unsigned w = 0;
  for (const RElem& x : v) w += lee_weight_R(x);
  return w;
}

unsigned lee_weight_z4(const Z4Vector& v) {
  unsigned w = 0;
  for (std::uint8_t c : v) w += lee_weight_scalar(c);
  return w;
}

WeightEnumerator lee_weight_enumerator(const CanonModule& code) {
  const unsigned bits = mod_log2_card(code);
  if (bits > 20) throw std::invalid_argument("weight enumerator scale limit");
  const std::size_t rank = code.ambient_rank;
  if (rank % 2) throw std::invalid_argument("ambient rank must be even");
  const std::size_t n = rank / 2;

  // Each Howell row contributes multiples 0..3 (pivot 1) or 0..1 (pivot 2),
  // and every codeword arises from exactly one such choice.
  const std::size_t rows = code.rows.size();
  std::vector<unsigned> radix(rows);
  for (std::size_t r = 0; r < rows; ++r) radix[r] = code.rows[r][leading_index(code.rows[r])] == 1 ? 4 : 2;
  const std::size_t total = std::size_t{1} << bits;

  WeightEnumerator out;
  std::mutex guard;
  parallel_chunks(total, [&](std::size_t begin, std::size_t end, unsigned) {
    if (begin >= end) return;
    WeightEnumerator local;
    std::vector<unsigned> digit(rows);
    Z4Vector word(rank, 0);
    std::size_t rest = begin;
    for (std::size_t r = rows; r-- > 0;) {
      digit[r] = static_cast<unsigned>(rest % radix[r]);
      rest /= radix[r];
      for (std::size_t c = 0; c < rank; ++c) word[c] = (word[c] + digit[r] * code.rows[r][c]) & 3;
    }
    for (std::size_t idx = begin;;) {
      unsigned w = 0;
      for (std::size_t i = 0; i < n; ++i)
        w += lee_weight_scalar(word[n + i]) + lee_weight_scalar((word[i] + word[n + i]) & 3);
      ++local[w];
      if (++idx == end) break;
      // Odometer step, last row fastest.
      for (std::size_t r = rows; r-- > 0;) {
        const Z4Vector& row = code.rows[r];
        if (++digit[r] < radix[r]) {
          for (std::size_t c = 0; c < rank; ++c) word[c] = (word[c] + row[c]) & 3;
          break;
        }
        // Wrapping to 0 removes radix - 1 copies of the row.
        digit[r] = 0;
        for (std::size_t c = 0; c < rank; ++c) word[c] = (word[c] + row[c] * (5 - radix[r])) & 3;
      }
    }
    std::lock_guard<std::mutex> lock(guard);
    for (const auto& [w, c] : local) out[w] += c;
  });
  return out;
}

}  // namespace negaz4
