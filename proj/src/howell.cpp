#include "negaz4/howell.hpp"

#include <algorithm>
#include <stdexcept>

namespace negaz4 {

namespace {

bool is_zero(const Z4Vector& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

// v -= a * w, touching only columns >= from.
void axpy_sub(Z4Vector& v, std::uint8_t a, const Z4Vector& w, std::size_t from) {
  for (std::size_t i = from; i < v.size(); ++i) v[i] = (v[i] + 4 * 4 - a * w[i]) & 3;
}

void drop_zero_rows(std::vector<Z4Vector>& rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero), rows.end());
}

Z4Vector take(std::vector<Z4Vector>& rows, std::size_t i) {
  Z4Vector r = std::move(rows[i]);
  rows[i] = std::move(rows.back());
  rows.pop_back();
  return r;
}

}  // namespace

std::size_t leading_index(std::span<const std::uint8_t> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) return i;
  return v.size();
}

std::vector<Z4Vector> howell_form(std::vector<Z4Vector> rows, std::size_t cols) {
  for (auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("row length differs from column count");
    for (auto& x : r) x &= 3;
  }
  drop_zero_rows(rows);

  std::vector<Z4Vector> out;
  for (std::size_t c = 0; c < cols && !rows.empty(); ++c) {
    auto unit = std::find_if(rows.begin(), rows.end(), [c](const Z4Vector& r) { return r[c] & 1; });
    if (unit != rows.end()) {
      Z4Vector piv = take(rows, static_cast<std::size_t>(unit - rows.begin()));
      if (piv[c] == 3)
        for (std::size_t i = c; i < cols; ++i) piv[i] = (piv[i] * 3) & 3;
      for (auto& w : rows)
        if (w[c]) axpy_sub(w, w[c], piv, c);
      drop_zero_rows(rows);
      out.push_back(std::move(piv));
      continue;
    }
    auto two = std::find_if(rows.begin(), rows.end(), [c](const Z4Vector& r) { return r[c] == 2; });
    if (two == rows.end()) continue;
    Z4Vector piv = take(rows, static_cast<std::size_t>(two - rows.begin()));
    for (auto& w : rows)
      if (w[c] == 2) axpy_sub(w, 1, piv, c);
    // 2*piv vanishes at column c but may be needed further right.
    Z4Vector dbl(cols, 0);
    for (std::size_t i = c + 1; i < cols; ++i) dbl[i] = (piv[i] * 2) & 3;
    if (!is_zero(dbl)) rows.push_back(std::move(dbl));
    drop_zero_rows(rows);
    out.push_back(std::move(piv));
  }

  // Reduce entries above each pivot modulo the pivot value.
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t c = leading_index(out[i]);
    const std::uint8_t p = out[i][c];
    for (std::size_t h = 0; h < i; ++h) {
      const std::uint8_t above = out[h][c];
      if (p == 1 && above) axpy_sub(out[h], above, out[i], c);
      if (p == 2 && above >= 2) axpy_sub(out[h], 1, out[i], c);
    }
  }
  return out;
}

Z4Vector howell_reduce(const std::vector<Z4Vector>& howell, Z4Vector v) {
  for (const Z4Vector& r : howell) {
    const std::size_t c = leading_index(r);
    const std::size_t lv = leading_index(v);
    if (lv < c) return v;
    const std::uint8_t a = v[c];
    if (a == 0) continue;
    if (r[c] == 1) {
      axpy_sub(v, a, r, c);
    } else {
      if (a & 1) return v;
      axpy_sub(v, a / 2, r, c);
    }
  }
  return v;
}

std::optional<Z4Vector> solve_z4(const std::vector<Z4Vector>& columns, const Z4Vector& rhs) {
  const std::size_t e = rhs.size();
  const std::size_t vars = columns.size();
  std::vector<Z4Vector> rows;
  rows.reserve(vars);
  for (std::size_t j = 0; j < vars; ++j) {
    if (columns[j].size() != e) throw std::invalid_argument("column length differs from rhs");
    Z4Vector r(e + vars, 0);
    std::copy(columns[j].begin(), columns[j].end(), r.begin());
    r[e + j] = 1;
    rows.push_back(std::move(r));
  }
  const std::vector<Z4Vector> h = howell_form(std::move(rows), e + vars);

  Z4Vector v(e + vars, 0);
  std::copy(rhs.begin(), rhs.end(), v.begin());
  for (auto& x : v) x &= 3;
  for (const Z4Vector& r : h) {
    const std::size_t c = leading_index(r);
    if (c >= e) break;
    const std::size_t lv = leading_index(std::span<const std::uint8_t>(v).first(e));
    if (lv < c) return std::nullopt;
    const std::uint8_t a = v[c];
    if (a == 0) continue;
    if (r[c] == 1) {
      axpy_sub(v, a, r, c);
    } else {
      if (a & 1) return std::nullopt;
      axpy_sub(v, a / 2, r, c);
    }
  }
  if (leading_index(std::span<const std::uint8_t>(v).first(e)) < e) return std::nullopt;

  Z4Vector x(vars);
  for (std::size_t j = 0; j < vars; ++j) x[j] = (4 - v[e + j]) & 3;

  Z4Vector check(e, 0);
  for (std::size_t j = 0; j < vars; ++j)
    for (std::size_t i = 0; i < e; ++i) check[i] = (check[i] + x[j] * columns[j][i]) & 3;
  Z4Vector want = rhs;
  for (auto& w : want) w &= 3;
  if (check != want) throw std::logic_error("linear solve produced a wrong solution");
  return x;
}

std::vector<Z4Vector> kernel_z4(const std::vector<Z4Vector>& equations, std::size_t vars) {
  const std::size_t e = equations.size();
  std::vector<Z4Vector> rows;
  rows.reserve(vars);
  for (std::size_t j = 0; j < vars; ++j) {
    Z4Vector r(e + vars, 0);
    for (std::size_t i = 0; i < e; ++i) {
      if (equations[i].size() != vars) throw std::invalid_argument("equation length differs from variable count");
      r[i] = equations[i][j] & 3;
    }
    r[e + j] = 1;
    rows.push_back(std::move(r));
  }
  const std::vector<Z4Vector> h = howell_form(std::move(rows), e + vars);
  std::vector<Z4Vector> tail;
  for (const Z4Vector& r : h) {
    if (leading_index(r) < e) continue;
    tail.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(e), r.end());
  }
  return howell_form(std::move(tail), vars);
}

}  // namespace negaz4
