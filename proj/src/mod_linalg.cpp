#include "acdkit/mod_linalg.hpp"

#include <utility>

#include "acdkit/number_theory.hpp"

namespace acdkit {

namespace {

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) { return a >= b ? a - b : a + q - b; }
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) { return sub_mod(a, q - b, q); }

}  // namespace

std::vector<std::size_t> rref(ModMatrix& rows, std::uint64_t q) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const std::uint64_t inv = inv_mod(rows[r][c], q);
    for (auto& x : rows[r]) x = mul_mod(x, inv, q);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        rows[i][k] = sub_mod(rows[i][k], mul_mod(f, rows[r][k], q), q);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

ModMatrix nullspace(const ModMatrix& a, std::size_t cols, std::uint64_t q) {
  ModMatrix m = a;
  const std::vector<std::size_t> pivots = rref(m, q);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  ModMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ModVector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (q - m[r][free]) % q;
    basis.push_back(std::move(v));
  }
  return basis;
}

ModVector apply(const ModMatrix& a, const ModVector& v, std::uint64_t q) {
  ModVector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    unsigned __int128 acc = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      acc += static_cast<unsigned __int128>(a[i][k]) * v[k];
      acc %= q;
    }
    out[i] = static_cast<std::uint64_t>(acc);
  }
  return out;
}

ModVector characteristic_polynomial(ModMatrix h, std::uint64_t q) {
  const std::size_t n = h.size();
  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const std::uint64_t inv = inv_mod(h[m][m - 1], q);
    for (std::size_t r = m + 1; r < n; ++r) {
      const std::uint64_t u = mul_mod(h[r][m - 1], inv, q);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[r][c] = sub_mod(h[r][c], mul_mod(u, h[m][c], q), q);
      for (std::size_t c = 0; c < n; ++c) h[c][m] = add_mod(h[c][m], mul_mod(u, h[c][r], q), q);
    }
  }
  // p_k is the characteristic polynomial of the leading k x k block.
  std::vector<ModVector> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    ModVector next(m + 1, 0);
    const std::uint64_t diag = h[m - 1][m - 1];
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      next[k + 1] = add_mod(next[k + 1], p[m - 1][k], q);
      next[k] = sub_mod(next[k], mul_mod(diag, p[m - 1][k], q), q);
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mul_mod(t, h[m - i][m - i - 1], q);
      const std::uint64_t coef = mul_mod(t, h[m - i - 1][m - 1], q);
      if (coef == 0) continue;
      const ModVector& lower = p[m - i - 1];
      for (std::size_t k = 0; k < lower.size(); ++k) next[k] = sub_mod(next[k], mul_mod(coef, lower[k], q), q);
    }
    p[m] = std::move(next);
  }
  return p[n];
}

std::uint64_t evaluate(const ModVector& poly, std::uint64_t x, std::uint64_t q) {
  std::uint64_t acc = 0;
  for (std::size_t k = poly.size(); k-- > 0;) acc = add_mod(mul_mod(acc, x, q), poly[k], q);
  return acc;
}

std::vector<std::uint64_t> roots(const ModVector& poly, std::uint64_t q) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < q; ++x) {
    if (evaluate(poly, x, q) == 0) out.push_back(x);
  }
  return out;
}

}  // namespace acdkit
