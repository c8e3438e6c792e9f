#ifndef GSC_DETAIL_MOD_PRIME_HPP
#define GSC_DETAIL_MOD_PRIME_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace gsc::detail {

/// Arithmetic in F_p for the Mersenne prime p = 2^61 - 1.
struct ModPrime {
  using u64 = std::uint64_t;
  static constexpr u64 p = (u64{1} << 61) - 1;

  static u64 add(u64 a, u64 b) {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  static u64 sub(u64 a, u64 b) { return a >= b ? a - b : a + p - b; }
  static u64 mul(u64 a, u64 b) {
    const unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    u64 lo = static_cast<u64>(t & p) + static_cast<u64>(t >> 61);
    return lo >= p ? lo - p : lo;
  }
  static u64 pow(u64 a, u64 e) {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  static u64 inv(u64 a) { return pow(a, p - 2); }

  static u64 from_signed(long long v) {
    return v >= 0 ? static_cast<u64>(v) % p : p - (static_cast<u64>(-v) % p);
  }
  /// Representative in (-p/2, p/2].
  static long long to_signed(u64 v) {
    return v > p / 2 ? -static_cast<long long>(p - v) : static_cast<long long>(v);
  }
};

using ModVec = std::vector<std::uint64_t>;
using ModMat = std::vector<ModVec>;  // row-major list of rows

/// Reduced row echelon form in place; returns the pivot column of each
/// surviving row (zero rows are dropped).
inline std::vector<std::size_t> rref(ModMat& rows) {
  using F = ModPrime;
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const auto inv = F::inv(rows[r][c]);
    for (auto& x : rows[r]) x = F::mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const auto f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = F::sub(rows[i][j], F::mul(f, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// Basis of {x : A x = 0} for a square matrix A.
inline ModMat nullspace(ModMat a) {
  using F = ModPrime;
  const std::size_t n = a.size();
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  ModMat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    ModVec x(n, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = F::sub(0, a[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Coefficients c_0..c_n of det(x - A) via reduction to Hessenberg form.
inline ModVec char_poly(ModMat h) {
  using F = ModPrime;
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h[i][j] == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (auto& row : h) std::swap(row[i], row[j + 1]);
    }
    const auto inv = F::inv(h[j + 1][j]);
    for (std::size_t k = j + 2; k < n; ++k) {
      const auto u = F::mul(h[k][j], inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[k][c] = F::sub(h[k][c], F::mul(u, h[j + 1][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = F::add(h[r][j + 1], F::mul(u, h[r][k]));
    }
  }
  // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_i h[m-1-i][m-1] prod_{t=m-i}^{m-1} h[t][t-1] p_{m-1-i}
  std::vector<ModVec> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    ModVec cur(m + 1, 0);
    for (std::size_t d = 0; d < p[m - 1].size(); ++d) {
      cur[d + 1] = F::add(cur[d + 1], p[m - 1][d]);
      cur[d] = F::sub(cur[d], F::mul(h[m - 1][m - 1], p[m - 1][d]));
    }
    std::uint64_t prod = 1;
    for (std::size_t i = 1; i < m; ++i) {
      prod = F::mul(prod, h[m - i][m - i - 1]);
      const auto coef = F::mul(h[m - 1 - i][m - 1], prod);
      if (coef == 0) continue;
      for (std::size_t d = 0; d < p[m - 1 - i].size(); ++d)
        cur[d] = F::sub(cur[d], F::mul(coef, p[m - 1 - i][d]));
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

inline std::uint64_t eval_poly(const ModVec& c, std::uint64_t x) {
  using F = ModPrime;
  std::uint64_t r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = F::add(F::mul(r, x), c[i]);
  return r;
}

}  // namespace gsc::detail

#endif  // GSC_DETAIL_MOD_PRIME_HPP
