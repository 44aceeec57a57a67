#include "ringlab/rational.hpp"

#include <utility>

namespace ringlab {

std::optional<RatVec> solve_in_span(const std::vector<RatVec>& vecs, const RatVec& target) {
  const std::size_t n = target.size();
  const std::size_t k = vecs.size();
  // Augmented system: n equations, k unknowns.
  RatMat a(n, RatVec(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = vecs[j][i];
    a[i][k] = target[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[row], a[p]);
    Rat inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (a[i][k] != 0) return std::nullopt;
  RatVec coeffs(k);
  for (std::size_t i = 0; i < row; ++i) coeffs[pivot_col[i]] = a[i][k];
  return coeffs;
}

std::size_t rank(RatMat a) {
  if (a.empty()) return 0;
  const std::size_t n = a.size();
  const std::size_t m = a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[row], a[p]);
    for (std::size_t i = row + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] / a[row][col];
      for (std::size_t j = col; j < m; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
  }
  return row;
}

IntMat integral_rows(const RatMat& rows) {
  IntMat out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    Int den = 1;
    for (const auto& x : r) den = lcm(den, x.get_den());
    IntVec v;
    v.reserve(r.size());
    Int content = 0;
    for (const auto& x : r) {
      Rat scaled = x * den;
      v.push_back(scaled.get_num());
      content = gcd(content, v.back());
    }
    if (content > 1)
      for (auto& x : v) x /= content;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace ringlab
