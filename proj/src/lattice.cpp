#include "ringlab/lattice.hpp"

#include <algorithm>
#include <utility>

namespace ringlab {

namespace {

void axpy(IntVec& y, const Int& q, const IntVec& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] -= q * x[i];
}

}  // namespace

IntMat hnf(IntMat a, std::size_t ncols) {
  std::size_t row = 0;
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < ncols && row < n; ++col) {
    for (;;) {
      std::size_t pivot = n;
      for (std::size_t i = row; i < n; ++i) {
        if (a[i][col] == 0) continue;
        if (pivot == n || abs(a[i][col]) < abs(a[pivot][col])) pivot = i;
      }
      if (pivot == n) break;
      std::swap(a[row], a[pivot]);
      bool clean = true;
      for (std::size_t i = row + 1; i < n; ++i) {
        if (a[i][col] == 0) continue;
        Int q = floor_div(a[i][col], a[row][col]);
        axpy(a[i], q, a[row]);
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[row][col] == 0) continue;
    if (a[row][col] < 0)
      for (auto& x : a[row]) x = -x;
    for (std::size_t i = 0; i < row; ++i) {
      if (a[i][col] == 0) continue;
      Int q = floor_div(a[i][col], a[row][col]);
      axpy(a[i], q, a[row]);
    }
    ++row;
  }
  a.resize(row);
  return a;
}

IntMat left_kernel(const IntMat& a, std::size_t ncols) {
  const std::size_t k = a.size();
  IntMat aug(k, IntVec(ncols + k, Int(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) aug[i][j] = a[i][j];
    aug[i][ncols + i] = 1;
  }
  IntMat h = hnf(std::move(aug), ncols + k);
  IntMat out;
  for (auto& r : h) {
    bool zero_head = true;
    for (std::size_t j = 0; j < ncols; ++j)
      if (r[j] != 0) {
        zero_head = false;
        break;
      }
    if (zero_head) out.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(ncols), r.end());
  }
  return out;
}

SmithForm smith(const IntMat& a, std::size_t ncols) {
  IntMat d = a;
  const std::size_t k = d.size();
  const std::size_t m = ncols;
  SmithForm out;
  out.q.assign(m, IntVec(m, Int(0)));
  out.q_inv.assign(m, IntVec(m, Int(0)));
  for (std::size_t i = 0; i < m; ++i) out.q[i][i] = out.q_inv[i][i] = 1;

  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& r : d) std::swap(r[i], r[j]);
    for (auto& r : out.q) std::swap(r[i], r[j]);
    std::swap(out.q_inv[i], out.q_inv[j]);
  };
  // col_j -= q * col_t
  auto col_op = [&](std::size_t j, std::size_t t, const Int& q) {
    for (auto& r : d) r[j] -= q * r[t];
    for (auto& r : out.q) r[j] -= q * r[t];
    for (std::size_t c = 0; c < m; ++c) out.q_inv[t][c] += q * out.q_inv[j][c];
  };

  const std::size_t lim = std::min(k, m);
  for (std::size_t t = 0; t < lim; ++t) {
    for (;;) {
      std::size_t bi = k, bj = m;
      for (std::size_t i = t; i < k; ++i)
        for (std::size_t j = t; j < m; ++j)
          if (d[i][j] != 0 && (bi == k || abs(d[i][j]) < abs(d[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == k) break;
      std::swap(d[t], d[bi]);
      swap_cols(t, bj);

      bool changed = false;
      for (std::size_t i = t + 1; i < k; ++i) {
        if (d[i][t] == 0) continue;
        Int q = floor_div(d[i][t], d[t][t]);
        axpy(d[i], q, d[t]);
        if (d[i][t] != 0) changed = true;
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        if (d[t][j] == 0) continue;
        Int q = floor_div(d[t][j], d[t][t]);
        col_op(j, t, q);
        if (d[t][j] != 0) changed = true;
      }
      if (changed) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < k && divisible; ++i)
        for (std::size_t j = t + 1; j < m; ++j)
          if (d[i][j] % d[t][t] != 0) {
            for (std::size_t c = 0; c < m; ++c) d[t][c] += d[i][c];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d[t][t] < 0)
      for (auto& x : d[t]) x = -x;
  }
  out.invariants.assign(m, Int(0));
  for (std::size_t i = 0; i < lim; ++i) out.invariants[i] = d[i][i];
  return out;
}

IntVec row_times(const IntVec& x, const IntMat& m, std::size_t ncols) {
  IntVec out(ncols, Int(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < ncols; ++j) out[j] += x[i] * m[i][j];
  }
  return out;
}

Lattice Lattice::span(const IntMat& gens, std::size_t dim) {
  Lattice l(dim);
  l.basis_ = hnf(gens, dim);
  return l;
}

Lattice Lattice::full(std::size_t dim) {
  IntMat id(dim, IntVec(dim, Int(0)));
  for (std::size_t i = 0; i < dim; ++i) id[i][i] = 1;
  Lattice l(dim);
  l.basis_ = std::move(id);
  return l;
}

bool Lattice::is_full() const {
  if (basis_.size() != dim_) return false;
  for (std::size_t i = 0; i < dim_; ++i)
    if (basis_[i][i] != 1) return false;
  return true;
}

bool Lattice::contains(const IntVec& v0) const {
  IntVec v = v0;
  for (const auto& row : basis_) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    if (v[c] == 0) continue;
    if (v[c] % row[c] != 0) return false;
    Int q = v[c] / row[c];
    axpy(v, q, row);
  }
  return ringlab::is_zero(v);
}

IntVec Lattice::reduce(IntVec v) const {
  for (const auto& row : basis_) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    Int q = floor_div(v[c], row[c]);
    if (q != 0) axpy(v, q, row);
  }
  return v;
}

Lattice Lattice::operator+(const Lattice& other) const {
  IntMat rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span(rows, dim_);
}

Lattice Lattice::intersect(const Lattice& other) const {
  // Rows (b, b) for b in this, (c, 0) for c in other; rows of the HNF with a
  // zero head carry a basis of the intersection in their tail.
  IntMat rows;
  for (const auto& b : basis_) {
    IntVec r(2 * dim_, Int(0));
    for (std::size_t i = 0; i < dim_; ++i) r[i] = r[dim_ + i] = b[i];
    rows.push_back(std::move(r));
  }
  for (const auto& c : other.basis_) {
    IntVec r(2 * dim_, Int(0));
    for (std::size_t i = 0; i < dim_; ++i) r[i] = c[i];
    rows.push_back(std::move(r));
  }
  IntMat h = hnf(std::move(rows), 2 * dim_);
  IntMat tail;
  for (auto& r : h) {
    bool zero_head = true;
    for (std::size_t i = 0; i < dim_; ++i)
      if (r[i] != 0) {
        zero_head = false;
        break;
      }
    if (zero_head) tail.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(dim_), r.end());
  }
  return span(tail, dim_);
}

bool Lattice::subset_of(const Lattice& other) const {
  for (const auto& b : basis_)
    if (!other.contains(b)) return false;
  return true;
}

Lattice Lattice::saturation() const {
  // The saturation is the kernel of the map dual to a complement; compute
  // it as the left kernel of the right kernel.
  if (basis_.empty()) return Lattice(dim_);
  IntMat transposed(dim_, IntVec(basis_.size(), Int(0)));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < dim_; ++j) transposed[j][i] = basis_[i][j];
  // right kernel of basis = left kernel of transpose
  IntMat perp = left_kernel(transposed, basis_.size());
  if (perp.empty()) return full(dim_);
  IntMat perp_t(dim_, IntVec(perp.size(), Int(0)));
  for (std::size_t i = 0; i < perp.size(); ++i)
    for (std::size_t j = 0; j < dim_; ++j) perp_t[j][i] = perp[i][j];
  return span(left_kernel(perp_t, perp.size()), dim_);
}

Lattice Lattice::scaled(const Int& k) const {
  IntMat rows = basis_;
  for (auto& r : rows)
    for (auto& x : r) x *= k;
  return span(rows, dim_);
}

Lattice preimage(const IntMat& map, const Lattice& target) {
  const std::size_t n = map.size();
  const std::size_t m = target.dim();
  IntMat stacked = map;
  for (const auto& b : target.basis()) stacked.push_back(b);
  IntMat ker = left_kernel(stacked, m);
  IntMat head;
  head.reserve(ker.size());
  for (auto& r : ker) head.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
  return Lattice::span(head, n);
}

}  // namespace ringlab
