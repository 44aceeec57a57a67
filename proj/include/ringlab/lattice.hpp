#pragma once

#include <cstddef>

#include "ringlab/bigint.hpp"

// Exact integer lattice algebra: Hermite and Smith normal forms, kernels,
// and sublattices of Z^n in canonical (HNF) form.
namespace ringlab {

// Row-style Hermite normal form: pivots strictly increase by column, are
// positive, entries above a pivot lie in [0, pivot), zero rows are dropped.
IntMat hnf(IntMat rows, std::size_t ncols);

// Basis of the left kernel {x in Z^k : x * a = 0} of a k x ncols matrix.
IntMat left_kernel(const IntMat& a, std::size_t ncols);

// P * a * Q = diag(invariants) with invariants[i] | invariants[i+1] for the
// nonzero part. q_inv is the inverse of q. invariants has one entry per
// column; entries past the rank are 0.
struct SmithForm {
  std::vector<Int> invariants;
  IntMat q;
  IntMat q_inv;
};
SmithForm smith(const IntMat& a, std::size_t ncols);

IntVec row_times(const IntVec& x, const IntMat& m, std::size_t ncols);

class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t dim) : dim_(dim) {}

  static Lattice span(const IntMat& gens, std::size_t dim);
  static Lattice full(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const IntMat& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const;

  bool contains(const IntVec& v) const;
  // Canonical representative of v modulo the lattice.
  IntVec reduce(IntVec v) const;

  Lattice operator+(const Lattice& other) const;
  Lattice intersect(const Lattice& other) const;
  bool subset_of(const Lattice& other) const;
  // Smallest saturated lattice containing this one: (Q-span) cap Z^n.
  Lattice saturation() const;
  Lattice scaled(const Int& k) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }
  friend bool operator<(const Lattice& a, const Lattice& b) {
    if (a.basis_.size() != b.basis_.size()) return a.basis_.size() < b.basis_.size();
    return a.basis_ < b.basis_;
  }

 private:
  std::size_t dim_ = 0;
  IntMat basis_;
};

// {x in Z^rows(map) : x * map in target}
Lattice preimage(const IntMat& map, const Lattice& target);

}  // namespace ringlab
