#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/bigint.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/lattice.hpp"
#include "ringlab/memo.hpp"

// Commutative rings whose additive group is finitely generated: Z^m modulo
// Lambda = diag(0,...,0,d_1,...,d_t), multiplication by structure constants.
namespace ringlab {

struct ZPresentation {
  std::size_t r = 0;  // free rank
  std::size_t t = 0;  // number of torsion generators
  IntVec d;           // torsion invariants, each >= 2
  IntVec unity;       // length m = r + t
  // mult[i][j] is the coordinate vector of b_i * b_j.
  std::vector<std::vector<IntVec>> mult;
  std::vector<std::string> names;  // optional display names of the basis
  std::size_t m() const { return r + t; }
};

struct Violation {
  std::string law;  // "shape", "commutativity", "associativity", "unity", "compatibility"
  std::vector<std::size_t> basis;
};

struct PresentationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

PresentationReport validate_presentation(const ZPresentation& p);

class ZAlgebra;
using ZAlgebraPtr = std::shared_ptr<const ZAlgebra>;

// R -> R/L for a lattice ideal L. project(x) = canon(x * map); lift rows give
// preimages of the new basis vectors in the old coordinates.
struct ZQuotient {
  ZAlgebraPtr ring;
  IntMat map;   // m x m'
  IntMat lift;  // m' x m
  IntVec project(const IntVec& x) const;
  // Lattice of the parent ring mapping into the given lattice of the quotient.
  Lattice pull_back(const Lattice& target) const;
};

class ZAlgebra {
 public:
  static constexpr std::size_t kMaxTorsion = 1u << 16;
  static constexpr std::size_t kMaxPrimitive = 16;

  // Throws AlgebraError listing the first violations.
  explicit ZAlgebra(ZPresentation p);

  const ZPresentation& presentation() const { return p_; }
  std::size_t r() const { return p_.r; }
  std::size_t t() const { return p_.t; }
  std::size_t m() const { return p_.r + p_.t; }
  const IntVec& torsion_invariants() const { return p_.d; }
  bool is_finite() const { return p_.r == 0; }
  bool is_zero_ring() const { return m() == 0; }
  Int torsion_order() const;
  Int exponent() const;  // lcm of the torsion invariants, 1 when t = 0

  const Lattice& relations() const { return lambda_; }

  IntVec canon(IntVec v) const;
  IntVec zero() const { return zero_vec(m()); }
  const IntVec& one() const { return p_.unity; }
  IntVec add(const IntVec& a, const IntVec& b) const;
  IntVec sub(const IntVec& a, const IntVec& b) const;
  IntVec neg(const IntVec& a) const;
  IntVec mul(const IntVec& a, const IntVec& b) const;
  IntVec pow(const IntVec& a, std::size_t k) const;
  IntVec scale(const IntVec& a, const Int& k) const;
  bool is_zero(const IntVec& a) const { return ringlab::is_zero(a); }
  bool in_torsion(const IntVec& a) const;

  // Row j is canon(f * b_j); x * f corresponds to row_times(x, M_f).
  IntMat mult_matrix(const IntVec& f) const;

  bool is_unit(const IntVec& f) const;
  bool is_zero_divisor(const IntVec& f) const;
  bool is_nilpotent(const IntVec& f) const;
  bool is_idempotent(const IntVec& f) const { return mul(f, f) == f; }
  // Least k >= 1 with f^k = 0, if f is nilpotent.
  std::optional<std::size_t> nilpotency_index(const IntVec& f) const;
  // Upper bound on every nilpotency index of this ring.
  std::size_t nilpotency_bound() const;

  // Ideals are lattices L with Lambda <= L <= Z^m.
  Lattice ideal(const IntMat& gens) const;
  Lattice principal(const IntVec& f) const { return ideal({f}); }
  Lattice annihilator(const IntVec& f) const;
  Lattice whole() const { return Lattice::full(m()); }
  bool is_ideal(const Lattice& l) const;

  // Elements with zero free part, in mixed-radix order (first torsion
  // coordinate fastest). CapacityError past kMaxTorsion.
  std::vector<IntVec> torsion_elements() const;
  // Free coordinates in [-H, H] ordered by max-norm then lexicographically
  // in the order 0, 1, -1, 2, -2, ...; every torsion value for each.
  std::vector<IntVec> sample(int height) const;

  // Rational algebra A = (R / torsion) (x) Q on the free coordinates.
  RatVec rational_mul(const RatVec& a, const RatVec& b) const;
  RatVec rational_one() const;
  // Z-basis of Rad(A) cap Z^r, from the trace form.
  IntMat rational_radical() const;
  // Primitive idempotents of A, sorted.
  std::vector<RatVec> rational_primitive_idempotents() const;

  // All idempotents of R, sorted. CapacityError beyond kMaxPrimitive
  // primitive rational idempotents.
  const std::vector<IntVec>& idempotents() const;

  std::string format(const IntVec& v) const { return to_string(v); }
  std::optional<IntVec> parse(const std::string& s) const;

  ZQuotient quotient(const Lattice& ideal) const;
  // Table ring of a finite (r = 0) algebra. Element index k corresponds to
  // torsion_elements()[k].
  FiniteRingPtr to_finite() const;
  std::size_t finite_index(const IntVec& v) const;

  const Memo& memo() const { return memo_; }

 private:
  ZPresentation p_;
  Lattice lambda_;
  mutable std::once_flag idem_once_;
  mutable std::vector<IntVec> idempotents_;
  Memo memo_;
};

ZAlgebraPtr make_zalgebra(ZPresentation p);

}  // namespace ringlab
