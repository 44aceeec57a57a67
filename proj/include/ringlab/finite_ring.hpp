#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ringlab/memo.hpp"

namespace ringlab {

using Idx = std::uint32_t;
// Sorted list of element indices; the canonical form of a subset of a
// finite ring (and of a finite ideal).
using IdxSet = std::vector<Idx>;

inline constexpr std::size_t kMaxFiniteSize = 4096;

class FiniteRing;
using FiniteRingPtr = std::shared_ptr<const FiniteRing>;

// Finite commutative ring with 1 given by full addition and multiplication
// tables. Instances are immutable; every per-element predicate is computed
// once at construction.
class FiniteRing {
 public:
  struct Tables {
    std::size_t size = 0;
    std::vector<std::uint16_t> add;
    std::vector<std::uint16_t> mul;
    Idx zero = 0;
    Idx one = 0;
    std::vector<std::string> labels;
  };

  // Records how this ring was built, for the structure-aware helpers
  // (supports in products, liftings out of quotients).
  struct ProductLayout {
    std::vector<FiniteRingPtr> factors;
    std::vector<std::size_t> strides;  // index = sum coord_i * strides[i]
  };
  struct QuotientLink {
    FiniteRingPtr parent;
    std::vector<Idx> projection;       // parent index -> coset index
    std::vector<Idx> representatives;  // coset index -> least parent index
  };

  explicit FiniteRing(Tables t);

  std::size_t size() const { return n_; }
  Idx zero() const { return zero_; }
  Idx one() const { return one_; }
  Idx add(Idx a, Idx b) const { return add_[a * n_ + b]; }
  Idx mul(Idx a, Idx b) const { return mul_[a * n_ + b]; }
  Idx neg(Idx a) const { return neg_[a]; }
  Idx sub(Idx a, Idx b) const { return add(a, neg(b)); }
  Idx pow(Idx a, std::size_t k) const;
  // Sum of k copies of a (k may exceed the characteristic).
  Idx times(Idx a, std::size_t k) const;

  bool is_unit(Idx a) const { return unit_[a]; }
  bool is_zero_divisor(Idx a) const { return zero_divisor_[a]; }
  bool is_nilpotent(Idx a) const { return nil_index_[a] != 0; }
  bool is_idempotent(Idx a) const { return mul(a, a) == a; }
  // Least k >= 1 with a^k = 0, or 0 if a is not nilpotent.
  std::size_t nilpotency_index(Idx a) const { return nil_index_[a]; }
  const std::vector<Idx>& idempotents() const { return idempotents_; }
  bool is_zero_ring() const { return n_ == 1; }

  const std::string& label(Idx a) const { return labels_[a]; }
  // Accepts a label or "#k" for the raw index k.
  std::optional<Idx> parse(const std::string& s) const;

  const std::optional<ProductLayout>& layout() const { return layout_; }
  const std::optional<QuotientLink>& quotient_link() const { return link_; }
  void set_layout(ProductLayout l) { layout_ = std::move(l); }
  void set_quotient_link(QuotientLink l) { link_ = std::move(l); }

  // Exhaustive check of the commutative-ring-with-1 axioms; returns the
  // first violated law, if any. O(n^3).
  static std::optional<std::string> check_axioms(const Tables& t);

  const Memo& memo() const { return memo_; }

 private:
  std::size_t n_;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<Idx> neg_;
  Idx zero_, one_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Idx> by_label_;
  std::vector<bool> unit_, zero_divisor_;
  std::vector<std::size_t> nil_index_;
  std::vector<Idx> idempotents_;
  std::optional<ProductLayout> layout_;
  std::optional<QuotientLink> link_;
  Memo memo_;
};

namespace finite {

FiniteRingPtr zmod(std::size_t n);
// Field with q = p^k elements; elements are polynomials in t of degree < k
// modulo the first monic irreducible of degree k in lexicographic order.
FiniteRingPtr galois_field(std::size_t q);
FiniteRingPtr product(const std::vector<FiniteRingPtr>& factors);
FiniteRingPtr powerset(std::size_t ground);
// base[x]/(x^k)
FiniteRingPtr truncation(const FiniteRingPtr& base, std::size_t k);
// base[x]/(f) for monic f given by coefficients c0..c_{d-1} (leading 1 implied).
FiniteRingPtr poly_quotient(const FiniteRingPtr& base, const std::vector<Idx>& lower_coeffs);
// R / I where ideal is the full member set of an ideal.
FiniteRingPtr quotient(const FiniteRingPtr& ring, const IdxSet& ideal);
FiniteRingPtr from_tables(FiniteRing::Tables t);  // validated

// Set of elements of the product for given factor coordinates and back.
std::vector<Idx> split(const FiniteRing& product, Idx a);
Idx join(const FiniteRing& product, const std::vector<Idx>& coords);

}  // namespace finite

}  // namespace ringlab
