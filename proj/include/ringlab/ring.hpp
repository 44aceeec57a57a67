#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/bigint.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/memo.hpp"
#include "ringlab/zalgebra.hpp"

namespace ringlab {

enum class Backend { zmod, table, product, quotient, powerset, zalgebra };
std::string to_string(Backend b);

// An element of a particular RingHandle: a table index on finite backends,
// a canonical coordinate vector on the Z-algebra backend.
struct Element {
  Idx idx = 0;
  IntVec v;
  const void* owner = nullptr;

  friend bool operator==(const Element& a, const Element& b) {
    return a.owner == b.owner && a.idx == b.idx && a.v == b.v;
  }
  friend bool operator<(const Element& a, const Element& b) {
    return a.idx != b.idx ? a.idx < b.idx : a.v < b.v;
  }
};

class RingHandle {
 public:
  RingHandle() = default;
  static RingHandle from_table(FiniteRingPtr ring, Backend kind, std::string name);
  static RingHandle from_algebra(ZAlgebraPtr ring, std::string name);

  bool valid() const { return impl_ != nullptr; }
  Backend backend() const;
  bool is_algebra() const { return backend() == Backend::zalgebra; }
  // True when the ring has finitely many elements, whatever the backend.
  bool is_finite() const;
  std::optional<std::size_t> size() const;
  const std::string& name() const;
  const FiniteRing& table() const;
  const FiniteRingPtr& table_ptr() const;
  const ZAlgebra& algebra() const;
  const ZAlgebraPtr& algebra_ptr() const;

  Element zero() const;
  Element one() const;
  Element from_index(Idx i) const;
  Element from_vector(IntVec v) const;
  // Table backends accept labels and "#k"; the Z-algebra backend accepts
  // "[c1,...,cm]", an integer n (meaning n*1) or a basis name.
  Element parse(const std::string& text) const;
  std::string format(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::size_t k) const;
  bool is_zero(const Element& a) const;

  // Every element once; InfiniteRing when the ring is infinite.
  std::vector<Element> enumerate() const;
  // Free coordinates bounded by height; identical to enumerate() on finite rings.
  std::vector<Element> sample(int height) const;

  // Throws RingMismatch unless a belongs to this ring.
  void check(const Element& a) const;
  const void* identity() const;
  bool same(const RingHandle& other) const { return identity() == other.identity(); }
  const Memo& memo() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

struct ElementPredicates {
  bool is_unit = false;
  bool is_zero_divisor = false;
  bool is_nilpotent = false;
  bool is_idempotent = false;
};

ElementPredicates element_predicates(const RingHandle& R, const Element& f);
std::vector<Element> idempotents(const RingHandle& R);

}  // namespace ringlab
