#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/lattice.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/verdict.hpp"

namespace ringlab {

// Finitely generated ideal in normal form: the sorted member set on table
// backends, the HNF lattice (containing the relation lattice) on the
// Z-algebra backend.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingHandle ring, IdxSet members);
  Ideal(RingHandle ring, Lattice lattice);

  const RingHandle& ring() const { return ring_; }
  bool is_lattice() const { return ring_.is_algebra(); }
  const IdxSet& members() const;
  const Lattice& lattice() const;

  std::vector<Element> generators() const;
  bool contains(const Element& f) const;
  bool is_whole() const;
  bool is_zero() const;
  // "(g1, g2, ...)" in element syntax; "(0)" for the zero ideal.
  std::string format() const;

  friend bool operator==(const Ideal& a, const Ideal& b);
  friend bool operator<(const Ideal& a, const Ideal& b);

 private:
  RingHandle ring_;
  IdxSet members_;
  Lattice lattice_;
};

Ideal ideal_from_generators(const RingHandle& R, const std::vector<Element>& gens);
Ideal zero_ideal(const RingHandle& R);
Ideal whole_ideal(const RingHandle& R);

enum class IdealOrder { equal, leq, geq, incomparable };
std::string to_string(IdealOrder o);
IdealOrder ideal_compare(const Ideal& I, const Ideal& J);
bool is_subset(const Ideal& I, const Ideal& J);

enum class IdealOp { sum, product, intersect };
Ideal ideal_algebra(IdealOp op, const Ideal& I, const Ideal& J);

Ideal annihilator(const RingHandle& R, const Element& f);

struct Stabilized {
  std::size_t n = 1;
  Ideal ideal;
};
Stabilized annihilator_power_stabilized(const RingHandle& R, const Element& f);

struct ColonSaturation {
  Ideal quotient;
  Ideal saturation;
};
ColonSaturation colon_saturation(const Ideal& I, const Element& f);

Ideal nilradical(const RingHandle& R);

struct PurityClass {
  Verdict pure;
  Verdict quasi_pure;
  Verdict regular;
  std::optional<Element> idempotent_generator;
  // First member (or generator) refuting each property, when one exists.
  std::optional<Element> pure_refuter;
  std::optional<Element> quasi_pure_refuter;
  std::optional<Element> regular_refuter;
};
PurityClass purity_class(const Ideal& I);

// The canonical map R -> R/I with a section on elements.
class QuotientMap {
 public:
  QuotientMap(const Ideal& kernel);
  const RingHandle& ring() const { return ring_; }
  Element project(const RingHandle& parent, const Element& x) const;
  Element lift(const RingHandle& parent, const Element& y) const;
  Ideal pull_back(const RingHandle& parent, const Ideal& J) const;

 private:
  RingHandle ring_;
  const void* parent_ = nullptr;
  std::vector<Idx> projection_, representatives_;
  std::optional<ZQuotient> zq_;
};

RingHandle quotient_ring(const RingHandle& R, const Ideal& I);
// R -> R / N(R), computed once per ring.
const QuotientMap& mod_nil(const RingHandle& R);
// Idempotent of R reducing to the given idempotent of mod_nil(R).ring().
Element lift_idempotent_mod_nil(const RingHandle& R, const Element& cls);

}  // namespace ringlab
