#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/ideals.hpp"
#include "ringlab/report.hpp"
#include "ringlab/ring.hpp"

// Products indexed by a finite set X, ideals of the power-set ring P(X) and
// the ultra-ring R / I*.
namespace ringlab {

// Subsets of X = {1, ..., n} as bit masks, bit i standing for i + 1.
using Subset = std::uint32_t;
inline constexpr std::size_t kMaxGround = 16;

std::string format_subset(Subset s);

// An ideal of P(X). Every such ideal is the family of subsets of one Y, and
// that Y is the stored canonical form.
class SetIdeal {
 public:
  SetIdeal(std::size_t ground, Subset top);
  // The ideal generated by the given subsets (1-based members).
  static SetIdeal generated(std::size_t ground, const std::vector<std::vector<std::size_t>>& subsets);
  // All 2^n ideals of P(X), ordered by their masks.
  static std::vector<SetIdeal> all(std::size_t ground);

  std::size_t ground() const { return ground_; }
  Subset top() const { return top_; }
  bool contains(Subset s) const { return (s & ~top_) == 0; }
  std::vector<Subset> members() const;
  // "P({1,2})" style canonical form.
  std::string format() const;

  friend bool operator==(const SetIdeal& a, const SetIdeal& b) {
    return a.ground_ == b.ground_ && a.top_ == b.top_;
  }

 private:
  std::size_t ground_;
  Subset top_;
};

// Coordinates where f is nonzero. RingMismatch unless R is a table product.
Subset support(const RingHandle& R, const Element& f);

// {f : Su(f) in I} as an ideal of the product R.
Ideal star_ideal(const RingHandle& R, const SetIdeal& I);

struct UltraRing {
  std::vector<RingHandle> factors;
  SetIdeal ideal{0, 0};
  RingHandle product;
  Ideal star;
  RingHandle quotient;
  // The quotient matches the product of the factors outside Y, checked on
  // the tables.
  bool complement_isomorphic = false;
};

// CapacityError past the finite size budget.
UltraRing ultra_ring(const std::vector<RingHandle>& factors, const SetIdeal& I);

// Star ideal pure; factors reduced/pp/pf carry over to the quotient.
TheoremReport ultra_preservation_suite(const UltraRing& U);

}  // namespace ringlab
