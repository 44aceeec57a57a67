#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/ideals.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/verdict.hpp"

// Polynomials over finite base rings. R[x] is infinite, so claims about it
// are checked on bounded degree windows and on truncations R[x]/(x^k).
namespace ringlab {

class Poly {
 public:
  // Trailing zero coefficients are trimmed. Throws SchemaError on an
  // infinite base and RingMismatch on foreign coefficients.
  Poly(RingHandle base, std::vector<Element> coeffs);
  static Poly from_indices(RingHandle base, const std::vector<Idx>& coeffs);

  const RingHandle& base() const { return base_; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Index of the last nonzero coefficient; 0 for the zero polynomial.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::vector<Idx> indices() const;

  // "c0 + c1*x + c2*x^2", zero terms omitted.
  std::string format() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const Poly& a, const Poly& b) { return a.indices() < b.indices(); }

 private:
  RingHandle base_;
  std::vector<Element> coeffs_;
};

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
// c * f for a constant c.
Poly poly_scale(const Poly& f, const Element& c);

// e = product of the idempotent generators of Ann(f_i), so that
// Ann_{R[x]}(f) = e R[x]. BaseNotPP unless the base is p.p.
Element pp_annihilator_idempotent(const Poly& f);

struct BoundedAnnihilator {
  std::size_t window = 0;
  std::vector<Poly> members;  // every g with deg g <= window and fg = 0, sorted
  Ideal constants;            // the intersection of Ann(f_i)
  // A nonzero constant c with cf = 0, present when members has a nonzero entry
  // and such a constant exists.
  std::optional<Element> mccoy_witness;
};

inline constexpr std::size_t kPolyWindowBudget = std::size_t{1} << 20;

// Exhaustive scan. CapacityError when |base|^(window+1) exceeds the budget.
BoundedAnnihilator poly_annihilator_bounded(const Poly& f, std::size_t window);

// Polynomials of degree <= window with every coefficient in eR, sorted.
std::vector<Poly> idempotent_multiples(const RingHandle& base, const Element& e, std::size_t window);

// True when the bounded annihilator of f equals the e-multiples for
// e = pp_annihilator_idempotent(f).
bool annihilator_matches_idempotent(const Poly& f, std::size_t window);

// R[x]/(x^k) as a table ring. CapacityError beyond kMaxFiniteSize elements.
RingHandle truncated_ring(const RingHandle& R, std::size_t k);
// Every idempotent of R[x]/(x^k) is constant and there are exactly as many
// as in R.
Verdict truncated_idempotents_check(const RingHandle& R, std::size_t k);

struct PolyCheckOptions {
  std::size_t max_degree = 2;
  std::size_t window = 4;
  // Above this many candidate polynomials f, a seeded sample is used.
  std::size_t exhaustive_limit = 4096;
  std::size_t sample_size = 64;
  unsigned seed = 1;
};

// On a reduced finite base, the bounded annihilator of every polynomial
// checked equals the multiples of its annihilator idempotent. NotReduced
// otherwise.
Verdict theorem_v_reduced_check(const RingHandle& R, const PolyCheckOptions& opts = {});

}  // namespace ringlab
