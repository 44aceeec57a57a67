#include "ringlab/poly.hpp"

#include <algorithm>
#include <random>

#include "ringlab/classify.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/finite_ops.hpp"

namespace ringlab {

namespace {

const FiniteRing& finite_base(const RingHandle& R) {
  if (!R.valid() || R.is_algebra()) throw SchemaError("polynomials need a finite table base");
  return R.table();
}

// Coefficient vectors indexed by the base table.
using Coeffs = std::vector<Idx>;

Coeffs convolve(const FiniteRing& F, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == F.zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  return out;
}

bool all_zero(const FiniteRing& F, const Coeffs& c) {
  return std::all_of(c.begin(), c.end(), [&](Idx x) { return x == F.zero(); });
}

std::size_t window_size(const FiniteRing& F, std::size_t window) {
  std::size_t total = 1;
  for (std::size_t i = 0; i <= window; ++i) {
    if (total > kPolyWindowBudget / F.size())
      throw CapacityError("|base|^" + std::to_string(window + 1) + " exceeds the polynomial window budget");
    total *= F.size();
  }
  return total;
}

// Coefficients of the k-th polynomial of degree <= window in mixed radix.
Coeffs nth_poly(const FiniteRing& F, std::size_t k, std::size_t window) {
  Coeffs c(window + 1);
  for (std::size_t i = 0; i <= window; ++i) {
    c[i] = static_cast<Idx>(k % F.size());
    k /= F.size();
  }
  return c;
}

}  // namespace

Poly::Poly(RingHandle base, std::vector<Element> coeffs) : base_(std::move(base)), coeffs_(std::move(coeffs)) {
  finite_base(base_);
  for (const Element& c : coeffs_) base_.check(c);
  while (!coeffs_.empty() && base_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

Poly Poly::from_indices(RingHandle base, const std::vector<Idx>& coeffs) {
  std::vector<Element> elems;
  for (Idx c : coeffs) elems.push_back(base.from_index(c));
  return Poly(std::move(base), std::move(elems));
}

std::vector<Idx> Poly::indices() const {
  std::vector<Idx> out;
  for (const Element& c : coeffs_) out.push_back(c.idx);
  return out;
}

std::string Poly::format() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (base_.is_zero(coeffs_[i])) continue;
    std::string term = base_.format(coeffs_[i]);
    if (i >= 1) term += "*x";
    if (i >= 2) term += "^" + std::to_string(i);
    out += (out.empty() ? "" : " + ") + term;
  }
  return out.empty() ? base_.format(base_.zero()) : out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (!a.base().same(b.base())) throw RingMismatch("polynomials over different bases");
  return Poly::from_indices(a.base(), convolve(a.base().table(), a.indices(), b.indices()));
}

Poly poly_add(const Poly& a, const Poly& b) {
  if (!a.base().same(b.base())) throw RingMismatch("polynomials over different bases");
  const FiniteRing& F = a.base().table();
  Coeffs x = a.indices(), y = b.indices();
  if (x.size() < y.size()) std::swap(x, y);
  for (std::size_t i = 0; i < y.size(); ++i) x[i] = F.add(x[i], y[i]);
  return Poly::from_indices(a.base(), x);
}

Poly poly_scale(const Poly& f, const Element& c) {
  f.base().check(c);
  return poly_mul(f, Poly(f.base(), {c}));
}

Element pp_annihilator_idempotent(const Poly& f) {
  const RingHandle& R = f.base();
  if (!predicate(R, "pp").verdict.is_true()) throw BaseNotPP(R.name() + " is not a p.p. ring");
  const FiniteRing& F = R.table();
  Idx e = F.one();
  for (Idx c : f.indices()) {
    auto gen = fin::idempotent_generator(F, fin::annihilator(F, c));
    if (!gen) throw BaseNotPP("Ann(" + F.label(c) + ") is not generated by an idempotent");
    e = F.mul(e, *gen);
  }
  return R.from_index(e);
}

BoundedAnnihilator poly_annihilator_bounded(const Poly& f, std::size_t window) {
  const RingHandle& R = f.base();
  const FiniteRing& F = R.table();
  const std::size_t total = window_size(F, window);
  const Coeffs fc = f.indices();

  BoundedAnnihilator out;
  out.window = window;
  for (std::size_t k = 0; k < total; ++k) {
    Coeffs g = nth_poly(F, k, window);
    if (all_zero(F, convolve(F, fc, g))) out.members.push_back(Poly::from_indices(R, g));
  }
  std::sort(out.members.begin(), out.members.end());

  IdxSet constants = fin::whole(F);
  for (Idx c : fc) constants = fin::intersect(constants, fin::annihilator(F, c));
  out.constants = Ideal(R, constants);
  const bool nonzero = std::any_of(out.members.begin(), out.members.end(), [](const Poly& g) { return !g.is_zero(); });
  if (nonzero)
    for (Idx c : constants)
      if (c != F.zero()) {
        out.mccoy_witness = R.from_index(c);
        break;
      }
  return out;
}

std::vector<Poly> idempotent_multiples(const RingHandle& base, const Element& e, std::size_t window) {
  const FiniteRing& F = finite_base(base);
  base.check(e);
  IdxSet eR;
  for (Idx x = 0; x < F.size(); ++x) eR.push_back(F.mul(e.idx, x));
  std::sort(eR.begin(), eR.end());
  eR.erase(std::unique(eR.begin(), eR.end()), eR.end());

  std::vector<Poly> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i <= window; ++i) {
    if (total > kPolyWindowBudget / eR.size()) throw CapacityError("idempotent multiples exceed the window budget");
    total *= eR.size();
  }
  for (std::size_t k = 0; k < total; ++k) {
    Coeffs c(window + 1);
    std::size_t r = k;
    for (std::size_t i = 0; i <= window; ++i) {
      c[i] = eR[r % eR.size()];
      r /= eR.size();
    }
    out.push_back(Poly::from_indices(base, c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool annihilator_matches_idempotent(const Poly& f, std::size_t window) {
  const Element e = pp_annihilator_idempotent(f);
  return poly_annihilator_bounded(f, window).members == idempotent_multiples(f.base(), e, window);
}

RingHandle truncated_ring(const RingHandle& R, std::size_t k) {
  finite_base(R);
  if (k == 0) throw SchemaError("truncation order must be >= 1");
  std::size_t size = 1;
  for (std::size_t i = 0; i < k; ++i) {
    size *= R.table().size();
    if (size > kMaxFiniteSize) throw CapacityError(R.name() + "[x]/(x^" + std::to_string(k) + ") is too large");
  }
  return RingHandle::from_table(finite::truncation(R.table_ptr(), k), Backend::table,
                                R.name() + "[x]/(x^" + std::to_string(k) + ")");
}

Verdict truncated_idempotents_check(const RingHandle& R, std::size_t k) {
  const RingHandle T = truncated_ring(R, k);
  const std::size_t m = R.table().size();
  // Element a of the truncation has constant term a mod m and is constant iff a < m.
  for (Idx e : T.table().idempotents())
    if (e >= m) return Verdict::no();
  return Verdict::of(T.table().idempotents().size() == R.table().idempotents().size());
}

Verdict theorem_v_reduced_check(const RingHandle& R, const PolyCheckOptions& opts) {
  const FiniteRing& F = finite_base(R);
  if (!predicate(R, "reduced").verdict.is_true()) throw NotReduced(R.name() + " is not reduced");

  std::size_t candidates = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i <= opts.max_degree && exhaustive; ++i) {
    if (candidates > opts.exhaustive_limit / F.size()) exhaustive = false;
    candidates *= F.size();
  }
  std::vector<Coeffs> polys;
  if (exhaustive) {
    for (std::size_t k = 0; k < candidates; ++k) polys.push_back(nth_poly(F, k, opts.max_degree));
  } else {
    std::mt19937 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, F.size() - 1);
    for (std::size_t s = 0; s < opts.sample_size; ++s) {
      Coeffs c(opts.max_degree + 1);
      for (Idx& x : c) x = static_cast<Idx>(pick(rng));
      polys.push_back(std::move(c));
    }
  }
  for (const Coeffs& c : polys)
    if (!annihilator_matches_idempotent(Poly::from_indices(R, c), opts.window)) return Verdict::no();
  return Verdict::yes();
}

}  // namespace ringlab
