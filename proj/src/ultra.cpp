#include "ringlab/ultra.hpp"

#include "ringlab/errors.hpp"

namespace ringlab {

std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < kMaxGround; ++i)
    if (s >> i & 1u) {
      out += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
  return out + "}";
}

SetIdeal::SetIdeal(std::size_t ground, Subset top) : ground_(ground), top_(top) {
  if (ground > kMaxGround) throw CapacityError("ground set larger than " + std::to_string(kMaxGround));
  if (ground < 32 && (top >> ground) != 0) throw SchemaError("subset outside the ground set");
}

SetIdeal SetIdeal::generated(std::size_t ground, const std::vector<std::vector<std::size_t>>& subsets) {
  Subset top = 0;
  for (const auto& s : subsets)
    for (std::size_t x : s) {
      if (x < 1 || x > ground) throw SchemaError("subset member " + std::to_string(x) + " outside the ground set");
      top |= Subset{1} << (x - 1);
    }
  return SetIdeal(ground, top);
}

std::vector<SetIdeal> SetIdeal::all(std::size_t ground) {
  std::vector<SetIdeal> out;
  for (Subset y = 0; y < (Subset{1} << ground); ++y) out.emplace_back(ground, y);
  return out;
}

std::vector<Subset> SetIdeal::members() const {
  // Submasks of top, increasing.
  std::vector<Subset> out;
  for (Subset s = 0; s <= top_; ++s)
    if (contains(s)) out.push_back(s);
  return out;
}

std::string SetIdeal::format() const { return "P(" + format_subset(top_) + ")"; }

Subset support(const RingHandle& R, const Element& f) {
  R.check(f);
  if (R.is_algebra()) throw RingMismatch(R.name() + " is not a finite product");
  const FiniteRing& F = R.table();
  const auto coords = finite::split(F, f.idx);
  Subset s = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != F.layout()->factors[i]->zero()) s |= Subset{1} << i;
  return s;
}

Ideal star_ideal(const RingHandle& R, const SetIdeal& I) {
  if (R.is_algebra() || !R.table().layout()) throw RingMismatch(R.name() + " is not a finite product");
  if (R.table().layout()->factors.size() != I.ground())
    throw RingMismatch("ideal of P(X) has a different ground set than the product");
  IdxSet members;
  for (Idx x = 0; x < R.table().size(); ++x)
    if (I.contains(support(R, R.from_index(x)))) members.push_back(x);
  return Ideal(R, std::move(members));
}

UltraRing ultra_ring(const std::vector<RingHandle>& factors, const SetIdeal& I) {
  if (factors.size() != I.ground()) throw SchemaError("one factor per point of the ground set is required");
  UltraRing U{factors, I, {}, {}, {}, false};
  std::vector<FiniteRingPtr> tables, outside;
  std::string name;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].is_algebra()) throw SchemaError("ultra-ring factors must be finite table rings");
    tables.push_back(factors[i].table_ptr());
    if (!(I.top() >> i & 1u)) outside.push_back(factors[i].table_ptr());
    name += (i ? " x " : "") + factors[i].name();
  }
  U.product = RingHandle::from_table(finite::product(tables), Backend::product, name);
  U.star = star_ideal(U.product, I);
  const QuotientMap q(U.star);
  U.quotient = q.ring();

  // Candidate isomorphism: the class of f goes to f restricted to X \ Y.
  const FiniteRingPtr complement = finite::product(outside);
  const FiniteRing& P = U.product.table();
  const FiniteRing& Q = U.quotient.table();
  std::vector<long> phi(Q.size(), -1);
  bool ok = complement->size() == Q.size();
  for (Idx x = 0; x < P.size() && ok; ++x) {
    const auto coords = finite::split(P, x);
    std::vector<Idx> rest;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!(I.top() >> i & 1u)) rest.push_back(coords[i]);
    const Idx image = outside.empty() ? complement->zero() : finite::join(*complement, rest);
    const Idx cls = q.project(U.product, U.product.from_index(x)).idx;
    if (phi[cls] == -1)
      phi[cls] = image;
    else
      ok = phi[cls] == static_cast<long>(image);
  }
  for (Idx a = 0; a < Q.size() && ok; ++a)
    for (Idx b = 0; b < Q.size() && ok; ++b)
      ok = phi[Q.add(a, b)] == complement->add(static_cast<Idx>(phi[a]), static_cast<Idx>(phi[b])) &&
           phi[Q.mul(a, b)] == complement->mul(static_cast<Idx>(phi[a]), static_cast<Idx>(phi[b]));
  U.complement_isomorphic = ok && phi[Q.one()] == complement->one();
  return U;
}

namespace {

Verdict all_factors(const UltraRing& U, const std::string& name) {
  Verdict v = Verdict::yes();
  for (const RingHandle& f : U.factors) v = v && predicate(f, name).verdict;
  return v;
}

// Hypothesis => conclusion; a failed hypothesis makes the check vacuous.
Clause preservation(const UltraRing& U, const std::string& name) {
  const Verdict hyp = all_factors(U, name);
  Clause c{"factors " + name + " => quotient " + name, Verdict::yes(), Strategy::definitional, "exhaustive", std::nullopt};
  if (hyp.is_false()) {
    c.route = "vacuous";
    return c;
  }
  const PredicateResult r = predicate(U.quotient, name);
  c.verdict = hyp.is_true() ? r.verdict : (r.verdict.is_true() ? Verdict::yes() : Verdict::unknown(hyp.bound));
  c.witness = r.witness;
  return c;
}

}  // namespace

TheoremReport ultra_preservation_suite(const UltraRing& U) {
  TheoremReport rep;
  rep.theorem_id = "ultra";
  rep.ring = U.product.name() + " / " + U.ideal.format() + "*";
  rep.kind = TheoremKind::suite;

  const PurityClass pc = purity_class(U.star);
  Clause pure{"star ideal pure", pc.pure, Strategy::definitional, "exhaustive", std::nullopt};
  if (pc.pure_refuter)
    pure.witness = Witness{WitnessKind::refuting_element, {U.product.format(*pc.pure_refuter)}, "no g in I* with f(1-g) = 0"};
  rep.clauses.push_back(std::move(pure));
  rep.clauses.push_back(Clause{"quotient matches the complementary product", Verdict::of(U.complement_isomorphic),
                               Strategy::definitional, "table-isomorphism", std::nullopt});
  for (const char* name : {"reduced", "pp", "pf"}) rep.clauses.push_back(preservation(U, name));
  finalize(rep);
  return rep;
}

}  // namespace ringlab
