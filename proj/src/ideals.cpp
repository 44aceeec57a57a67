#include "ringlab/ideals.hpp"

#include "ringlab/errors.hpp"
#include "ringlab/finite_ops.hpp"
#include "ringlab/mutation.hpp"
#include "ringlab/zalgebra_ops.hpp"

namespace ringlab {

namespace {

void same_ring(const Ideal& I, const Ideal& J) {
  if (!I.ring().same(J.ring())) throw RingMismatch("ideals live in different rings");
}

constexpr std::size_t kMaxChain = 4096;

}  // namespace

Ideal::Ideal(RingHandle ring, IdxSet members) : ring_(std::move(ring)), members_(std::move(members)) {
  if (ring_.is_algebra()) throw NotApplicable("member-set ideal on a zalgebra");
}

Ideal::Ideal(RingHandle ring, Lattice lattice) : ring_(std::move(ring)) {
  lattice_ = lattice + ring_.algebra().relations();
}

const IdxSet& Ideal::members() const {
  if (is_lattice()) throw NotApplicable("lattice ideal has no member list");
  return members_;
}

const Lattice& Ideal::lattice() const {
  if (!is_lattice()) throw NotApplicable("table ideal has no lattice");
  return lattice_;
}

std::vector<Element> Ideal::generators() const {
  std::vector<Element> out;
  if (is_lattice())
    for (IntVec& g : zal::generators(ring_.algebra(), lattice_)) out.push_back(ring_.from_vector(std::move(g)));
  else
    for (Idx g : fin::generators(ring_.table(), members_)) out.push_back(ring_.from_index(g));
  return out;
}

bool Ideal::contains(const Element& f) const {
  ring_.check(f);
  return is_lattice() ? lattice_.contains(f.v) : fin::contains(members_, f.idx);
}

bool Ideal::is_whole() const {
  return is_lattice() ? lattice_.is_full() : members_.size() == ring_.table().size();
}

bool Ideal::is_zero() const {
  return is_lattice() ? lattice_ == ring_.algebra().relations() : members_.size() == 1;
}

std::string Ideal::format() const {
  std::vector<Element> gens = generators();
  if (gens.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += ring_.format(gens[i]);
  }
  return s + ")";
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!a.ring_.same(b.ring_)) return false;
  return a.is_lattice() ? a.lattice_ == b.lattice_ : a.members_ == b.members_;
}

bool operator<(const Ideal& a, const Ideal& b) {
  if (a.is_lattice()) return a.lattice_ < b.lattice_;
  if (a.members_.size() != b.members_.size()) return a.members_.size() < b.members_.size();
  return a.members_ < b.members_;
}

Ideal ideal_from_generators(const RingHandle& R, const std::vector<Element>& gens) {
  if (R.is_algebra()) {
    IntMat rows;
    for (const Element& g : gens) {
      R.check(g);
      rows.push_back(g.v);
    }
    return Ideal(R, R.algebra().ideal(rows));
  }
  std::vector<Idx> idx;
  for (const Element& g : gens) {
    R.check(g);
    idx.push_back(g.idx);
  }
  return Ideal(R, fin::generated(R.table(), idx));
}

Ideal zero_ideal(const RingHandle& R) {
  return R.is_algebra() ? Ideal(R, R.algebra().relations()) : Ideal(R, fin::zero_ideal(R.table()));
}

Ideal whole_ideal(const RingHandle& R) {
  return R.is_algebra() ? Ideal(R, R.algebra().whole()) : Ideal(R, fin::whole(R.table()));
}

std::string to_string(IdealOrder o) {
  switch (o) {
    case IdealOrder::equal: return "equal";
    case IdealOrder::leq: return "leq";
    case IdealOrder::geq: return "geq";
    default: return "incomparable";
  }
}

bool is_subset(const Ideal& I, const Ideal& J) {
  same_ring(I, J);
  return I.is_lattice() ? I.lattice().subset_of(J.lattice()) : fin::subset(I.members(), J.members());
}

IdealOrder ideal_compare(const Ideal& I, const Ideal& J) {
  const bool le = is_subset(I, J), ge = is_subset(J, I);
  if (le && ge) return IdealOrder::equal;
  if (le) return IdealOrder::leq;
  if (ge) return IdealOrder::geq;
  return IdealOrder::incomparable;
}

Ideal ideal_algebra(IdealOp op, const Ideal& I, const Ideal& J) {
  same_ring(I, J);
  const RingHandle& R = I.ring();
  if (R.is_algebra()) {
    const ZAlgebra& A = R.algebra();
    switch (op) {
      case IdealOp::sum: return Ideal(R, I.lattice() + J.lattice());
      case IdealOp::intersect: return Ideal(R, I.lattice().intersect(J.lattice()));
      default: return Ideal(R, zal::product(A, I.lattice(), J.lattice()));
    }
  }
  const FiniteRing& F = R.table();
  switch (op) {
    case IdealOp::sum: return Ideal(R, fin::sum(F, I.members(), J.members()));
    case IdealOp::intersect: return Ideal(R, fin::intersect(I.members(), J.members()));
    default: return Ideal(R, fin::product(F, I.members(), J.members()));
  }
}

Ideal annihilator(const RingHandle& R, const Element& f) {
  R.check(f);
  if (R.is_algebra()) return Ideal(R, R.algebra().annihilator(f.v));
  return Ideal(R, fin::annihilator(R.table(), f.idx));
}

Stabilized annihilator_power_stabilized(const RingHandle& R, const Element& f) {
  Element power = f;
  Ideal cur = annihilator(R, power);
  for (std::size_t n = 1; n <= kMaxChain; ++n) {
    power = R.mul(power, f);
    Ideal next = annihilator(R, power);
    if (next == cur) {
      if (!(annihilator(R, R.mul(power, f)) == cur))
        throw VerificationError("annihilator chain grew after stabilizing");
      return {n, cur};
    }
    cur = std::move(next);
  }
  throw CapacityError("annihilator chain did not stabilize");
}

ColonSaturation colon_saturation(const Ideal& I, const Element& f) {
  const RingHandle& R = I.ring();
  R.check(f);
  if (R.is_algebra()) {
    const ZAlgebra& A = R.algebra();
    return {Ideal(R, zal::colon(A, I.lattice(), f.v)), Ideal(R, zal::saturation(A, I.lattice(), f.v))};
  }
  const FiniteRing& F = R.table();
  return {Ideal(R, fin::colon(F, I.members(), f.idx)), Ideal(R, fin::saturation(F, I.members(), f.idx))};
}

Ideal nilradical(const RingHandle& R) {
  if (R.is_algebra()) return Ideal(R, zal::nilradical(R.algebra()));
  return Ideal(R, fin::nilradical(R.table()));
}

PurityClass purity_class(const Ideal& I) {
  const RingHandle& R = I.ring();
  PurityClass pc;
  if (R.is_algebra()) {
    // Finitely generated: pure exactly when generated by an idempotent,
    // and then regular as well.
    const ZAlgebra& A = R.algebra();
    if (auto e = zal::idempotent_generator(A, I.lattice())) pc.idempotent_generator = R.from_vector(*e);
    pc.pure = Verdict::of(pc.idempotent_generator.has_value());
    if (mutation::purity_always_true()) pc.pure = Verdict::yes();
    pc.regular = pc.pure;
    auto q = zal::quasi_pure_refuter(A, I.lattice());
    pc.quasi_pure = Verdict::of(!q);
    if (q) pc.quasi_pure_refuter = R.from_vector(*q);
    return pc;
  }
  const FiniteRing& F = R.table();
  if (auto e = fin::idempotent_generator(F, I.members())) pc.idempotent_generator = R.from_index(*e);
  auto p = fin::pure_refuter(F, I.members());
  auto q = fin::quasi_pure_refuter(F, I.members());
  auto g = fin::regular_refuter(F, I.members());
  pc.pure = Verdict::of(!p);
  pc.quasi_pure = Verdict::of(!q);
  pc.regular = Verdict::of(!g);
  if (p) pc.pure_refuter = R.from_index(*p);
  if (q) pc.quasi_pure_refuter = R.from_index(*q);
  if (g) pc.regular_refuter = R.from_index(*g);
  return pc;
}

QuotientMap::QuotientMap(const Ideal& kernel) : parent_(kernel.ring().identity()) {
  const RingHandle& R = kernel.ring();
  const std::string name = R.name() + "/" + kernel.format();
  if (R.is_algebra()) {
    zq_ = R.algebra().quotient(kernel.lattice());
    ring_ = RingHandle::from_algebra(zq_->ring, name);
    return;
  }
  FiniteRingPtr q = finite::quotient(R.table_ptr(), kernel.members());
  projection_ = q->quotient_link()->projection;
  representatives_ = q->quotient_link()->representatives;
  ring_ = RingHandle::from_table(std::move(q), Backend::quotient, name);
}

Element QuotientMap::project(const RingHandle& parent, const Element& x) const {
  parent.check(x);
  if (parent.identity() != parent_) throw RingMismatch("quotient map applied to a foreign ring");
  if (zq_) return ring_.from_vector(zq_->project(x.v));
  return ring_.from_index(projection_[x.idx]);
}

Element QuotientMap::lift(const RingHandle& parent, const Element& y) const {
  ring_.check(y);
  if (parent.identity() != parent_) throw RingMismatch("quotient map applied to a foreign ring");
  if (zq_) return parent.from_vector(row_times(y.v, zq_->lift, parent.algebra().m()));
  return parent.from_index(representatives_[y.idx]);
}

Ideal QuotientMap::pull_back(const RingHandle& parent, const Ideal& J) const {
  if (parent.identity() != parent_ || !J.ring().same(ring_))
    throw RingMismatch("pull_back with mismatched rings");
  if (zq_) return Ideal(parent, zq_->pull_back(J.lattice()));
  IdxSet out;
  for (Idx x = 0; x < projection_.size(); ++x)
    if (fin::contains(J.members(), projection_[x])) out.push_back(x);
  return Ideal(parent, std::move(out));
}

RingHandle quotient_ring(const RingHandle& R, const Ideal& I) {
  if (!I.ring().same(R)) throw RingMismatch("ideal of a different ring");
  return QuotientMap(I).ring();
}

const QuotientMap& mod_nil(const RingHandle& R) {
  return *R.memo().get<QuotientMap>("mod_nil", [&] { return QuotientMap(nilradical(R)); });
}

Element lift_idempotent_mod_nil(const RingHandle& R, const Element& cls) {
  const QuotientMap& q = mod_nil(R);
  const RingHandle& B = q.ring();
  B.check(cls);
  if (!(B.mul(cls, cls) == cls)) throw NotIdempotentClass(B.format(cls) + " is not idempotent modulo the nilradical");
  const Element two = R.add(R.one(), R.one());
  const Element three = R.add(two, R.one());
  Element e = q.lift(R, cls);
  for (std::size_t step = 0; step < kMaxChain; ++step) {
    const Element e2 = R.mul(e, e);
    const Element next = R.sub(R.mul(three, e2), R.mul(two, R.mul(e2, e)));
    if (next == e) break;
    e = next;
  }
  if (!(R.mul(e, e) == e) || !(q.project(R, e) == cls))
    throw VerificationError("idempotent lifting did not converge");
  return e;
}

}  // namespace ringlab
