#include "ringlab/ring.hpp"

#include "ringlab/errors.hpp"

namespace ringlab {

std::string to_string(Backend b) {
  switch (b) {
    case Backend::zmod: return "zmod";
    case Backend::table: return "table";
    case Backend::product: return "product";
    case Backend::quotient: return "quotient";
    case Backend::powerset: return "powerset";
    default: return "zalgebra";
  }
}

struct RingHandle::Impl {
  Backend kind;
  std::string name;
  FiniteRingPtr table;
  ZAlgebraPtr algebra;
  Memo memo;
};

RingHandle RingHandle::from_table(FiniteRingPtr ring, Backend kind, std::string name) {
  if (!ring || kind == Backend::zalgebra) throw SchemaError("table backend needs a finite ring");
  auto impl = std::make_shared<Impl>();
  impl->kind = kind;
  impl->name = std::move(name);
  impl->table = std::move(ring);
  RingHandle h;
  h.impl_ = std::move(impl);
  return h;
}

RingHandle RingHandle::from_algebra(ZAlgebraPtr ring, std::string name) {
  if (!ring) throw SchemaError("zalgebra backend needs an algebra");
  auto impl = std::make_shared<Impl>();
  impl->kind = Backend::zalgebra;
  impl->name = std::move(name);
  impl->algebra = std::move(ring);
  RingHandle h;
  h.impl_ = std::move(impl);
  return h;
}

Backend RingHandle::backend() const { return impl_->kind; }

bool RingHandle::is_finite() const { return !is_algebra() || impl_->algebra->is_finite(); }

std::optional<std::size_t> RingHandle::size() const {
  if (!is_algebra()) return impl_->table->size();
  if (!impl_->algebra->is_finite()) return std::nullopt;
  Int n = impl_->algebra->torsion_order();
  if (!n.fits_ulong_p()) return std::nullopt;
  return static_cast<std::size_t>(n.get_ui());
}

const std::string& RingHandle::name() const { return impl_->name; }

const FiniteRing& RingHandle::table() const { return *table_ptr(); }

const FiniteRingPtr& RingHandle::table_ptr() const {
  if (is_algebra()) throw NotApplicable("operation needs a table backend");
  return impl_->table;
}

const ZAlgebra& RingHandle::algebra() const { return *algebra_ptr(); }

const ZAlgebraPtr& RingHandle::algebra_ptr() const {
  if (!is_algebra()) throw NotApplicable("operation needs the zalgebra backend");
  return impl_->algebra;
}

const void* RingHandle::identity() const {
  if (!impl_) return nullptr;
  return is_algebra() ? static_cast<const void*>(impl_->algebra.get())
                      : static_cast<const void*>(impl_->table.get());
}

const Memo& RingHandle::memo() const { return impl_->memo; }

Element RingHandle::zero() const {
  return is_algebra() ? from_vector(impl_->algebra->zero()) : from_index(impl_->table->zero());
}

Element RingHandle::one() const {
  return is_algebra() ? from_vector(impl_->algebra->one()) : from_index(impl_->table->one());
}

Element RingHandle::from_index(Idx i) const {
  if (i >= table().size()) throw SchemaError("element index out of range");
  return Element{i, {}, identity()};
}

Element RingHandle::from_vector(IntVec v) const {
  const ZAlgebra& A = algebra();
  if (v.size() != A.m()) throw SchemaError("coordinate vector has the wrong length");
  return Element{0, A.canon(std::move(v)), identity()};
}

Element RingHandle::parse(const std::string& text) const {
  if (!is_algebra()) {
    if (auto i = table().parse(text)) return from_index(*i);
    throw SchemaError("'" + text + "' is not an element of " + name());
  }
  const ZAlgebra& A = algebra();
  if (auto v = A.parse(text)) return from_vector(std::move(*v));
  Int n;
  if (!text.empty() && n.set_str(text, 10) == 0) return from_vector(A.scale(A.one(), n));
  const auto& names = A.presentation().names;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == text) return from_vector(unit_vec(A.m(), i));
  throw SchemaError("'" + text + "' is not an element of " + name());
}

std::string RingHandle::format(const Element& a) const {
  check(a);
  return is_algebra() ? algebra().format(a.v) : table().label(a.idx);
}

void RingHandle::check(const Element& a) const {
  if (a.owner != identity()) throw RingMismatch("element belongs to a different ring than " + name());
}

Element RingHandle::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  if (is_algebra()) return Element{0, algebra().add(a.v, b.v), identity()};
  return Element{table().add(a.idx, b.idx), {}, identity()};
}

Element RingHandle::sub(const Element& a, const Element& b) const {
  check(a);
  check(b);
  if (is_algebra()) return Element{0, algebra().sub(a.v, b.v), identity()};
  return Element{table().sub(a.idx, b.idx), {}, identity()};
}

Element RingHandle::neg(const Element& a) const {
  check(a);
  if (is_algebra()) return Element{0, algebra().neg(a.v), identity()};
  return Element{table().neg(a.idx), {}, identity()};
}

Element RingHandle::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  if (is_algebra()) return Element{0, algebra().mul(a.v, b.v), identity()};
  return Element{table().mul(a.idx, b.idx), {}, identity()};
}

Element RingHandle::pow(const Element& a, std::size_t k) const {
  check(a);
  if (is_algebra()) return Element{0, algebra().pow(a.v, k), identity()};
  return Element{table().pow(a.idx, k), {}, identity()};
}

bool RingHandle::is_zero(const Element& a) const {
  check(a);
  return is_algebra() ? algebra().is_zero(a.v) : a.idx == table().zero();
}

std::vector<Element> RingHandle::enumerate() const {
  std::vector<Element> out;
  if (!is_algebra()) {
    for (Idx i = 0; i < table().size(); ++i) out.push_back(from_index(i));
    return out;
  }
  if (!algebra().is_finite()) throw InfiniteRing(name() + " has free rank " + std::to_string(algebra().r()));
  for (IntVec& v : algebra().torsion_elements()) out.push_back(from_vector(std::move(v)));
  return out;
}

std::vector<Element> RingHandle::sample(int height) const {
  if (!is_algebra()) return enumerate();
  std::vector<Element> out;
  for (IntVec& v : algebra().sample(height)) out.push_back(from_vector(std::move(v)));
  return out;
}

ElementPredicates element_predicates(const RingHandle& R, const Element& f) {
  R.check(f);
  ElementPredicates p;
  if (R.is_algebra()) {
    const ZAlgebra& A = R.algebra();
    p.is_unit = A.is_unit(f.v);
    p.is_zero_divisor = A.is_zero_divisor(f.v);
    p.is_nilpotent = A.is_nilpotent(f.v);
    p.is_idempotent = A.is_idempotent(f.v);
  } else {
    const FiniteRing& F = R.table();
    p.is_unit = F.is_unit(f.idx);
    p.is_zero_divisor = F.is_zero_divisor(f.idx);
    p.is_nilpotent = F.is_nilpotent(f.idx);
    p.is_idempotent = F.is_idempotent(f.idx);
  }
  return p;
}

std::vector<Element> idempotents(const RingHandle& R) {
  std::vector<Element> out;
  if (R.is_algebra())
    for (const IntVec& e : R.algebra().idempotents()) out.push_back(R.from_vector(e));
  else
    for (Idx e : R.table().idempotents()) out.push_back(R.from_index(e));
  return out;
}

}  // namespace ringlab
