#include "ringlab/zalgebra_ops.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ringlab/errors.hpp"
#include "ringlab/finite_ops.hpp"

namespace ringlab::zal {

namespace {

constexpr std::size_t kMaxChain = 256;
constexpr std::size_t kMaxCosets = 1u << 16;
constexpr std::size_t kKerPiChecks = 64;

Lattice normalized(const ZAlgebra& A, const Lattice& I) { return I + A.relations(); }

IntVec padded(const IntVec& head, std::size_t m) {
  IntVec v = zero_vec(m);
  std::copy(head.begin(), head.end(), v.begin());
  return v;
}

void sort_unique(std::vector<Lattice>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool has_nonzero_torsion_nilpotent(const ZAlgebra& A) {
  for (const IntVec& x : A.torsion_elements())
    if (!A.is_zero(x) && A.is_nilpotent(x)) return true;
  return false;
}

Lattice compute_nilradical(const ZAlgebra& A) {
  const std::size_t m = A.m();
  if (m == 0) return A.relations();
  IntMat s_rows;
  for (const IntVec& row : A.rational_radical()) s_rows.push_back(padded(row, m));
  for (std::size_t i = A.r(); i < m; ++i) s_rows.push_back(unit_vec(m, i));
  const Lattice S = Lattice::span(s_rows, m);

  // N0 = e S + T_nil is nilpotent and has finite index in S.
  const Int e = A.exponent();
  IntMat n0_rows;
  for (const IntVec& row : S.basis()) {
    IntVec v = row;
    for (auto& x : v) x *= e;
    n0_rows.push_back(std::move(v));
  }
  for (const IntVec& x : A.torsion_elements())
    if (!A.is_zero(x) && A.is_nilpotent(x)) n0_rows.push_back(x);
  for (const IntVec& row : A.relations().basis()) n0_rows.push_back(row);
  const Lattice N0 = Lattice::span(n0_rows, m);

  IntMat nil_rows = n0_rows;
  std::set<IntVec> seen;
  std::deque<IntVec> queue;
  IntVec start = N0.reduce(A.zero());
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    IntVec v = std::move(queue.front());
    queue.pop_front();
    if (A.is_nilpotent(A.canon(v))) nil_rows.push_back(v);
    for (const IntVec& g : S.basis()) {
      IntVec w(m);
      for (std::size_t i = 0; i < m; ++i) w[i] = v[i] + g[i];
      w = N0.reduce(std::move(w));
      if (seen.insert(w).second) {
        if (seen.size() > kMaxCosets) throw CapacityError("nilradical coset enumeration too large");
        queue.push_back(std::move(w));
      }
    }
  }
  Lattice N = Lattice::span(nil_rows, m);
  for (const IntVec& row : N.basis())
    if (!A.is_nilpotent(A.canon(row)))
      throw VerificationError("nilradical generator " + to_string(row) + " is not nilpotent");
  if (!is_reduced(*A.quotient(N).ring))
    throw VerificationError("quotient by the computed nilradical is not reduced");
  return N;
}

std::vector<Lattice> compute_minimal_primes(const ZAlgebra& A) {
  if (A.is_zero_ring()) return {};
  const Lattice N = nilradical(A);
  const ZQuotient q = A.quotient(N);
  const ZAlgebra& B = *q.ring;
  const std::size_t mB = B.m(), rB = B.r();
  std::vector<Lattice> in_b;

  // Finite reduced torsion factor: one prime per primitive torsion idempotent.
  std::vector<IntVec> tidem;
  for (const IntVec& e : B.idempotents())
    if (!B.is_zero(e) && B.in_torsion(e)) tidem.push_back(e);
  for (const IntVec& e : tidem) {
    bool primitive = true;
    for (const IntVec& f : tidem)
      if (f != e && B.mul(f, e) == f) {
        primitive = false;
        break;
      }
    if (primitive) in_b.push_back(B.annihilator(e));
  }

  // Torsion-free factor: kernels of B -> (B (x) Q) eps_i.
  for (const RatVec& eps : B.rational_primitive_idempotents()) {
    RatMat rows;
    Int den = 1;
    for (std::size_t j = 0; j < rB; ++j) {
      RatVec ej(rB, Rat(0));
      ej[j] = 1;
      rows.push_back(B.rational_mul(ej, eps));
      for (const Rat& x : rows.back()) den = lcm(den, x.get_den());
    }
    IntMat M(rB, IntVec(rB));
    for (std::size_t j = 0; j < rB; ++j)
      for (std::size_t k = 0; k < rB; ++k) {
        Rat x = rows[j][k] * den;
        M[j][k] = x.get_num();
      }
    IntMat gens;
    for (const IntVec& k : left_kernel(M, rB)) gens.push_back(padded(k, mB));
    for (std::size_t i = rB; i < mB; ++i) gens.push_back(unit_vec(mB, i));
    in_b.push_back(Lattice::span(gens, mB));
  }

  std::vector<Lattice> out;
  for (const Lattice& P : in_b) out.push_back(q.pull_back(P));
  sort_unique(out);

  Lattice meet = A.whole();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!is_prime(A, out[i])) throw VerificationError("computed minimal prime is not prime");
    for (std::size_t j = 0; j < out.size(); ++j)
      if (i != j && out[i].subset_of(out[j]))
        throw VerificationError("computed minimal primes are comparable");
    meet = meet.intersect(out[i]);
  }
  if (!(meet == N)) throw VerificationError("minimal primes do not intersect to the nilradical");
  return out;
}

Lattice ideal_annihilator(const ZAlgebra& A, const Lattice& I) {
  Lattice out = A.whole();
  for (const IntVec& g : generators(A, I)) out = out.intersect(A.annihilator(g));
  return out;
}

std::vector<Lattice> compute_torsion_maximal(const ZAlgebra& A) {
  std::vector<Lattice> out;
  if (A.t() == 0) return out;
  const std::size_t m = A.m();
  for (const Int& ell : prime_factors(A.exponent())) {
    IntMat rows;
    for (std::size_t i = 0; i < m; ++i) {
      IntVec v = zero_vec(m);
      v[i] = ell;
      rows.push_back(std::move(v));
    }
    for (Lattice& L : maximal_over(A, Lattice::span(rows, m))) out.push_back(std::move(L));
  }
  sort_unique(out);
  return out;
}

std::vector<Lattice> compute_associated(const ZAlgebra& A) {
  std::vector<Lattice> out = minimal_primes(A);
  for (const Lattice& mx : torsion_maximal_ideals(A))
    if (!(ideal_annihilator(A, mx) == A.relations())) out.push_back(mx);
  sort_unique(out);
  return out;
}

}  // namespace

Lattice colon(const ZAlgebra& A, const Lattice& I, const IntVec& f) {
  return preimage(A.mult_matrix(f), normalized(A, I));
}

Lattice saturation(const ZAlgebra& A, const Lattice& I, const IntVec& f) {
  Lattice cur = colon(A, I, f);
  IntVec power = f;
  for (std::size_t step = 0; step < kMaxChain; ++step) {
    power = A.mul(power, f);
    Lattice next = colon(A, I, power);
    if (next == cur) {
      if (!(colon(A, I, A.mul(power, f)) == cur))
        throw VerificationError("colon chain restarted after stabilizing");
      return cur;
    }
    cur = std::move(next);
  }
  throw CapacityError("colon chain did not stabilize");
}

std::pair<std::size_t, Lattice> annihilator_stabilized(const ZAlgebra& A, const IntVec& f) {
  IntVec power = f;
  Lattice cur = A.annihilator(power);
  for (std::size_t n = 1; n <= kMaxChain; ++n) {
    power = A.mul(power, f);
    Lattice next = A.annihilator(power);
    if (next == cur) {
      if (!(A.annihilator(A.mul(power, f)) == cur))
        throw VerificationError("annihilator chain grew after stabilizing");
      return {n, cur};
    }
    cur = std::move(next);
  }
  throw CapacityError("annihilator chain did not stabilize");
}

Lattice product(const ZAlgebra& A, const Lattice& I, const Lattice& J) {
  IntMat rows;
  for (const IntVec& a : generators(A, I))
    for (const IntVec& b : generators(A, J)) rows.push_back(A.mul(a, b));
  return A.ideal(rows);
}

IntMat generators(const ZAlgebra& A, const Lattice& I) {
  IntMat out;
  for (const IntVec& row : I.basis()) {
    IntVec c = A.canon(row);
    if (!A.is_zero(c) && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

bool is_reduced(const ZAlgebra& A) {
  return A.rational_radical().empty() && !has_nonzero_torsion_nilpotent(A);
}

Lattice nilradical(const ZAlgebra& A) {
  return *A.memo().get<Lattice>("nilradical", [&] { return compute_nilradical(A); });
}

std::optional<IntVec> idempotent_generator(const ZAlgebra& A, const Lattice& I) {
  const Lattice target = normalized(A, I);
  for (const IntVec& e : A.idempotents())
    if (A.principal(e) == target) return e;
  return std::nullopt;
}

std::optional<IntVec> quasi_pure_refuter(const ZAlgebra& A, const Lattice& I) {
  const Lattice base = normalized(A, I);
  for (const IntVec& g : generators(A, base))
    if (!(base + saturation(A, A.relations(), g)).is_full()) return g;
  return std::nullopt;
}

std::vector<IntVec> primitive_idempotents(const ZAlgebra& A) {
  std::vector<IntVec> out;
  const auto& idem = A.idempotents();
  for (const IntVec& e : idem) {
    if (A.is_zero(e)) continue;
    bool primitive = true;
    for (const IntVec& f : idem)
      if (!A.is_zero(f) && f != e && A.mul(f, e) == f) {
        primitive = false;
        break;
      }
    if (primitive) out.push_back(e);
  }
  return out;
}

bool is_domain(const ZAlgebra& A) {
  if (A.is_zero_ring()) return false;
  if (A.is_finite()) {
    FiniteRingPtr F = A.to_finite();
    for (Idx a = 0; a < F->size(); ++a)
      if (a != F->zero() && F->is_zero_divisor(a)) return false;
    return true;
  }
  return A.t() == 0 && is_reduced(A) && A.rational_primitive_idempotents().size() == 1;
}

bool is_field(const ZAlgebra& A) {
  if (!A.is_finite() || A.is_zero_ring()) return false;
  FiniteRingPtr F = A.to_finite();
  for (Idx a = 0; a < F->size(); ++a)
    if (a != F->zero() && !F->is_unit(a)) return false;
  return true;
}

bool is_prime(const ZAlgebra& A, const Lattice& I) {
  const Lattice L = normalized(A, I);
  if (L.is_full()) return false;
  return is_domain(*A.quotient(L).ring);
}

bool is_maximal(const ZAlgebra& A, const Lattice& I) {
  const Lattice L = normalized(A, I);
  if (L.is_full()) return false;
  return is_field(*A.quotient(L).ring);
}

const std::vector<Lattice>& minimal_primes(const ZAlgebra& A) {
  return *A.memo().get<std::vector<Lattice>>("minimal_primes", [&] { return compute_minimal_primes(A); });
}

std::vector<Lattice> maximal_over(const ZAlgebra& A, const Lattice& I) {
  const ZQuotient q = A.quotient(normalized(A, I));
  const ZAlgebra& B = *q.ring;
  if (!B.is_finite()) throw InfiniteRing("quotient has free rank " + std::to_string(B.r()));
  if (B.is_zero_ring()) return {};
  FiniteRingPtr F = B.to_finite();
  const std::vector<IntVec> elems = B.torsion_elements();
  std::vector<Lattice> out;
  for (const IdxSet& P : fin::minimal_primes(*F)) {
    IntMat rows = B.relations().basis();
    for (Idx a : P) rows.push_back(elems[a]);
    out.push_back(q.pull_back(Lattice::span(rows, B.m())));
  }
  sort_unique(out);
  return out;
}

const std::vector<Lattice>& torsion_maximal_ideals(const ZAlgebra& A) {
  return *A.memo().get<std::vector<Lattice>>("torsion_maximal", [&] { return compute_torsion_maximal(A); });
}

const std::vector<Lattice>& associated_primes(const ZAlgebra& A) {
  return *A.memo().get<std::vector<Lattice>>("associated_primes", [&] { return compute_associated(A); });
}

std::vector<Lattice> embedded_primes(const ZAlgebra& A) {
  std::vector<Lattice> out;
  const auto& mins = minimal_primes(A);
  for (const Lattice& P : associated_primes(A))
    if (std::find(mins.begin(), mins.end(), P) == mins.end()) out.push_back(P);
  return out;
}

Lattice ker_pi(const ZAlgebra& A, const Lattice& p0) {
  const Lattice p = normalized(A, p0);
  if (p.is_full()) throw AlgebraError("ker_pi needs a proper ideal");
  // s must avoid p and lie in every associated prime not inside p; then
  // (0 : s^infinity) is the kernel of R -> R_p.
  Lattice J = A.whole();
  for (const Lattice& P : associated_primes(A))
    if (!P.subset_of(p)) J = J.intersect(P);
  const IntMat& rows = J.basis();
  std::optional<std::size_t> first, last, inside;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (p.contains(rows[i])) {
      if (!inside) inside = i;
    } else {
      if (!first) first = i;
      last = i;
    }
  }
  if (!first) throw SeparatorNotFound("every generator of the separating ideal lies in p");
  const IntVec s = A.canon(rows[*first]);
  IntVec s2;
  if (*last != *first)
    s2 = A.canon(rows[*last]);
  else if (inside)
    s2 = A.add(s, A.canon(rows[*inside]));
  else
    s2 = A.mul(s, s);

  const Lattice K = saturation(A, A.relations(), s);
  if (!(saturation(A, A.relations(), s2) == K))
    throw VerificationError("ker_pi separators disagree");
  std::size_t checked = 0;
  for (const IntVec& f : A.sample(1)) {
    if (checked++ == kKerPiChecks) break;
    const bool in_k = K.contains(f);
    const bool killed_outside = !A.annihilator(f).subset_of(p);
    if (in_k != killed_outside) throw VerificationError("ker_pi membership check failed at " + to_string(f));
  }
  return K;
}

bool is_primary_by_ass(const ZAlgebra& A) {
  if (A.is_zero_ring()) return true;
  return associated_primes(A).size() == 1;
}

bool is_primary_ideal(const ZAlgebra& A, const Lattice& I) {
  const Lattice L = normalized(A, I);
  if (L.is_full()) return false;
  return is_primary_by_ass(*A.quotient(L).ring);
}

}  // namespace ringlab::zal
