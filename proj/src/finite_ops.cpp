#include "ringlab/finite_ops.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <set>

#include "ringlab/mutation.hpp"

namespace ringlab::mutation {

namespace {
std::atomic<int> active{0};
}

bool purity_always_true() { return active.load() > 0; }
ScopedPurityMutation::ScopedPurityMutation() { ++active; }
ScopedPurityMutation::~ScopedPurityMutation() { --active; }

}  // namespace ringlab::mutation

namespace ringlab::fin {

namespace {

IdxSet from_mask(const std::vector<char>& mask) {
  IdxSet out;
  for (Idx i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

// Extends the additive subgroup held in (mask, members) by x.
void extend_subgroup(const FiniteRing& R, std::vector<char>& mask, std::vector<Idx>& members, Idx x) {
  if (mask[x]) return;
  const std::size_t base = members.size();
  Idx step = x;
  while (!mask[step]) {
    for (std::size_t i = 0; i < base; ++i) {
      Idx y = R.add(members[i], step);
      mask[y] = 1;
      members.push_back(y);
    }
    step = R.add(step, x);
  }
}

struct Builder {
  const FiniteRing& R;
  std::vector<char> mask;
  std::vector<Idx> members;
  explicit Builder(const FiniteRing& ring) : R(ring), mask(ring.size(), 0) {
    mask[R.zero()] = 1;
    members.push_back(R.zero());
  }
  void absorb(const IdxSet& subgroup) {
    for (Idx x : subgroup) extend_subgroup(R, mask, members, x);
  }
  IdxSet done() const { return from_mask(mask); }
};

}  // namespace

bool contains(const IdxSet& s, Idx a) { return std::binary_search(s.begin(), s.end(), a); }

bool subset(const IdxSet& a, const IdxSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IdxSet intersect(const IdxSet& a, const IdxSet& b) {
  IdxSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IdxSet zero_ideal(const FiniteRing& R) { return {R.zero()}; }

IdxSet whole(const FiniteRing& R) {
  IdxSet out(R.size());
  for (Idx i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

IdxSet principal(const FiniteRing& R, Idx g) {
  std::vector<char> mask(R.size(), 0);
  for (Idx r = 0; r < R.size(); ++r) mask[R.mul(r, g)] = 1;
  return from_mask(mask);
}

IdxSet generated(const FiniteRing& R, const std::vector<Idx>& gens) {
  Builder b(R);
  for (Idx g : gens)
    if (!b.mask[g]) b.absorb(principal(R, g));
  return b.done();
}

IdxSet sum(const FiniteRing& R, const IdxSet& I, const IdxSet& J) {
  Builder b(R);
  b.absorb(I);
  b.absorb(J);
  return b.done();
}

IdxSet product(const FiniteRing& R, const IdxSet& I, const IdxSet& J) {
  Builder b(R);
  for (Idx a : I)
    for (Idx c : J) extend_subgroup(R, b.mask, b.members, R.mul(a, c));
  return b.done();
}

IdxSet annihilator(const FiniteRing& R, Idx f) {
  IdxSet out;
  for (Idx x = 0; x < R.size(); ++x)
    if (R.mul(x, f) == R.zero()) out.push_back(x);
  return out;
}

IdxSet annihilator(const FiniteRing& R, const IdxSet& I) {
  IdxSet out;
  for (Idx x = 0; x < R.size(); ++x) {
    bool kills = true;
    for (Idx a : I)
      if (R.mul(x, a) != R.zero()) {
        kills = false;
        break;
      }
    if (kills) out.push_back(x);
  }
  return out;
}

IdxSet colon(const FiniteRing& R, const IdxSet& I, Idx f) {
  IdxSet out;
  for (Idx x = 0; x < R.size(); ++x)
    if (contains(I, R.mul(x, f))) out.push_back(x);
  return out;
}

IdxSet saturation(const FiniteRing& R, const IdxSet& I, Idx f) {
  // (I : f^k) = (I : f^{k+1}) forces every later colon to agree.
  IdxSet cur = colon(R, I, f);
  Idx power = f;
  for (;;) {
    power = R.mul(power, f);
    IdxSet next = colon(R, I, power);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool is_ideal(const FiniteRing& R, const IdxSet& s) {
  if (!std::is_sorted(s.begin(), s.end()) || !contains(s, R.zero())) return false;
  for (Idx a : s) {
    for (Idx b : s)
      if (!contains(s, R.add(a, b))) return false;
    for (Idx r = 0; r < R.size(); ++r)
      if (!contains(s, R.mul(r, a))) return false;
  }
  return true;
}

std::vector<Idx> generators(const FiniteRing& R, const IdxSet& I) {
  Builder b(R);
  std::vector<Idx> gens;
  for (Idx a : I) {
    if (b.mask[a]) continue;
    gens.push_back(a);
    b.absorb(principal(R, a));
  }
  return gens;
}

IdxSet nilradical(const FiniteRing& R) {
  IdxSet out;
  for (Idx x = 0; x < R.size(); ++x)
    if (R.is_nilpotent(x)) out.push_back(x);
  return out;
}

std::optional<Idx> pure_refuter(const FiniteRing& R, const IdxSet& I) {
  if (mutation::purity_always_true()) return std::nullopt;
  for (Idx a : I) {
    bool ok = false;
    for (Idx g : I)
      if (R.mul(a, g) == a) {
        ok = true;
        break;
      }
    if (!ok) return a;
  }
  return std::nullopt;
}

std::optional<Idx> quasi_pure_refuter(const FiniteRing& R, const IdxSet& I) {
  for (Idx a : I) {
    bool ok = false;
    for (Idx g : I)
      if (R.is_nilpotent(R.sub(a, R.mul(a, g)))) {
        ok = true;
        break;
      }
    if (!ok) return a;
  }
  return std::nullopt;
}

std::optional<Idx> regular_refuter(const FiniteRing& R, const IdxSet& I) {
  std::vector<Idx> idems;
  for (Idx e : R.idempotents())
    if (contains(I, e)) idems.push_back(e);
  for (Idx a : I) {
    bool ok = false;
    for (Idx e : idems)
      if (R.mul(a, e) == a) {
        ok = true;
        break;
      }
    if (!ok) return a;
  }
  return std::nullopt;
}

std::optional<Idx> idempotent_generator(const FiniteRing& R, const IdxSet& I) {
  for (Idx e : R.idempotents()) {
    if (!contains(I, e)) continue;
    bool gen = true;
    for (Idx a : I)
      if (R.mul(a, e) != a) {
        gen = false;
        break;
      }
    if (gen) return e;
  }
  return std::nullopt;
}

std::vector<Idx> primitive_idempotents(const FiniteRing& R) {
  std::vector<Idx> out;
  for (Idx e : R.idempotents()) {
    if (e == R.zero()) continue;
    bool primitive = true;
    for (Idx f : R.idempotents())
      if (f != R.zero() && f != e && R.mul(f, e) == f) {
        primitive = false;
        break;
      }
    if (primitive) out.push_back(e);
  }
  return out;
}

std::vector<IdxSet> minimal_primes(const FiniteRing& R) {
  std::vector<IdxSet> out;
  for (Idx e : primitive_idempotents(R)) {
    IdxSet p;
    for (Idx x = 0; x < R.size(); ++x)
      if (R.is_nilpotent(R.mul(x, e))) p.push_back(x);
    out.push_back(std::move(p));
  }
  return out;
}

bool is_prime(const FiniteRing& R, const IdxSet& I) {
  if (I.size() == R.size()) return false;
  std::vector<char> in(R.size(), 0);
  for (Idx a : I) in[a] = 1;
  for (Idx a = 0; a < R.size(); ++a) {
    if (in[a]) continue;
    for (Idx b = a; b < R.size(); ++b)
      if (!in[b] && in[R.mul(a, b)]) return false;
  }
  return true;
}

bool is_maximal(const FiniteRing& R, const IdxSet& I) {
  if (I.size() == R.size()) return false;
  for (Idx a = 0; a < R.size(); ++a) {
    if (contains(I, a)) continue;
    if (sum(R, I, principal(R, a)).size() != R.size()) return false;
  }
  return true;
}

bool is_local(const FiniteRing& R) {
  if (R.size() == 1) return false;
  std::vector<Idx> non_units;
  for (Idx a = 0; a < R.size(); ++a)
    if (!R.is_unit(a)) non_units.push_back(a);
  for (Idx a : non_units)
    for (Idx b : non_units)
      if (R.is_unit(R.add(a, b))) return false;
  return true;
}

std::optional<Idx> primary_refuter(const FiniteRing& R) {
  for (Idx a = 0; a < R.size(); ++a)
    if (R.is_zero_divisor(a) && !R.is_nilpotent(a)) return a;
  return std::nullopt;
}

std::optional<std::vector<IdxSet>> all_ideals(const FiniteRing& R, std::size_t cap) {
  std::set<IdxSet> seen;
  std::vector<IdxSet> principals;
  for (Idx a = 0; a < R.size(); ++a) {
    IdxSet p = principal(R, a);
    if (seen.insert(p).second) {
      principals.push_back(std::move(p));
      if (seen.size() > cap) return std::nullopt;
    }
  }
  // Every ideal is a sum of principal ideals; close under adding one more.
  std::deque<IdxSet> queue(principals.begin(), principals.end());
  while (!queue.empty()) {
    IdxSet cur = std::move(queue.front());
    queue.pop_front();
    for (const IdxSet& p : principals) {
      if (subset(p, cur)) continue;
      IdxSet s = sum(R, cur, p);
      if (seen.insert(s).second) {
        if (seen.size() > cap) return std::nullopt;
        queue.push_back(std::move(s));
      }
    }
  }
  return std::vector<IdxSet>(seen.begin(), seen.end());
}

IdxSet ker_pi(const FiniteRing& R, const IdxSet& p) {
  std::vector<char> outside(R.size(), 1);
  for (Idx a : p) outside[a] = 0;
  IdxSet out;
  for (Idx f = 0; f < R.size(); ++f) {
    for (Idx s = 0; s < R.size(); ++s)
      if (outside[s] && R.mul(f, s) == R.zero()) {
        out.push_back(f);
        break;
      }
  }
  return out;
}

}  // namespace ringlab::fin
