#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ringlab/finite_ring.hpp"

// Ideal arithmetic and structure scans on table rings. Ideals are IdxSets
// holding every member.
namespace ringlab::fin {

bool contains(const IdxSet& s, Idx a);
bool subset(const IdxSet& a, const IdxSet& b);
IdxSet intersect(const IdxSet& a, const IdxSet& b);

IdxSet zero_ideal(const FiniteRing& R);
IdxSet whole(const FiniteRing& R);
IdxSet principal(const FiniteRing& R, Idx g);
IdxSet generated(const FiniteRing& R, const std::vector<Idx>& gens);
IdxSet sum(const FiniteRing& R, const IdxSet& I, const IdxSet& J);
IdxSet product(const FiniteRing& R, const IdxSet& I, const IdxSet& J);
IdxSet annihilator(const FiniteRing& R, Idx f);
IdxSet annihilator(const FiniteRing& R, const IdxSet& I);
IdxSet colon(const FiniteRing& R, const IdxSet& I, Idx f);
// Union of (I : f^k) over k.
IdxSet saturation(const FiniteRing& R, const IdxSet& I, Idx f);
bool is_ideal(const FiniteRing& R, const IdxSet& s);
// Small generating set, chosen greedily in index order.
std::vector<Idx> generators(const FiniteRing& R, const IdxSet& I);

IdxSet nilradical(const FiniteRing& R);

// First a in I admitting no g in I with a = a g.
std::optional<Idx> pure_refuter(const FiniteRing& R, const IdxSet& I);
// First a in I admitting no g in I with a - a g nilpotent.
std::optional<Idx> quasi_pure_refuter(const FiniteRing& R, const IdxSet& I);
// First a in I with a e != a for every idempotent e in I.
std::optional<Idx> regular_refuter(const FiniteRing& R, const IdxSet& I);
// The idempotent e with Re = I, if one exists.
std::optional<Idx> idempotent_generator(const FiniteRing& R, const IdxSet& I);

std::vector<Idx> primitive_idempotents(const FiniteRing& R);
// {x : x e nilpotent} for each primitive idempotent e, in that order.
std::vector<IdxSet> minimal_primes(const FiniteRing& R);

bool is_prime(const FiniteRing& R, const IdxSet& I);
bool is_maximal(const FiniteRing& R, const IdxSet& I);
bool is_local(const FiniteRing& R);
// A zero-divisor that is not nilpotent, if any.
std::optional<Idx> primary_refuter(const FiniteRing& R);

// Every ideal, sorted; nullopt once more than cap distinct ideals appear.
std::optional<std::vector<IdxSet>> all_ideals(const FiniteRing& R, std::size_t cap);

// Kernel of R -> R_p: elements killed by something outside p.
IdxSet ker_pi(const FiniteRing& R, const IdxSet& p);

}  // namespace ringlab::fin
