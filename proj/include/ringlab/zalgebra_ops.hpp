#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ringlab/zalgebra.hpp"

// Ideal-theoretic computations on finite-rank Z-algebras. Ideals are
// lattices containing the relation lattice.
namespace ringlab::zal {

Lattice colon(const ZAlgebra& A, const Lattice& I, const IntVec& f);
// (I : f^infinity), asserting stability one step past the first repeat.
Lattice saturation(const ZAlgebra& A, const Lattice& I, const IntVec& f);
// Least n >= 1 with Ann(f^n) = Ann(f^{n+1}), and that ideal.
std::pair<std::size_t, Lattice> annihilator_stabilized(const ZAlgebra& A, const IntVec& f);
Lattice product(const ZAlgebra& A, const Lattice& I, const Lattice& J);
// Basis rows of I that are nonzero in R.
IntMat generators(const ZAlgebra& A, const Lattice& I);

// Rad(R (x) Q) = 0 and no nonzero nilpotent torsion element.
bool is_reduced(const ZAlgebra& A);
Lattice nilradical(const ZAlgebra& A);

std::optional<IntVec> idempotent_generator(const ZAlgebra& A, const Lattice& I);
// A generator g of I with I + Ann(g^infinity) != R, if any.
std::optional<IntVec> quasi_pure_refuter(const ZAlgebra& A, const Lattice& I);
std::vector<IntVec> primitive_idempotents(const ZAlgebra& A);

bool is_domain(const ZAlgebra& A);
bool is_field(const ZAlgebra& A);
bool is_prime(const ZAlgebra& A, const Lattice& I);
bool is_maximal(const ZAlgebra& A, const Lattice& I);

// Sorted; certified prime, pairwise incomparable, intersecting to the
// nilradical.
const std::vector<Lattice>& minimal_primes(const ZAlgebra& A);
// Maximal ideals containing I; requires R/I finite.
std::vector<Lattice> maximal_over(const ZAlgebra& A, const Lattice& I);
// Maximal ideals over the primes dividing the torsion exponent.
const std::vector<Lattice>& torsion_maximal_ideals(const ZAlgebra& A);
// Minimal primes together with every maximal ideal m with (0 : m) != 0.
const std::vector<Lattice>& associated_primes(const ZAlgebra& A);
std::vector<Lattice> embedded_primes(const ZAlgebra& A);

// {f : fs = 0 for some s outside p}.
Lattice ker_pi(const ZAlgebra& A, const Lattice& p);

// Every zero-divisor nilpotent, decided by counting associated primes.
bool is_primary_by_ass(const ZAlgebra& A);
bool is_primary_ideal(const ZAlgebra& A, const Lattice& I);

}  // namespace ringlab::zal
