#pragma once

#include <utility>
#include <vector>

#include "ringlab/bigint.hpp"

// Dense univariate polynomials over Z and Q, coefficients stored from the
// constant term upward with no trailing zeros. The zero polynomial is empty.
namespace ringlab::upoly {

using ZPoly = IntVec;
using QPoly = RatVec;

template <class P>
void trim(P& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class P>
int degree(const P& p) {
  return static_cast<int>(p.size()) - 1;
}

QPoly to_q(const ZPoly& p);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly monic(QPoly a);
QPoly gcd(const QPoly& a, const QPoly& b);  // monic, or empty when both zero
QPoly derivative(const QPoly& a);
// s*a + t*b == gcd(a, b) (monic).
struct ExtGcd {
  QPoly g, s, t;
};
ExtGcd ext_gcd(const QPoly& a, const QPoly& b);

// Primitive integer polynomial with positive leading coefficient, a rational
// multiple of p.
ZPoly primitive_part(const QPoly& p);

// Irreducible factors over Q of a squarefree primitive polynomial of degree
// >= 1, each primitive with positive leading coefficient, sorted by degree
// then coefficients. Zassenhaus: modular factorisation, Hensel lifting,
// exhaustive recombination.
std::vector<ZPoly> factor_squarefree(const ZPoly& f);

// Distinct monic irreducible factors of p over Q with multiplicities.
std::vector<std::pair<QPoly, int>> factor(const QPoly& p);

std::string to_string(const QPoly& p, const std::string& var = "x");

}  // namespace ringlab::upoly
