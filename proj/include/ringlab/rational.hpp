#pragma once

#include <optional>

#include "ringlab/bigint.hpp"

// Exact linear algebra over Q for the rational algebra R (x) Q.
namespace ringlab {

// Coefficients c with sum c_i * vecs[i] == target, if target is in the span.
std::optional<RatVec> solve_in_span(const std::vector<RatVec>& vecs, const RatVec& target);

std::size_t rank(RatMat rows);

// Clears denominators row by row (each row scaled by the lcm of its
// denominators, then divided by its content).
IntMat integral_rows(const RatMat& rows);

}  // namespace ringlab
