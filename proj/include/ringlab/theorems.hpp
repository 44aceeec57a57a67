#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ringlab/construct.hpp"
#include "ringlab/report.hpp"

namespace ringlab {

// What one clause evaluator returns; the route label comes from the registry.
struct ClauseValue {
  Verdict verdict;
  std::optional<Witness> witness;
  Strategy strategy = Strategy::definitional;
};

using ClauseEval = std::function<ClauseValue(const RingHandle&)>;

// A clause has up to two evaluators. Table rings use `finite`; Z-algebras
// use `algebra` when present and otherwise fall back to `finite` on their
// table when they are finite. A clause with no usable evaluator is skipped.
struct ClauseDef {
  std::string label;
  std::string finite_route;
  ClauseEval finite;
  std::string algebra_route;
  ClauseEval algebra;
  // The algebra evaluator only samples and cannot confirm on infinite rings.
  bool algebra_sampled = false;
};

struct VerifyOptions {
  // Include sampled clauses on infinite Z-algebras. They can refute but
  // never confirm, so they make reports indeterminate.
  bool sampled_clauses = false;
};

struct TheoremDef {
  std::string id;
  TheoremKind kind = TheoremKind::equivalence;
  std::string statement;
  std::vector<ClauseDef> clauses;
  bool needs_ultra = false;
  bool needs_nonzero = false;
};

// Registered theorems in report order. Construction fails with
// VerificationError when two clauses of one theorem share a route label on
// the same backend.
const std::vector<TheoremDef>& theorem_registry();
std::vector<std::string> theorem_ids();
// Resolves aliases such as "quasi-pf"; UnknownName otherwise.
const TheoremDef& theorem_def(const std::string& id);

// NotApplicable when too few clauses apply to the subject's backend.
TheoremReport verify_theorem(const std::string& id, const Subject& s, const VerifyOptions& opts = {});
bool theorem_applies(const std::string& id, const Subject& s, const VerifyOptions& opts = {});
// Every applicable theorem in registry order.
std::vector<TheoremReport> verify_all(const Subject& s, const VerifyOptions& opts = {});

}  // namespace ringlab
