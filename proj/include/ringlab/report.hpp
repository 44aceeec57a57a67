#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ringlab/classify.hpp"
#include "ringlab/verdict.hpp"

namespace ringlab {

enum class Agreement { pass, fail, indeterminate };
std::string to_string(Agreement a);

// How the clauses of a theorem relate to one another.
//   equivalence: all decided clauses agree; an Unknown clause makes the
//                report indeterminate.
//   implication: clauses form a chain c0 => c1 => ...; only a true clause
//                followed by a false one fails.
//   suite:       every clause is an independent check that must hold.
enum class TheoremKind { equivalence, implication, suite };
std::string to_string(TheoremKind k);

struct Clause {
  std::string label;
  Verdict verdict;
  Strategy strategy = Strategy::definitional;
  std::string route;
  std::optional<Witness> witness;
};

Clause clause_from(std::string label, const PredicateResult& r);

struct TheoremReport {
  std::string theorem_id;
  std::string ring;
  TheoremKind kind = TheoremKind::equivalence;
  std::vector<Clause> clauses;
  Agreement agreement = Agreement::indeterminate;
  std::vector<std::string> notes;
};

Agreement judge(TheoremKind kind, const std::vector<Clause>& clauses);
// Sets agreement from the clauses.
void finalize(TheoremReport& report);

// Machine format: one JSON object per report with the stable keys ring,
// predicate or theorem, verdict and witness (null when absent).
nlohmann::json witness_json(const std::optional<Witness>& w);
nlohmann::json to_json(const TheoremReport& report);
nlohmann::json predicate_json(const std::string& ring, const std::string& name, const PredicateResult& r);
std::string machine_line(const nlohmann::json& j);

}  // namespace ringlab
