#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/ring.hpp"
#include "ringlab/verdict.hpp"

namespace ringlab {

enum class Strategy { definitional, theorem_backed, unknown };
std::string to_string(Strategy s);

struct PredicateResult {
  Verdict verdict;
  std::optional<Witness> witness;
  Strategy strategy = Strategy::definitional;
  std::string route;
};

struct ClassifyOptions {
  // Height of the sampled definitional guard on infinite Z-algebras.
  int sample_height = 4;
};

// Every predicate name, in report order.
const std::vector<std::string>& predicate_names();
// (A, B) pairs with A implying B.
const std::vector<std::pair<std::string, std::string>>& implication_lattice();

struct Classification {
  std::string ring;
  std::map<std::string, PredicateResult> results;
  // "A => B" for each decided implication that fails.
  std::vector<std::string> violations;

  const PredicateResult& at(const std::string& name) const;
  const Verdict& verdict(const std::string& name) const { return at(name).verdict; }
};

// UnknownName for an unregistered predicate; ConsistencyError if a
// theorem-backed verdict is contradicted by the sampled definitional scan.
PredicateResult predicate(const RingHandle& R, const std::string& name, const ClassifyOptions& opts = {});
Classification classify(const RingHandle& R, const ClassifyOptions& opts = {});
// classify(R / N(R)).
Classification quotient_mod_nil_profile(const RingHandle& R, const ClassifyOptions& opts = {});
std::vector<std::string> implication_violations(const std::map<std::string, PredicateResult>& results);

// Individual decision routes. Theorem verification evaluates equivalent
// clauses through different routes, so each is exposed on its own.
namespace routes {

// Exhaustive definitional scans on a finite ring (table backend, or a
// finite Z-algebra through its table).
PredicateResult definitional(const RingHandle& R, const std::string& name);

// Finite-rank Z-algebra routes.
PredicateResult z_reduced(const RingHandle& R);
PredicateResult z_domain(const RingHandle& R);
PredicateResult z_primary(const RingHandle& R);  // N prime and ker_pi(N) = 0
PredicateResult z_mp(const RingHandle& R);
PredicateResult z_pp(const RingHandle& R);             // reduced and mp
PredicateResult z_pf(const RingHandle& R);             // reduced, one idempotent per minimal prime
PredicateResult z_quasi_pf(const RingHandle& R);       // ker_pi(p) idempotent-generated, p minimal
PredicateResult z_gpp(const RingHandle& R);            // every indecomposable factor primary
PredicateResult z_gpf(const RingHandle& R);            // Ann(f^infinity) over associated-prime patterns
PredicateResult z_purified(const RingHandle& R);
// Associated primes pairwise comaximal: every R_m primary.
PredicateResult z_localizations_primary(const RingHandle& R);
// ker_pi(m) primary for every maximal ideal that can fail.
PredicateResult z_ker_pi_maximal_primary(const RingHandle& R);

// The definitional predicate checked on A.sample(height): False with the
// first refuting sample, True when the sample is the whole (finite) ring,
// Unknown otherwise. Only predicates with a per-element definition qualify.
PredicateResult sampled(const RingHandle& R, const std::string& name, int height);

// Table ring of a finite ring on either backend.
RingHandle as_table(const RingHandle& R);

}  // namespace routes

}  // namespace ringlab
