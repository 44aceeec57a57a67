#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/construct.hpp"
#include "ringlab/report.hpp"

namespace ringlab {

// Which rings a corpus run covers. The defaults give the standard corpus.
struct CorpusConfig {
  std::size_t max_zmod = 64;
  // Seeds for direct products of up to max_factors factors (multisets).
  std::vector<std::string> product_seeds = {"F2", "F3", "F4", "Z/4", "Z/8", "Z/9"};
  std::size_t max_factors = 3;
  // Monic quotients (Z/p)[x]/(f) of degree >= 2 and truncations (Z/n)[x]/(x^k)
  // with at most this many elements; 0 disables both.
  std::size_t max_poly_size = 64;
  bool catalog = true;
  // Ultra instances over P(X) for |X| <= ultra_ground with factors from
  // ultra_seeds; 0 disables them.
  std::size_t ultra_ground = 4;
  std::vector<std::string> ultra_seeds = {"F2", "F3", "Z/4"};

  // The per-ring invariant checks are skipped above these sizes.
  std::size_t pairwise_limit = 64;
  std::size_t truncation_limit = 16;
  // Adds sampled clauses on infinite Z-algebras (see VerifyOptions).
  bool sampled_clauses = false;
};

struct CorpusRing {
  std::string name;
  Json doc;
  // Catalog entry whose expectations apply to this ring.
  std::optional<std::string> catalog;
  // Ultra instances only run the ultra suite.
  bool ultra_only = false;
};

// Every ring of the corpus, sorted by name with duplicates removed.
std::vector<CorpusRing> corpus_rings(const CorpusConfig& cfg);

struct RingOutcome {
  std::string ring;
  std::vector<std::string> lines;  // machine lines in emission order
  std::size_t pass = 0, fail = 0, indeterminate = 0;
  // "theorem on ring" for each failing or indeterminate report.
  std::vector<std::string> failures, indeterminates;
};

// Classifies the ring and runs every applicable theorem and invariant check.
RingOutcome run_ring(const CorpusRing& ring, const CorpusConfig& cfg);

struct CorpusSummary {
  std::size_t rings = 0;
  std::size_t pass = 0, fail = 0, indeterminate = 0;
  std::vector<std::string> lines;  // grouped by ring in name order
  std::vector<std::string> failures;
  std::vector<std::string> indeterminates;
};

// Runs rings on `jobs` threads (0 means the hardware concurrency). The
// result does not depend on the thread count.
CorpusSummary run_corpus(const CorpusConfig& cfg, std::size_t jobs = 1);
CorpusSummary run_corpus(const std::vector<CorpusRing>& rings, const CorpusConfig& cfg, std::size_t jobs = 1);

}  // namespace ringlab
