#pragma once

#include <string>
#include <vector>

#include "ringlab/construct.hpp"
#include "ringlab/verdict.hpp"

namespace ringlab {

struct Expectation {
  std::string predicate;
  Truth value = Truth::Unknown;
  std::string reason;
};

struct CatalogEntry {
  std::string name;
  Json doc;
  std::vector<Expectation> expected;
  // Structural expectations in element syntax; empty means unchecked.
  std::vector<std::string> idempotents;
  std::vector<std::string> nilradical;                   // generators
  std::vector<std::vector<std::string>> minimal_primes;  // generators of each
  std::vector<Expectation> mod_nil;                      // predicates of R / N(R)
};

// Named entries plus the family zmodN for 1 <= N <= 4096. UnknownName otherwise.
CatalogEntry catalog_get(const std::string& name);
// The named entries and zmod1 .. zmod12, in a fixed order.
std::vector<std::string> catalog_names();

struct CatalogMismatch {
  std::string what;
  std::string expected;
  std::string actual;
};
// Every expectation of the entry that the computed profile contradicts.
std::vector<CatalogMismatch> check_entry(const CatalogEntry& entry);

}  // namespace ringlab
