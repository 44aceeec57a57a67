#pragma once

#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "ringlab/catalog.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// Readable gtest failure output.
inline void PrintTo(const Ideal& I, std::ostream* os) { *os << I.format(); }
inline void PrintTo(const Verdict& v, std::ostream* os) { *os << to_string(v); }

}  // namespace ringlab

namespace ringlab::test {

inline RingHandle ring(const std::string& json) { return construct_ring(parse_document(json)); }
inline RingHandle catalog(const std::string& name) { return construct_ring(catalog_get(name).doc); }
inline RingHandle zmod(std::size_t n) { return ring(R"({"kind":"zmod","n":)" + std::to_string(n) + "}"); }
inline RingHandle deligne() { return catalog("deligne"); }

inline Element el(const RingHandle& R, const std::string& s) { return R.parse(s); }

inline std::vector<std::string> labels(const RingHandle& R, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (const Element& x : xs) out.push_back(R.format(x));
  return out;
}

inline std::vector<std::string> members(const Ideal& I) {
  std::vector<std::string> out;
  for (Idx i : I.members()) out.push_back(I.ring().table().label(i));
  return out;
}

inline Ideal gen(const RingHandle& R, const std::vector<std::string>& gens) {
  std::vector<Element> es;
  for (const std::string& g : gens) es.push_back(R.parse(g));
  return ideal_from_generators(R, es);
}

}  // namespace ringlab::test
