#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "ringlab/ring.hpp"
#include "ringlab/ultra.hpp"

// ring documents. Every document is a JSON object with a "kind" and an
// optional "name":
//
//   {"kind": "zmod", "n": 12}
//   {"kind": "gf", "q": 4}
//   {"kind": "table", "add": [[..]], "mul": [[..]], "zero": 0, "one": 1, "labels": [..]}
//   {"kind": "product", "factors": [doc, ...]}
//   {"kind": "quotient", "ring": doc, "generators": ["2", ...]}
//   {"kind": "powerset", "ground": 3}
//   {"kind": "truncation", "base": doc, "k": 3}
//   {"kind": "poly_quotient", "base": doc, "coeffs": ["1", "1"]}   monic, leading 1 implied
//   {"kind": "zalgebra", "r": 1, "t": 1, "d": [2], "unity": [1, 0],
//    "mult": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], "basis": ["1", "x"]}
//   {"kind": "ultra", "factors": [doc, ...], "ideal": [[1, 2]]}
//   {"kind": "catalog", "name": "deligne"}
//
// Integers inside a zalgebra payload may be JSON numbers or decimal strings.
namespace ringlab {

using Json = nlohmann::json;

// A ring together with the ultra-ring data it came from, when it did.
struct Subject {
  RingHandle ring;
  std::shared_ptr<const UltraRing> ultra;
};

// SchemaError on malformed documents, AlgebraError on presentations that
// violate the ring laws.
Subject construct_subject(const Json& doc);
RingHandle construct_ring(const Json& doc);
// Parses JSON text; SchemaError on syntax errors.
Json parse_document(const std::string& text);

// Presentation builders.
ZPresentation zmod_presentation(const Int& n);
// (Z/n)[x]/(x^k + c_{k-1} x^{k-1} + ... + c_0); n = 0 means Z.
ZPresentation polynomial_presentation(const Int& n, const IntVec& lower_coeffs);
// Direct product; free coordinates of all factors come first.
ZPresentation presentation_product(const std::vector<ZPresentation>& factors);
Json presentation_to_json(const ZPresentation& p);

}  // namespace ringlab
