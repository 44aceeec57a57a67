#include "ringlab/catalog.hpp"

#include <algorithm>
#include <map>

#include "ringlab/classify.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/spectrum.hpp"

namespace ringlab {

namespace {

constexpr Truth T = Truth::True;
constexpr Truth F = Truth::False;

Json zalgebra(const ZPresentation& p, const std::string& name) {
  Json j = presentation_to_json(p);
  j["name"] = name;
  return j;
}

ZPresentation deligne() {
  ZPresentation p;
  p.r = 1;
  p.t = 1;
  p.d = {Int(2)};
  p.unity = {Int(1), Int(0)};
  p.mult = {{{Int(1), Int(0)}, {Int(0), Int(1)}}, {{Int(0), Int(1)}, {Int(0), Int(0)}}};
  p.names = {"1", "x"};
  return p;
}

ZPresentation named(ZPresentation p, std::vector<std::string> names) {
  p.names = std::move(names);
  return p;
}

bool squarefree(std::size_t n) {
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

std::size_t distinct_primes(std::size_t n) {
  std::size_t k = 0;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ++k;
      while (n % p == 0) n /= p;
    }
  return k + (n > 1 ? 1 : 0);
}

CatalogEntry zmod_entry(std::size_t n) {
  CatalogEntry e;
  e.name = "zmod" + std::to_string(n);
  e.doc = {{"kind", "zmod"}, {"n", n}, {"name", "Z/" + std::to_string(n)}};
  const bool sqf = squarefree(n);
  const std::size_t k = distinct_primes(n);
  const Truth reduced = sqf ? T : F;
  e.expected = {
      {"reduced", reduced, "squarefree modulus"},
      {"pp", reduced, "finite: pp exactly when reduced"},
      {"pf", reduced, "finite: pf exactly when pp"},
      {"gpp", T, "zero-dimensional"},
      {"gpf", T, "zero-dimensional"},
      {"quasi_pf", T, "zero-dimensional"},
      {"zero_dimensional", T, "finite ring"},
      {"local", n > 1 && k == 1 ? T : F, "prime power modulus"},
      {"primary", k <= 1 ? T : F, "local Artinian or zero"},
  };
  if (n > 1) e.expected.push_back({"field", k == 1 && sqf ? T : F, "prime modulus"});
  if (n == 4) {
    e.idempotents = {"0", "1"};
    e.nilradical = {"2"};
    e.minimal_primes = {{"2"}};
  }
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;

  {
    CatalogEntry e;
    e.name = "deligne";
    e.doc = zalgebra(deligne(), "Z[x]/(x^2, 2x)");
    e.expected = {{"mp", T, "one minimal prime"},
                  {"quasi_pf", F, "ker_pi at (2, x) is not pure"},
                  {"gpp", F, "Ann(2^n) = (x) for all n"},
                  {"gpf", F, "gpf implies quasi_pf"},
                  {"pp", F, "not reduced"},
                  {"reduced", F, "x is nilpotent"},
                  {"primary", F, "2 kills x and is not nilpotent"},
                  {"domain", F, "2x = 0"}};
    e.idempotents = {"0", "1"};
    e.nilradical = {"x"};
    e.minimal_primes = {{"x"}};
    e.mod_nil = {{"pp", T, "R/N is Z"}, {"domain", T, "R/N is Z"}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "z";
    e.doc = zalgebra(named(polynomial_presentation(0, {Int(0)}), {"1"}), "Z");
    e.expected = {{"domain", T, "integers"}, {"pp", T, "domain"},   {"pf", T, "domain"},
                  {"gpp", T, "domain"},     {"field", F, "2 is not a unit"}, {"reduced", T, "domain"},
                  {"primary", T, "domain"}, {"mp", T, "one minimal prime"}};
    e.idempotents = {"0", "1"};
    e.minimal_primes = {{}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "z_x_x2_minus_2x";
    e.doc = zalgebra(named(polynomial_presentation(0, {Int(0), Int(-2)}), {"1", "x"}), "Z[x]/(x^2 - 2x)");
    e.expected = {{"mp", F, "(x) + (x - 2) = (2, x)"}, {"reduced", T, "x(x - 2) = 0 with both factors prime"},
                  {"pp", F, "not mp"},                  {"pf", F, "not mp"},
                  {"quasi_pf", F, "quasi_pf implies mp"}, {"gpf", F, "gpf implies mp"},
                  {"domain", F, "x(x - 2) = 0"}};
    e.idempotents = {"0", "1"};
    e.minimal_primes = {{"x"}, {"[-2,1]"}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "z_omega";
    e.doc = zalgebra(named(polynomial_presentation(0, {Int(5), Int(0)}), {"1", "w"}), "Z[w]/(w^2 + 5)");
    e.expected = {{"domain", T, "order in Q(sqrt(-5))"}, {"pp", T, "domain"}, {"reduced", T, "domain"},
                  {"field", F, "2 is not a unit"},      {"gpf", T, "domain"}};
    e.idempotents = {"0", "1"};
    out.push_back(std::move(e));
  }
  ZPresentation z;
  z.r = 1;
  z.unity = {Int(1)};
  z.mult = {{{Int(1)}}};
  {
    CatalogEntry e;
    e.name = "z_cross_z";
    e.doc = zalgebra(presentation_product({z, z}), "Z x Z");
    e.expected = {{"pp", T, "product of domains"}, {"pf", T, "product of domains"}, {"domain", F, "(1,0)(0,1) = 0"},
                  {"reduced", T, "product of domains"}, {"mp", T, "minimal primes are comaximal"},
                  {"gpp", T, "pp"}, {"purified", T, "separated by (1,0)"}};
    e.idempotents = {"[0,0]", "[0,1]", "[1,0]", "[1,1]"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "z_x_x2";
    e.doc = zalgebra(named(polynomial_presentation(0, {Int(0), Int(0)}), {"1", "x"}), "Z[x]/(x^2)");
    e.expected = {{"primary", T, "zero-divisors are multiples of x"}, {"gpp", T, "primary"}, {"gpf", T, "primary"},
                  {"quasi_pf", T, "primary"}, {"pp", F, "Ann(x) = (x)"}, {"reduced", F, "x is nilpotent"},
                  {"mp", T, "one minimal prime"}};
    e.nilradical = {"x"};
    e.minimal_primes = {{"x"}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "z_cross_f2";
    e.doc = zalgebra(presentation_product({z, zmod_presentation(2)}), "Z x F2");
    e.expected = {{"pp", T, "product of domains"}, {"reduced", T, "product of domains"},
                  {"domain", F, "nontrivial idempotent"}, {"gpp", T, "pp"}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "z_cross_z4";
    e.doc = zalgebra(presentation_product({z, zmod_presentation(4)}), "Z x Z/4");
    e.expected = {{"gpp", T, "both factors primary"}, {"gpf", T, "gpp"}, {"pf", F, "Ann((0,2)) is not pure"},
                  {"pp", F, "not reduced"}, {"mp", T, "minimal primes are comaximal"}};
    out.push_back(std::move(e));
  }
  for (std::size_t g : {2u, 3u}) {
    CatalogEntry e;
    e.name = "powerset" + std::to_string(g);
    e.doc = {{"kind", "powerset"}, {"ground", g}};
    e.expected = {{"absolutely_flat", T, "Boolean ring"}, {"pp", T, "Boolean ring"}, {"reduced", T, "Boolean ring"},
                  {"zero_dimensional", T, "Boolean ring"}, {"field", F, "more than one point"},
                  {"local", F, "more than one point"}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "f2_x_z4";
    e.doc = {{"kind", "product"}, {"factors", {{{"kind", "zmod"}, {"n", 2}}, {{"kind", "zmod"}, {"n", 4}}}}};
    e.expected = {{"gpf", T, "finite"}, {"gpp", T, "finite"}, {"pf", F, "Ann((0,2)) is not pure"},
                  {"pp", F, "not reduced"}, {"mp", T, "finite"}, {"reduced", F, "(0,2) is nilpotent"}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "f2_x_f3";
    e.doc = {{"kind", "product"}, {"factors", {{{"kind", "zmod"}, {"n", 2}}, {{"kind", "zmod"}, {"n", 3}}}}};
    e.expected = {{"pp", T, "product of fields"}, {"absolutely_flat", T, "product of fields"},
                  {"field", F, "nontrivial idempotent"}, {"reduced", T, "product of fields"}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "f4";
    e.doc = {{"kind", "gf"}, {"q", 4}};
    e.expected = {{"field", T, "finite field"}, {"domain", T, "field"}, {"pp", T, "field"}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "f2_x_x2";
    e.doc = {{"kind", "truncation"}, {"base", {{"kind", "zmod"}, {"n", 2}}}, {"k", 2}};
    e.expected = {{"local", T, "one maximal ideal (x)"}, {"primary", T, "local Artinian"},
                  {"pf", F, "Ann(x) = (x) is not pure"}, {"gpf", T, "primary"}};
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<CatalogEntry>& named_entries() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string join(const std::vector<std::string>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s + "}";
}

}  // namespace

CatalogEntry catalog_get(const std::string& name) {
  for (const CatalogEntry& e : named_entries())
    if (e.name == name) return e;
  if (name.rfind("zmod", 0) == 0 && name.size() > 4 &&
      std::all_of(name.begin() + 4, name.end(), [](char c) { return c >= '0' && c <= '9'; }) && name.size() <= 8) {
    const std::size_t n = std::stoul(name.substr(4));
    if (n >= 1 && n <= kMaxFiniteSize) return zmod_entry(n);
  }
  throw UnknownName("no catalog entry named " + name);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const CatalogEntry& e : named_entries()) out.push_back(e.name);
  for (std::size_t n = 1; n <= 12; ++n) out.push_back("zmod" + std::to_string(n));
  return out;
}

std::vector<CatalogMismatch> check_entry(const CatalogEntry& entry) {
  std::vector<CatalogMismatch> out;
  const RingHandle R = construct_ring(entry.doc);
  for (const Expectation& x : entry.expected) {
    const Verdict v = predicate(R, x.predicate).verdict;
    if (v.value != x.value) out.push_back({x.predicate, to_string(x.value), to_string(v)});
  }
  if (!entry.idempotents.empty()) {
    std::vector<std::string> want, got;
    for (const std::string& s : entry.idempotents) want.push_back(R.format(R.parse(s)));
    for (const Element& e : idempotents(R)) got.push_back(R.format(e));
    if (sorted(want) != sorted(got)) out.push_back({"idempotents", join(sorted(want)), join(sorted(got))});
  }
  auto ideal_of = [&](const std::vector<std::string>& gens) {
    std::vector<Element> elems;
    for (const std::string& g : gens) elems.push_back(R.parse(g));
    return ideal_from_generators(R, elems);
  };
  if (!entry.nilradical.empty()) {
    const Ideal want = ideal_of(entry.nilradical), got = nilradical(R);
    if (!(want == got)) out.push_back({"nilradical", want.format(), got.format()});
  }
  if (!entry.minimal_primes.empty()) {
    std::vector<std::string> want, got;
    for (const auto& gens : entry.minimal_primes) want.push_back(ideal_of(gens).format());
    for (const PrimeIdeal& p : minimal_primes(R)) got.push_back(p.ideal.format());
    if (sorted(want) != sorted(got)) out.push_back({"minimal_primes", join(sorted(want)), join(sorted(got))});
  }
  if (!entry.mod_nil.empty()) {
    const RingHandle& B = mod_nil(R).ring();
    for (const Expectation& x : entry.mod_nil) {
      const Verdict v = predicate(B, x.predicate).verdict;
      if (v.value != x.value) out.push_back({"R/N " + x.predicate, to_string(x.value), to_string(v)});
    }
  }
  return out;
}

}  // namespace ringlab
