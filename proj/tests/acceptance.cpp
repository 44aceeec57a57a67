// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ringlab/catalog.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/poly.hpp"
#include "ringlab/spectrum.hpp"
#include "ringlab/theorems.hpp"
#include "ringlab/ultra.hpp"

using namespace ringlab;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (ok) detail << why;
    ok = false;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::size_t cores() { return std::max(1u, std::thread::hardware_concurrency()); }

// The default corpus is shared by several criteria.
const CorpusSummary& default_corpus(double* elapsed = nullptr) {
  static double took = 0;
  static const CorpusSummary summary = [] {
    const auto t0 = Clock::now();
    CorpusSummary s = run_corpus(CorpusConfig{}, cores());
    took = seconds_since(t0);
    return s;
  }();
  if (elapsed) *elapsed = took;
  return summary;
}

std::vector<Json> parsed_lines(const CorpusSummary& s) {
  std::vector<Json> out;
  out.reserve(s.lines.size());
  for (const std::string& line : s.lines) out.push_back(Json::parse(line));
  return out;
}

// 1
void catalog_exactness(Outcome& out) {
  for (const char* name : {"zmod4", "deligne"}) {
    const auto t0 = Clock::now();
    const CatalogEntry e = catalog_get(name);
    for (const CatalogMismatch& m : check_entry(e))
      out.fail(std::string(name) + ": " + m.what + " expected " + m.expected + " got " + m.actual);
    const double took = seconds_since(t0);
    out.require(took < 1.0, std::string(name) + " took " + std::to_string(took) + " s");
  }

  const RingHandle Z4 = construct_ring(catalog_get("zmod4").doc);
  const Classification c4 = classify(Z4);
  out.require(c4.verdict("gpf").is_true(), "zmod4 gpf");
  out.require(c4.verdict("pf").is_false(), "zmod4 pf");
  const PredicateResult pf = c4.at("pf");
  out.require(pf.witness && pf.witness->elements == std::vector<std::string>{"2"}, "zmod4 pf witness");
  const Ideal ann2 = annihilator(Z4, Z4.parse("2"));
  out.require(ann2.members() == IdxSet{0, 2}, "Ann(2) in Z/4");
  out.require(purity_class(ann2).pure.is_false(), "Ann(2) is pure");

  const RingHandle D = construct_ring(catalog_get("deligne").doc);
  const Classification cd = classify(D);
  out.require(cd.verdict("mp").is_true(), "deligne mp");
  out.require(cd.verdict("quasi_pf").is_false(), "deligne quasi_pf");
  out.require(cd.verdict("gpp").is_false(), "deligne gpp");
  out.require(idempotents(D).size() == 2, "deligne idempotents");
  const Ideal x = ideal_from_generators(D, {D.parse("x")});
  out.require(nilradical(D) == x, "deligne nilradical");
  const auto mins = minimal_primes(D);
  out.require(mins.size() == 1 && mins[0].ideal == x, "deligne minimal primes");
  out.require(quotient_mod_nil_profile(D).verdict("pp").is_true(), "deligne R/N pp");
  if (out.ok) out.detail << "zmod4 and deligne exact, each under 1 s";
}

// 2
void default_corpus_clean(Outcome& out) {
  double took = 0;
  const CorpusSummary& s = default_corpus(&took);
  out.require(s.fail == 0, std::to_string(s.fail) + " failures, first: " + (s.failures.empty() ? "" : s.failures[0]));
  out.require(s.indeterminate == 0, std::to_string(s.indeterminate) + " indeterminate");
  out.require(took < 300, "took " + std::to_string(took) + " s");

  std::set<std::string> seen;
  for (const Json& j : parsed_lines(s))
    if (j.contains("theorem") && j.at("verdict") == "pass") seen.insert(j.at("theorem").get<std::string>());
  for (const char* id : {"II", "III", "IV", "QPF", "IX", "XI", "CorI", "CorIII", "92629456", "PropIV", "ultra"})
    out.require(seen.count(id) > 0, std::string("no passing report for ") + id);
  if (out.ok)
    out.detail << s.rings << " rings, " << s.pass << " reports pass, " << static_cast<int>(took) << " s on " << cores()
               << " threads";
}

// 3
struct Mirror {
  std::string name;
  ZPresentation presentation;
  Json table_doc;
};

Json zmod_doc(long n) { return {{"kind", "zmod"}, {"n", n}}; }
Json poly_doc(long n, const std::vector<long>& lower) {
  Json coeffs = Json::array();
  for (long c : lower) coeffs.push_back(std::to_string(c));
  return {{"kind", "poly_quotient"}, {"base", zmod_doc(n)}, {"coeffs", coeffs}};
}
IntVec ints(const std::vector<long>& xs) {
  IntVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Mirror> mirrors() {
  std::vector<Mirror> out;
  for (long n : {1, 2, 3, 4, 6, 8, 9, 12, 16, 30})
    out.push_back({"Z/" + std::to_string(n), zmod_presentation(n), zmod_doc(n)});
  const std::vector<std::pair<long, std::vector<long>>> polys = {
      {2, {1, 1}}, {2, {0, 0}}, {3, {1, 0}}, {3, {0, 0}}, {4, {0, 0}},   {4, {2, 0}},
      {6, {0, 1}}, {2, {0, 0, 0}}, {2, {1, 0, 1}}, {9, {3, 0}}, {5, {0, 1}}};
  for (const auto& [n, lower] : polys)
    out.push_back({poly_doc(n, lower).dump(), polynomial_presentation(n, ints(lower)), poly_doc(n, lower)});
  const std::vector<std::vector<long>> products = {{2, 3}, {2, 2}, {4, 3}, {2, 4}, {3, 3, 2}};
  for (const auto& ns : products) {
    std::vector<ZPresentation> ps;
    Json factors = Json::array();
    for (long n : ns) {
      ps.push_back(zmod_presentation(n));
      factors.push_back(zmod_doc(n));
    }
    const Json doc = {{"kind", "product"}, {"factors", factors}};
    out.push_back({doc.dump(), presentation_product(ps), doc});
  }
  {
    const Json doc = {{"kind", "product"}, {"factors", {zmod_doc(2), poly_doc(2, {0, 0})}}};
    out.push_back({doc.dump(), presentation_product({zmod_presentation(2), polynomial_presentation(2, ints({0, 0}))}),
                   doc});
  }
  return out;
}

// Membership vector of an ideal over the shared index order.
std::vector<bool> indicator(const Ideal& I, const std::vector<Element>& elems) {
  std::vector<bool> out;
  for (const Element& e : elems) out.push_back(I.contains(e));
  return out;
}

void mirror_agreement(Outcome& out) {
  std::size_t checked = 0;
  for (const Mirror& m : mirrors()) {
    const RingHandle A = RingHandle::from_algebra(make_zalgebra(m.presentation), "mirror " + m.name);
    const RingHandle T = construct_ring(m.table_doc);
    const std::string tag = m.name + ": ";
    if (A.algebra().r() != 0) {
      out.fail(tag + "free rank");
      continue;
    }
    const FiniteRingPtr AF = A.algebra().to_finite();
    const FiniteRing& TF = T.table();
    if (AF->size() != TF.size()) {
      out.fail(tag + "size");
      continue;
    }
    bool same_tables = true;
    for (Idx a = 0; a < TF.size() && same_tables; ++a)
      for (Idx b = 0; b < TF.size(); ++b)
        if (AF->add(a, b) != TF.add(a, b) || AF->mul(a, b) != TF.mul(a, b)) {
          same_tables = false;
          break;
        }
    if (!same_tables) {
      out.fail(tag + "tables differ under the index identity");
      continue;
    }

    std::vector<Element> ae, te;
    for (const IntVec& v : A.algebra().torsion_elements()) ae.push_back(A.from_vector(v));
    for (Idx k = 0; k < TF.size(); ++k) te.push_back(T.from_index(k));

    for (std::size_t k = 0; k < ae.size(); ++k) {
      const Ideal ia = annihilator(A, ae[k]), it = annihilator(T, te[k]);
      if (indicator(ia, ae) != indicator(it, te)) out.fail(tag + "annihilator of " + T.format(te[k]));
      const PurityClass pa = purity_class(ia), pt = purity_class(it);
      if (!(pa.pure == pt.pure && pa.quasi_pure == pt.quasi_pure && pa.regular == pt.regular))
        out.fail(tag + "purity class of Ann(" + T.format(te[k]) + ")");
    }
    if (indicator(nilradical(A), ae) != indicator(nilradical(T), te)) out.fail(tag + "nilradical");

    std::set<std::vector<bool>> ma, mt;
    for (const PrimeIdeal& p : minimal_primes(A)) ma.insert(indicator(p.ideal, ae));
    for (const PrimeIdeal& p : minimal_primes(T)) mt.insert(indicator(p.ideal, te));
    if (ma != mt) out.fail(tag + "minimal primes");

    const Classification ca = classify(A), ct = classify(T);
    for (const std::string& p : predicate_names())
      if (!(ca.verdict(p) == ct.verdict(p)) || !ca.verdict(p).decided()) out.fail(tag + "predicate " + p);
    ++checked;
  }
  out.require(checked >= 20, "only " + std::to_string(checked) + " mirrors");
  if (out.ok) out.detail << checked << " r=0 presentations agree with their tables";
}

// 4
void theorem_vi_window(Outcome& out) {
  const std::vector<std::pair<std::string, Json>> bases = {
      {"F2", {{"kind", "gf"}, {"q", 2}}},
      {"F3", {{"kind", "gf"}, {"q", 3}}},
      {"F4", {{"kind", "gf"}, {"q", 4}}},
      {"F2xF2", {{"kind", "product"}, {"factors", {{{"kind", "gf"}, {"q", 2}}, {{"kind", "gf"}, {"q", 2}}}}}},
      {"F2xF3", {{"kind", "product"}, {"factors", {{{"kind", "gf"}, {"q", 2}}, {{"kind", "gf"}, {"q", 3}}}}}}};
  std::size_t polys = 0;
  for (const auto& [name, doc] : bases) {
    const RingHandle B = construct_ring(doc);
    const std::size_t n = B.size().value();
    for (std::size_t code = 0; code < n * n * n; ++code) {
      const Poly f = Poly::from_indices(B, {static_cast<Idx>(code % n), static_cast<Idx>(code / n % n),
                                            static_cast<Idx>(code / n / n)});
      ++polys;
      if (!annihilator_matches_idempotent(f, 4)) out.fail(name + ": " + f.format());
    }
  }
  if (out.ok) out.detail << polys << " polynomials of degree <= 2 over 5 bases, window 4";
}

// 5
void truncations(Outcome& out) {
  std::size_t rings = 0;
  for (const CorpusRing& r : corpus_rings(CorpusConfig{})) {
    if (r.ultra_only) continue;
    const RingHandle R = construct_ring(r.doc);
    const auto n = R.size();
    if (!n || *n > 16) continue;
    ++rings;
    for (std::size_t k : {2, 3})
      if (!truncated_idempotents_check(R, k).is_true()) out.fail(r.name + " k=" + std::to_string(k));
  }
  if (out.ok) out.detail << rings << " rings with |R| <= 16, k in {2,3}";
}

// 6
void ultra_exhaustive(Outcome& out) {
  const std::vector<Json> seeds = {{{"kind", "gf"}, {"q", 2}}, {{"kind", "gf"}, {"q", 3}}, zmod_doc(4)};
  std::size_t instances = 0;
  for (std::size_t ground = 1; ground <= 4; ++ground) {
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < ground; ++i) tuples *= seeds.size();
    for (std::size_t code = 0; code < tuples; ++code) {
      std::vector<RingHandle> factors;
      for (std::size_t i = 0, c = code; i < ground; ++i, c /= seeds.size())
        factors.push_back(construct_ring(seeds[c % seeds.size()]));
      for (const SetIdeal& I : SetIdeal::all(ground)) {
        const UltraRing U = ultra_ring(factors, I);
        const TheoremReport r = ultra_preservation_suite(U);
        ++instances;
        if (r.agreement != Agreement::pass) out.fail(r.ring + " with " + I.format());
        if (!U.complement_isomorphic) out.fail(r.ring + " complement " + I.format());
      }
    }
  }
  if (out.ok) out.detail << instances << " instances over |X| <= 4";
}

// 7
void lattice(Outcome& out) {
  std::size_t checked = 0;
  for (const Json& j : parsed_lines(default_corpus())) {
    if (!j.contains("theorem") || j.at("theorem") != "check:lattice") continue;
    ++checked;
    if (j.at("verdict") != "pass") out.fail(j.at("ring").get<std::string>());
  }
  for (const std::string& name : catalog_names()) {
    const Classification c = classify(construct_ring(catalog_get(name).doc));
    if (!c.violations.empty()) out.fail(name + ": " + c.violations[0]);
    ++checked;
  }
  std::size_t expected = catalog_names().size();
  for (const CorpusRing& r : corpus_rings(CorpusConfig{})) expected += r.ultra_only ? 0 : 1;
  out.require(checked == expected, std::to_string(checked) + " of " + std::to_string(expected) + " rings checked");
  if (out.ok) out.detail << checked << " classifications without violations";
}

// 8
void negative_cases(Outcome& out) {
  const Classification z4 = classify(construct_ring(catalog_get("zmod4").doc));
  out.require(z4.verdict("pf").is_false(), "Z/4 pf");
  const Classification m = classify(construct_ring(catalog_get("z_x_x2_minus_2x").doc));
  out.require(m.verdict("mp").is_false(), "Z[x]/(x^2-2x) mp");
  const Classification d = classify(construct_ring(catalog_get("deligne").doc));
  out.require(d.verdict("quasi_pf").is_false() && d.verdict("mp").is_true(), "deligne quasi_pf/mp");
  if (out.ok) out.detail << "pf=F on Z/4, mp=F on Z[x]/(x^2-2x), quasi_pf=F with mp=T on deligne";
}

// 9
void determinism(Outcome& out) {
  const CorpusSummary again = run_corpus(CorpusConfig{}, 1);
  const CorpusSummary& first = default_corpus();
  out.require(again.lines == first.lines, "corpus lines differ between runs");
  const Subject d = construct_subject(catalog_get("deligne").doc);
  std::vector<std::string> a, b;
  for (const TheoremReport& r : verify_all(d)) a.push_back(machine_line(to_json(r)));
  for (const TheoremReport& r : verify_all(construct_subject(catalog_get("deligne").doc)))
    b.push_back(machine_line(to_json(r)));
  out.require(a == b, "deligne reports differ between constructions");
  if (out.ok) out.detail << first.lines.size() << " machine lines identical across runs and thread counts";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"1 catalog exactness", catalog_exactness},
      {"2 default corpus", default_corpus_clean},
      {"3 finite mirrors", mirror_agreement},
      {"4 polynomial annihilators", theorem_vi_window},
      {"5 truncated idempotents", truncations},
      {"6 ultra suite", ultra_exhaustive},
      {"7 implication lattice", lattice},
      {"8 negative cases", negative_cases},
      {"9 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome out;
    try {
      run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s  criterion %s: %s\n", out.ok ? "PASS" : "FAIL", name.c_str(), out.detail.str().c_str());
    std::fflush(stdout);
    failed += out.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
