#include "ringlab/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "ringlab/catalog.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/finite_ops.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/poly.hpp"
#include "ringlab/spectrum.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab {

namespace {

constexpr std::size_t kIdealCap = 512;

Json seed_doc(const std::string& seed) {
  if (seed.size() > 1 && seed[0] == 'F') return {{"kind", "gf"}, {"q", std::stoul(seed.substr(1))}};
  if (seed.rfind("Z/", 0) == 0) return {{"kind", "zmod"}, {"n", std::stoul(seed.substr(2))}};
  throw SchemaError("unknown corpus seed " + seed);
}

bool is_prime_number(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void add(std::vector<CorpusRing>& out, std::string name, Json doc, std::optional<std::string> catalog = {},
         bool ultra_only = false) {
  doc["name"] = name;
  out.push_back({std::move(name), std::move(doc), std::move(catalog), ultra_only});
}

void add_products(std::vector<CorpusRing>& out, const CorpusConfig& cfg) {
  const std::size_t s = cfg.product_seeds.size();
  std::vector<std::size_t> pick;
  // Non-decreasing index tuples enumerate multisets of seeds.
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() >= 2) {
      Json factors = Json::array();
      std::string name;
      for (std::size_t i : pick) {
        factors.push_back(seed_doc(cfg.product_seeds[i]));
        name += (name.empty() ? "" : " x ") + cfg.product_seeds[i];
      }
      add(out, name, {{"kind", "product"}, {"factors", factors}});
    }
    if (pick.size() == cfg.max_factors) return;
    for (std::size_t i = from; i < s; ++i) {
      pick.push_back(i);
      self(self, i);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

std::string poly_name(std::size_t p, const std::vector<std::size_t>& c) {
  std::string poly = "x^" + std::to_string(c.size());
  for (std::size_t i = c.size(); i-- > 0;)
    if (c[i] != 0) poly += " + " + std::to_string(c[i]) + (i == 0 ? "" : i == 1 ? "*x" : "*x^" + std::to_string(i));
  return "Z/" + std::to_string(p) + "[x]/(" + poly + ")";
}

void add_polynomials(std::vector<CorpusRing>& out, const CorpusConfig& cfg) {
  const std::size_t cap = cfg.max_poly_size;
  for (std::size_t p = 2; p * p <= cap; ++p) {
    if (!is_prime_number(p)) continue;
    for (std::size_t k = 2, size = p * p; size <= cap; ++k, size *= p) {
      std::vector<std::size_t> c(k, 0);
      for (std::size_t code = 0; code < size; ++code) {
        for (std::size_t i = 0, x = code; i < k; ++i, x /= p) c[i] = x % p;
        Json coeffs = Json::array();
        for (std::size_t ci : c) coeffs.push_back(std::to_string(ci));
        add(out, poly_name(p, c), {{"kind", "poly_quotient"}, {"base", seed_doc("Z/" + std::to_string(p))}, {"coeffs", coeffs}});
      }
    }
  }
  // Truncations over non-prime Z/n; prime ones are x^k quotients above.
  for (std::size_t n = 4; n * n <= cap; ++n) {
    if (is_prime_number(n)) continue;
    for (std::size_t k = 2, size = n * n; size <= cap; ++k, size *= n)
      add(out, "Z/" + std::to_string(n) + "[x]/(x^" + std::to_string(k) + ")",
          {{"kind", "truncation"}, {"base", seed_doc("Z/" + std::to_string(n))}, {"k", k}});
  }
}

void add_ultra(std::vector<CorpusRing>& out, const CorpusConfig& cfg) {
  const std::size_t s = cfg.ultra_seeds.size();
  for (std::size_t n = 1; n <= cfg.ultra_ground; ++n) {
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < n; ++i) tuples *= s;
    for (std::size_t code = 0; code < tuples; ++code) {
      Json factors = Json::array();
      std::string names;
      for (std::size_t i = 0, x = code; i < n; ++i, x /= s) {
        factors.push_back(seed_doc(cfg.ultra_seeds[x % s]));
        names += (i ? " x " : "") + cfg.ultra_seeds[x % s];
      }
      for (Subset top = 0; top < (Subset{1} << n); ++top) {
        Json members = Json::array();
        for (std::size_t i = 0; i < n; ++i)
          if (top >> i & 1u) members.push_back(i + 1);
        add(out, "ultra(" + names + "; P(" + format_subset(top) + "))",
            {{"kind", "ultra"}, {"factors", factors}, {"ideal", Json::array({members})}}, {}, true);
      }
    }
  }
}

Clause check_clause(std::string label, std::string route, bool ok, std::vector<std::string> elements = {},
                    std::string note = {}) {
  Clause c{std::move(label), Verdict::of(ok), Strategy::definitional, std::move(route), std::nullopt};
  if (!ok) c.witness = Witness{WitnessKind::refuting_element, std::move(elements), std::move(note)};
  return c;
}

TheoremReport check_report(const std::string& id, const std::string& ring, std::vector<Clause> clauses) {
  TheoremReport r;
  r.theorem_id = "check:" + id;
  r.ring = ring;
  r.kind = TheoremKind::suite;
  r.clauses = std::move(clauses);
  finalize(r);
  return r;
}

// Element flags against their defining scans.
Clause element_predicates_clause(const RingHandle& R) {
  const FiniteRing& F = R.table();
  for (Idx f = 0; f < F.size(); ++f) {
    bool unit = false, zd = false, nil = false;
    for (Idx g = 0; g < F.size(); ++g) {
      unit |= F.mul(f, g) == F.one();
      zd |= g != F.zero() && F.mul(f, g) == F.zero();
    }
    Idx p = f;
    for (std::size_t k = 0; k <= F.size() && !nil; ++k, p = F.mul(p, f)) nil = p == F.zero();
    const ElementPredicates e = element_predicates(R, R.from_index(f));
    if (e.is_unit != unit || e.is_zero_divisor != zd || e.is_nilpotent != nil ||
        e.is_idempotent != (F.mul(f, f) == f))
      return check_clause("element flags match their definitions", "element-scan", false, {F.label(f)},
                          "element flags disagree with the defining scan");
  }
  return check_clause("element flags match their definitions", "element-scan", true);
}

Clause annihilator_monotone_clause(const FiniteRing& F) {
  std::vector<IdxSet> ann(F.size());
  for (Idx f = 0; f < F.size(); ++f) ann[f] = fin::annihilator(F, f);
  for (Idx f = 0; f < F.size(); ++f)
    for (Idx g = 0; g < F.size(); ++g)
      if (!fin::subset(ann[f], ann[F.mul(f, g)]))
        return check_clause("Ann(f) lies in Ann(fg)", "annihilator-pairs", false, {F.label(f), F.label(g)},
                            "Ann(f) is not contained in Ann(fg)");
  return check_clause("Ann(f) lies in Ann(fg)", "annihilator-pairs", true);
}

Clause stabilization_clause(const RingHandle& R) {
  const FiniteRing& F = R.table();
  for (Idx f = 0; f < F.size(); ++f) {
    const Stabilized st = annihilator_power_stabilized(R, R.from_index(f));
    const Idx fn = F.pow(f, st.n);
    const IdxSet a = fin::annihilator(F, fn);
    if (a != st.ideal.members() || a != fin::annihilator(F, F.mul(fn, f)) ||
        a != fin::annihilator(F, F.mul(F.mul(fn, f), f)))
      return check_clause("Ann(f^k) is constant from the stabilization index on", "power-annihilators", false,
                          {F.label(f)}, "annihilators of powers change after the reported index");
  }
  return check_clause("Ann(f^k) is constant from the stabilization index on", "power-annihilators", true);
}

Clause minimal_primes_meet_clause(const RingHandle& R) {
  const auto mins = minimal_primes(R);
  Ideal meet = whole_ideal(R);
  for (const PrimeIdeal& p : mins) meet = ideal_algebra(IdealOp::intersect, meet, p.ideal);
  const Ideal N = nilradical(R);
  const bool ok = !mins.empty() ? meet == N : N.is_whole();
  return check_clause("minimal primes meet in the nilradical", "prime-intersection", ok, {},
                      ok ? "" : "the intersection is " + meet.format() + " but N = " + N.format());
}

std::vector<Clause> ideal_clauses(const RingHandle& R) {
  const auto all = fin::all_ideals(R.table(), kIdealCap);
  if (!all) {
    Clause c{"pure ideals are idempotent", Verdict::unknown("more than 512 ideals"), Strategy::unknown,
             "ideal-enumeration", std::nullopt};
    return {c};
  }
  const FiniteRing& F = R.table();
  for (const IdxSet& I : *all) {
    const Ideal J(R, I);
    const PurityClass pc = purity_class(J);
    if (pc.pure.is_true() && fin::product(F, I, I) != I)
      return {check_clause("pure ideals are idempotent", "ideal-enumeration", false, {J.format()},
                           "a pure ideal with I*I != I")};
  }
  return {check_clause("pure ideals are idempotent", "ideal-enumeration", true)};
}

std::vector<Clause> catalog_clauses(const std::string& name) {
  std::vector<Clause> out;
  for (const CatalogMismatch& m : check_entry(catalog_get(name)))
    out.push_back(check_clause("catalog expectation " + m.what, "catalog", false, {},
                               "expected " + m.expected + ", computed " + m.actual));
  if (out.empty()) out.push_back(check_clause("catalog expectations", "catalog", true));
  return out;
}

void record(RingOutcome& o, const TheoremReport& r) {
  o.lines.push_back(machine_line(to_json(r)));
  switch (r.agreement) {
    case Agreement::pass: ++o.pass; break;
    case Agreement::fail:
      ++o.fail;
      o.failures.push_back(r.theorem_id + " on " + r.ring);
      break;
    case Agreement::indeterminate:
      ++o.indeterminate;
      o.indeterminates.push_back(r.theorem_id + " on " + r.ring);
      break;
  }
}

void run_checks(RingOutcome& o, const CorpusRing& cr, const RingHandle& ring, const Classification& cls,
                const CorpusConfig& cfg) {
  std::vector<Clause> lattice;
  for (const std::string& v : cls.violations)
    lattice.push_back(check_clause("implication " + v, "implication-lattice", false, {}, v + " fails"));
  if (lattice.empty()) lattice.push_back(check_clause("decided implications hold", "implication-lattice", true));
  record(o, check_report("lattice", cr.name, std::move(lattice)));
  record(o, check_report("minimal-primes", cr.name, {minimal_primes_meet_clause(ring)}));

  const bool finite = ring.is_finite();
  if (finite) {
    const RingHandle R = ring.is_algebra() ? routes::as_table(ring) : ring;
    const std::size_t n = R.table().size();
    if (n <= cfg.pairwise_limit) {
      record(o, check_report("elements", cr.name, {element_predicates_clause(R), stabilization_clause(R)}));
      record(o, check_report("annihilators", cr.name, {annihilator_monotone_clause(R.table())}));
    }
    record(o, check_report("pure-ideals", cr.name, ideal_clauses(R)));
    if (n <= cfg.truncation_limit) {
      std::vector<Clause> cs;
      for (std::size_t k : {2, 3}) {
        const Verdict v = truncated_idempotents_check(R, k);
        cs.push_back(check_clause("R[x]/(x^" + std::to_string(k) + ") has only constant idempotents",
                                  "truncation-k" + std::to_string(k), v.is_true(), {},
                                  "idempotent count or constancy differs"));
      }
      record(o, check_report("truncation", cr.name, std::move(cs)));
    }
  }
  if (cr.catalog) record(o, check_report("catalog", cr.name, catalog_clauses(*cr.catalog)));
}

}  // namespace

std::vector<CorpusRing> corpus_rings(const CorpusConfig& cfg) {
  std::vector<CorpusRing> out;
  for (std::size_t n = 1; n <= cfg.max_zmod; ++n)
    add(out, "Z/" + std::to_string(n), {{"kind", "zmod"}, {"n", n}}, "zmod" + std::to_string(n));
  if (cfg.max_factors >= 2) add_products(out, cfg);
  if (cfg.max_poly_size > 0) add_polynomials(out, cfg);
  if (cfg.catalog)
    for (const std::string& name : catalog_names())
      if (name.rfind("zmod", 0) != 0) add(out, "catalog:" + name, catalog_get(name).doc, name);
  if (cfg.ultra_ground > 0) add_ultra(out, cfg);

  std::stable_sort(out.begin(), out.end(), [](const CorpusRing& a, const CorpusRing& b) { return a.name < b.name; });
  out.erase(std::unique(out.begin(), out.end(), [](const CorpusRing& a, const CorpusRing& b) { return a.name == b.name; }),
            out.end());
  return out;
}

RingOutcome run_ring(const CorpusRing& cr, const CorpusConfig& cfg) {
  RingOutcome o;
  o.ring = cr.name;
  try {
    const Subject s = construct_subject(cr.doc);
    VerifyOptions opts;
    opts.sampled_clauses = cfg.sampled_clauses;
    if (cr.ultra_only) {
      TheoremReport r = verify_theorem("ultra", s, opts);
      r.ring = cr.name;
      record(o, r);
      return o;
    }
    const Classification cls = classify(s.ring);
    for (const std::string& name : predicate_names())
      o.lines.push_back(machine_line(predicate_json(cr.name, name, cls.at(name))));
    for (const TheoremReport& r : verify_all(s, opts)) record(o, r);
    run_checks(o, cr, s.ring, cls, cfg);
  } catch (const std::exception& e) {
    TheoremReport r;
    r.theorem_id = "error";
    r.ring = cr.name;
    r.kind = TheoremKind::suite;
    r.clauses.push_back(check_clause("the ring runs to completion", "run", false, {}, e.what()));
    finalize(r);
    record(o, r);
  }
  return o;
}

CorpusSummary run_corpus(const CorpusConfig& cfg, std::size_t jobs) { return run_corpus(corpus_rings(cfg), cfg, jobs); }

CorpusSummary run_corpus(const std::vector<CorpusRing>& rings, const CorpusConfig& cfg, std::size_t jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(rings.size(), 1));
  std::vector<RingOutcome> outcomes(rings.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rings.size();) outcomes[i] = run_ring(rings[i], cfg);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::vector<std::size_t> order(rings.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rings[a].name < rings[b].name; });

  CorpusSummary sum;
  sum.rings = rings.size();
  for (std::size_t i : order) {
    RingOutcome& o = outcomes[i];
    sum.pass += o.pass;
    sum.fail += o.fail;
    sum.indeterminate += o.indeterminate;
    for (std::string& l : o.lines) sum.lines.push_back(std::move(l));
    for (std::string& f : o.failures) sum.failures.push_back(std::move(f));
    for (std::string& f : o.indeterminates) sum.indeterminates.push_back(std::move(f));
  }
  return sum;
}

}  // namespace ringlab
