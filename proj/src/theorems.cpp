#include "ringlab/theorems.hpp"

#include <algorithm>
#include <set>

#include "ringlab/classify.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/finite_ops.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/spectrum.hpp"
#include "ringlab/zalgebra_ops.hpp"

namespace ringlab {

namespace {

constexpr std::size_t kIdealCap = 512;
constexpr int kPatternCoeff = 2;

using V = ClauseValue;

V from(const PredicateResult& r) { return {r.verdict, r.witness, r.strategy}; }
V def(const RingHandle& R, const char* name) { return from(routes::definitional(R, name)); }
V yes() { return {Verdict::yes(), std::nullopt, Strategy::definitional}; }
V theorem_backed(Verdict v) { return {std::move(v), std::nullopt, Strategy::theorem_backed}; }

V refuted(std::vector<std::string> elements, std::string note, WitnessKind kind = WitnessKind::refuting_element) {
  return {Verdict::no(), Witness{kind, std::move(elements), std::move(note)}, Strategy::definitional};
}

V unknown(std::string why) { return {Verdict::unknown(std::move(why)), std::nullopt, Strategy::unknown}; }

// Kleene conjunction keeping the witness of the first false side.
V both(V a, V b) {
  V out;
  out.verdict = a.verdict && b.verdict;
  if (a.verdict.is_false())
    out.witness = std::move(a.witness);
  else if (b.verdict.is_false())
    out.witness = std::move(b.witness);
  out.strategy = a.strategy == Strategy::theorem_backed || b.strategy == Strategy::theorem_backed
                     ? Strategy::theorem_backed
                     : Strategy::definitional;
  if (!out.verdict.decided()) out.strategy = Strategy::unknown;
  return out;
}

V of_verdict(const Verdict& v, const std::string& note) {
  if (v.is_false()) return {v, Witness{WitnessKind::refuting_element, {}, note}, Strategy::definitional};
  return {v, std::nullopt, v.decided() ? Strategy::definitional : Strategy::unknown};
}

V min_compact(const RingHandle& R) {
  const SpectrumReport rep = spectrum_report(R);
  return of_verdict(rep.min_compact, rep.min_compact_reason);
}

// ---------------------------------------------------------------- finite

struct Local {
  Ideal m;
  QuotientMap map;
};

std::vector<Local> localizations(const std::vector<Ideal>& primes) {
  std::vector<Local> out;
  for (const Ideal& p : primes) out.push_back({p, QuotientMap(ker_pi(p))});
  return out;
}

// Every idempotent of R_m is the image of an idempotent of R.
bool idempotents_lift(const RingHandle& R, const Local& L) {
  std::set<Idx> images;
  for (const Element& e : idempotents(R)) images.insert(L.map.project(R, e).idx);
  for (Idx e : L.map.ring().table().idempotents())
    if (!images.count(e)) return false;
  return true;
}

V localizations_are(const RingHandle& R, const std::vector<Ideal>& primes, const char* name, bool check_lift) {
  for (const Local& L : localizations(primes)) {
    if (!routes::definitional(L.map.ring(), name).verdict.is_true())
      return refuted({L.m.format()}, "the localization at " + L.m.format() + " is not " + name,
                     WitnessKind::separator);
    if (check_lift && !idempotents_lift(R, L))
      return refuted({L.m.format()}, "an idempotent of the localization at " + L.m.format() + " does not lift",
                     WitnessKind::separator);
  }
  return yes();
}

std::size_t power_bound(const FiniteRing& F) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < F.size()) ++k;
  return k + 2;
}

// For every f some n and a non-zero-divisor g with f^n g = f^(2n).
V nzd_search(const RingHandle& R) {
  const FiniteRing& F = R.table();
  const std::size_t bound = power_bound(F);
  for (Idx f = 0; f < F.size(); ++f) {
    bool found = false;
    Idx fn = f;
    for (std::size_t n = 1; n <= bound && !found; ++n, fn = F.mul(fn, f)) {
      const Idx f2n = F.mul(fn, fn);
      for (Idx g = 0; g < F.size() && !found; ++g) found = !F.is_zero_divisor(g) && F.mul(fn, g) == f2n;
    }
    if (!found) return refuted({F.label(f)}, "no n and non-zero-divisor g with f^n g = f^(2n)");
  }
  return yes();
}

// For every f: Ann(f^n) = Ann(f^(n+1)) for some n and some h in Ann(f^n)
// with Ann(f^n) meeting Ann(h) only in 0.
V stable_annihilator_search(const RingHandle& R) {
  const FiniteRing& F = R.table();
  for (Idx f = 0; f < F.size(); ++f) {
    Idx fn = f;
    IdxSet cur = fin::annihilator(F, fn);
    for (;;) {
      const Idx next_power = F.mul(fn, f);
      IdxSet next = fin::annihilator(F, next_power);
      if (next == cur) break;
      fn = next_power;
      cur = std::move(next);
    }
    bool found = false;
    for (Idx h : cur) {
      const IdxSet meet = fin::intersect(cur, fin::annihilator(F, h));
      if (meet.size() == 1) {
        found = true;
        break;
      }
    }
    if (!found) return refuted({F.label(f)}, "no h in the stable Ann(f^n) with Ann(f^n) and Ann(h) meeting in 0");
  }
  return yes();
}

V local_dichotomy(const RingHandle& R) {
  const FiniteRing& F = R.table();
  const auto locs = localizations(maximal_ideals(R));
  const std::size_t bound = power_bound(F);
  for (Idx f = 0; f < F.size(); ++f) {
    bool found = false;
    for (std::size_t n = 1; n <= bound && !found; ++n) {
      found = true;
      for (const Local& L : locs) {
        const FiniteRing& Q = L.map.ring().table();
        const Idx img = L.map.project(R, R.from_index(f)).idx;
        if (Q.is_zero_divisor(img) && Q.pow(img, n) != Q.zero()) {
          found = false;
          break;
        }
      }
    }
    if (!found) return refuted({F.label(f)}, "no n making f a non-zero-divisor or f^n = 0 in every R_m");
  }
  return yes();
}

std::optional<std::vector<Ideal>> every_ideal(const RingHandle& R) {
  const auto all = fin::all_ideals(R.table(), kIdealCap);
  if (!all) return std::nullopt;
  std::vector<Ideal> out;
  for (const IdxSet& I : *all) out.emplace_back(R, I);
  return out;
}

V primes_via_all_ideals_primary(const RingHandle& R) {
  const auto all = every_ideal(R);
  if (!all) return unknown("more than " + std::to_string(kIdealCap) + " ideals");
  std::vector<Ideal> primes;
  for (const Ideal& I : *all)
    if (fin::is_prime(R.table(), I.members())) primes.push_back(I);
  return localizations_are(R, primes, "primary", false);
}

V ker_pi_minimal_pure(const RingHandle& R) {
  for (const PrimeIdeal& p : minimal_primes(R)) {
    const Ideal K = ker_pi(p.ideal);
    const PurityClass pc = purity_class(K);
    if (!pc.pure.is_true())
      return refuted({p.ideal.format()}, "ker_pi" + p.ideal.format() + " = " + K.format() + " is not pure",
                     WitnessKind::separator);
  }
  return yes();
}

V ker_pi_maximal_primary(const RingHandle& R) {
  for (const Ideal& m : maximal_ideals(R)) {
    const Ideal K = ker_pi(m);
    if (!is_primary_ideal(K).is_true())
      return refuted({m.format()}, "ker_pi" + m.format() + " = " + K.format() + " is not primary",
                     WitnessKind::separator);
  }
  return yes();
}

V pure_ideals_regular(const RingHandle& R) {
  const auto all = every_ideal(R);
  if (!all) return unknown("more than " + std::to_string(kIdealCap) + " ideals");
  for (const Ideal& I : *all) {
    const PurityClass pc = purity_class(I);
    if (pc.pure.is_true() && !pc.regular.is_true())
      return refuted({I.format()}, "pure ideal " + I.format() + " is not regular");
  }
  return yes();
}

V pure_quotients(const RingHandle& R, const char* name) {
  if (!routes::definitional(R, name).verdict.is_true()) return yes();
  const auto all = every_ideal(R);
  if (!all) return unknown("more than " + std::to_string(kIdealCap) + " ideals");
  for (const Ideal& I : *all) {
    if (!purity_class(I).pure.is_true()) continue;
    if (!routes::definitional(quotient_ring(R, I), name).verdict.is_true())
      return refuted({I.format()}, std::string("R / ") + I.format() + " is not " + name);
  }
  return yes();
}

V annihilator_products_pure(const RingHandle& R) {
  const FiniteRing& F = R.table();
  std::vector<char> pure(F.size());
  std::map<IdxSet, bool> cache;
  for (Idx x = 0; x < F.size(); ++x) {
    IdxSet a = fin::annihilator(F, x);
    auto it = cache.find(a);
    if (it == cache.end()) it = cache.emplace(a, !fin::pure_refuter(F, a)).first;
    pure[x] = it->second;
  }
  for (Idx f = 0; f < F.size(); ++f) {
    if (!pure[f]) continue;
    for (Idx g = f; g < F.size(); ++g)
      if (pure[g] && !pure[F.mul(f, g)])
        return refuted({F.label(f), F.label(g)}, "Ann(f) and Ann(g) are pure but Ann(fg) is not",
                       WitnessKind::refuting_pair);
  }
  return yes();
}

V principal_free(const RingHandle& R) {
  const FiniteRing& F = R.table();
  for (Idx f = 0; f < F.size(); ++f) {
    if (f == F.zero()) continue;
    if (fin::principal(F, f).size() != F.size())
      return refuted({F.label(f)}, "R" + F.label(f) + " is smaller than R, so it is not free");
  }
  return yes();
}

// ---------------------------------------------------------------- algebra

// Stable annihilators depend only on which associated primes contain f;
// search h in each one.
V ass_pattern_search(const RingHandle& R) {
  const ZAlgebra& A = R.algebra();
  const auto& ass = zal::associated_primes(A);
  const std::size_t k = ass.size();
  if (k > 12) return unknown("more than 12 associated primes");
  bool undecided = false;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < k && closed; ++i)
      for (std::size_t j = 0; j < k && closed; ++j)
        if ((mask >> i & 1) && !(mask >> j & 1) && ass[i].subset_of(ass[j])) closed = false;
    if (!closed) continue;
    Lattice J = A.whole();
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) J = J.intersect(ass[i]);
    auto avoids = [&](const IntVec& f) {
      for (std::size_t j = 0; j < k; ++j)
        if (!(mask >> j & 1) && ass[j].contains(f)) return false;
      return true;
    };
    std::optional<IntVec> f;
    const IntMat& rows = J.basis();
    if (rows.empty() && avoids(A.zero())) f = A.zero();
    for (const IntVec& row : rows)
      if (!f && avoids(row)) f = row;
    if (!f) {
      std::vector<int> c(rows.size(), -kPatternCoeff);
      for (bool more = !rows.empty(); more && !f;) {
        IntVec v = zero_vec(A.m());
        for (std::size_t i = 0; i < rows.size(); ++i)
          for (std::size_t j = 0; j < A.m(); ++j) v[j] += c[i] * rows[i][j];
        if (avoids(v)) f = v;
        more = false;
        for (int& ci : c) {
          if (ci < kPatternCoeff) {
            ++ci;
            more = true;
            break;
          }
          ci = -kPatternCoeff;
        }
      }
    }
    if (!f) {
      undecided = true;
      continue;
    }
    const IntVec g = A.canon(*f);
    const Lattice K = zal::saturation(A, A.relations(), g);
    auto meets_trivially = [&](const IntVec& h) { return K.intersect(A.annihilator(h)) == A.relations(); };
    const IntMat gens = zal::generators(A, K);
    bool found = gens.empty();  // K = 0: h = 0 works
    const bool finite_K = A.r() == 0 || std::all_of(gens.begin(), gens.end(), [&](const IntVec& v) {
      return A.in_torsion(v);
    });
    if (finite_K && !found) {
      // K lies in the torsion part: enumerate it.
      for (const IntVec& h : A.torsion_elements())
        if (K.contains(h) && meets_trivially(h)) {
          found = true;
          break;
        }
      if (!found)
        return refuted({A.format(g)}, "no h in Ann(" + A.format(g) + "^n) meeting it only in 0");
      continue;
    }
    std::vector<int> c(gens.size(), -kPatternCoeff);
    for (bool more = !gens.empty(); more && !found;) {
      IntVec h = zero_vec(A.m());
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < A.m(); ++j) h[j] += c[i] * gens[i][j];
      found = meets_trivially(A.canon(h));
      more = false;
      for (int& ci : c) {
        if (ci < kPatternCoeff) {
          ++ci;
          more = true;
          break;
        }
        ci = -kPatternCoeff;
      }
    }
    if (!found) undecided = true;
  }
  if (undecided) return unknown("bounded search for h did not finish an associated-prime pattern");
  return {Verdict::yes(), std::nullopt, Strategy::theorem_backed};
}

// ---------------------------------------------------------------- registry

ClauseDef clause(std::string label, std::string froute, ClauseEval f, std::string aroute = {}, ClauseEval a = {}) {
  return ClauseDef{std::move(label), std::move(froute), std::move(f), std::move(aroute), std::move(a)};
}

ClauseDef sampled_clause(ClauseDef c) {
  c.algebra_sampled = true;
  return c;
}

ClauseEval finite_def(const char* name) {
  return [name](const RingHandle& R) { return def(R, name); };
}

const RingHandle& reduced_ring(const RingHandle& R) { return mod_nil(R).ring(); }

std::vector<TheoremDef> build_registry() {
  std::vector<TheoremDef> reg;
  auto total = [](const RingHandle& R) { return total_ring_report(R); };

  // Shared clause shapes.
  const ClauseDef pp = clause("R is p.p.", "ann-idempotent-scan", finite_def("pp"), "reduced-and-mp",
                               [](const RingHandle& R) { return from(routes::z_pp(R)); });
  const ClauseDef gpp = clause("R is GPP", "chain-idempotent-scan", finite_def("gpp"), "factor-primary",
                                [](const RingHandle& R) { return from(routes::z_gpp(R)); });
  const ClauseDef gpf = clause("R is GPF", "chain-pure-scan", finite_def("gpf"), "associated-prime-patterns",
                                [](const RingHandle& R) { return from(routes::z_gpf(R)); });
  const ClauseDef qpf = clause("R is quasi p.f.", "quasi-pure-scan", finite_def("quasi_pf"), "ker-pi-idempotent",
                                [](const RingHandle& R) { return from(routes::z_quasi_pf(R)); });
  const ClauseDef mp = clause(
      "R is mp", "minimal-prime-sums", [](const RingHandle& R) { return of_verdict(is_mp(R).verdict, "minimal primes with a proper sum"); },
      "minimal-prime-sums", [](const RingHandle& R) { return from(routes::z_mp(R)); });

  reg.push_back({"II",
                 TheoremKind::equivalence,
                 "p.p. rings through the total ring of fractions",
                 {pp,
                  clause(
                      "R is p.f. and T(R) is absolutely flat", "pure-scan+total-ring",
                      [=](const RingHandle& R) {
                        return both(def(R, "pf"), of_verdict(total(R).absolutely_flat, "T(R) is not absolutely flat"));
                      },
                      "idempotent-count+associated-primes",
                      [=](const RingHandle& R) {
                        return both(from(routes::z_pf(R)),
                                    of_verdict(total(R).absolutely_flat, "T(R) is not absolutely flat"));
                      }),
                  clause("T(R) absolutely flat and idempotents lift to each localization", "localization-fields",
                         [](const RingHandle& R) { return localizations_are(R, maximal_ideals(R), "field", true); }),
                  clause("T(R) absolutely flat and idempotents lift along T(R)", "square-divisibility+identity-lift",
                         [=](const RingHandle& R) {
                           return both(of_verdict(total(R).tr_equals_r, "T(R) differs from R"),
                                       def(R, "absolutely_flat"));
                         })}});

  reg.push_back({"III",
                 TheoremKind::equivalence,
                 "GPP rings through the total ring of fractions",
                 {gpp,
                  clause(
                      "R is GPF and T(R) is zero-dimensional", "chain-pure-scan+total-ring",
                      [=](const RingHandle& R) {
                        return both(def(R, "gpf"), of_verdict(total(R).zero_dimensional, "T(R) is not zero-dimensional"));
                      },
                      "associated-prime-patterns+embedded-primes",
                      [=](const RingHandle& R) {
                        return both(from(routes::z_gpf(R)),
                                    of_verdict(total(R).zero_dimensional, "T(R) is not zero-dimensional"));
                      }),
                  clause("T(R) zero-dimensional and idempotents lift to each localization", "localization-zero-dim",
                         [](const RingHandle& R) {
                           return localizations_are(R, maximal_ideals(R), "zero_dimensional", true);
                         }),
                  clause("T(R) zero-dimensional and idempotents lift along T(R)", "nzd-search+identity-lift",
                         [=](const RingHandle& R) {
                           return both(of_verdict(total(R).tr_equals_r, "T(R) differs from R"), nzd_search(R));
                         })}});

  reg.push_back({"IV",
                 TheoremKind::equivalence,
                 "GPF rings by a local dichotomy",
                 {clause("R is GPF", "chain-pure-scan", finite_def("gpf")),
                  clause("some f^n is zero or f is a non-zero-divisor in every R_m", "local-dichotomy", local_dichotomy)}});

  reg.push_back(
      {"QPF",
       TheoremKind::equivalence,
       "characterizations of quasi p.f. rings",
       {sampled_clause(clause("R is quasi p.f.", "quasi-pure-scan", finite_def("quasi_pf"), "sampled-quasi-pure",
                              [](const RingHandle& R) { return from(routes::sampled(R, "quasi_pf", 4)); })),
        clause("R_p is primary for every prime p", "all-primes-localization", primes_via_all_ideals_primary),
        clause(
            "R_m is primary for every maximal m", "maximal-localization",
            [](const RingHandle& R) { return localizations_are(R, maximal_ideals(R), "primary", false); },
            "associated-primes-comaximal", [](const RingHandle& R) { return from(routes::z_localizations_primary(R)); }),
        clause("ker_pi(p) is pure for every minimal p", "ker-pi-minimal-pure", ker_pi_minimal_pure, "ker-pi-idempotent",
               [](const RingHandle& R) { return from(routes::z_quasi_pf(R)); }),
        clause("ker_pi(m) is primary for every maximal m", "ker-pi-maximal-primary", ker_pi_maximal_primary,
               "ker-pi-candidate-maximals",
               [](const RingHandle& R) { return from(routes::z_ker_pi_maximal_primary(R)); })}});

  reg.push_back(
      {"IX",
       TheoremKind::equivalence,
       "GPP rings through the minimal spectrum",
       {gpp,
        clause(
            "R is GPF and Min(R) is compact", "chain-pure-scan+min-compact",
            [](const RingHandle& R) { return both(def(R, "gpf"), min_compact(R)); }, "associated-prime-patterns+min-compact",
            [](const RingHandle& R) { return both(from(routes::z_gpf(R)), min_compact(R)); }),
        clause(
            "R is quasi p.f. and Min(R) is compact", "quasi-pure-scan+min-compact",
            [](const RingHandle& R) { return both(def(R, "quasi_pf"), min_compact(R)); },
            "ker-pi-idempotent+min-compact",
            [](const RingHandle& R) { return both(from(routes::z_quasi_pf(R)), min_compact(R)); }),
        clause(
            "R/N is p.p. and every R_m is primary", "mod-nil-pp+maximal-localization",
            [](const RingHandle& R) {
              return both(def(reduced_ring(R), "pp"), localizations_are(R, maximal_ideals(R), "primary", false));
            },
            "mod-nil-pp+ker-pi-candidate-maximals",
            [](const RingHandle& R) {
              return both(from(predicate(reduced_ring(R), "pp")), from(routes::z_ker_pi_maximal_primary(R)));
            })}});

  reg.push_back({"XI",
                 TheoremKind::equivalence,
                 "p.p. rings as p.f. rings with compact minimal spectrum",
                 {pp, clause(
                          "R is p.f. and Min(R) is compact", "pure-scan+min-compact",
                          [](const RingHandle& R) { return both(def(R, "pf"), min_compact(R)); },
                          "idempotent-count+min-compact",
                          [](const RingHandle& R) { return both(from(routes::z_pf(R)), min_compact(R)); })}});

  reg.push_back({"CorI",
                 TheoremKind::equivalence,
                 "mp rings through R/N",
                 {mp, clause(
                          "R/N is p.f.", "mod-nil-pure-scan", [](const RingHandle& R) { return def(reduced_ring(R), "pf"); },
                          "mod-nil-idempotent-count",
                          [](const RingHandle& R) { return from(predicate(reduced_ring(R), "pf")); })}});

  reg.push_back({"CorIII",
                 TheoremKind::equivalence,
                 "p.p. reductions",
                 {clause(
                      "R/N is p.p.", "mod-nil-ann-idempotent-scan",
                      [](const RingHandle& R) { return def(reduced_ring(R), "pp"); }, "mod-nil-reduced-and-mp",
                      [](const RingHandle& R) { return from(predicate(reduced_ring(R), "pp")); }),
                  clause(
                      "R is mp and Min(R) is compact", "minimal-prime-sums+min-compact",
                      [](const RingHandle& R) {
                        return both(of_verdict(is_mp(R).verdict, "minimal primes with a proper sum"), min_compact(R));
                      },
                      "minimal-prime-sums+min-compact",
                      [](const RingHandle& R) { return both(from(routes::z_mp(R)), min_compact(R)); })}});

  reg.push_back({"Remark",
                 TheoremKind::implication,
                 "GPP rings have p.p. reductions",
                 {gpp, clause(
                           "R/N is p.p.", "mod-nil-ann-idempotent-scan",
                           [](const RingHandle& R) { return def(reduced_ring(R), "pp"); }, "mod-nil-reduced-and-mp",
                           [](const RingHandle& R) { return from(predicate(reduced_ring(R), "pp")); })}});

  reg.push_back({"92629456", TheoremKind::implication, "GPF => quasi p.f. => mp", {gpf, qpf, mp}});

  reg.push_back(
      {"PropIV",
       TheoremKind::implication,
       "strongly purified rings are purified with regular pure ideals",
       {clause("R is strongly purified", "chain-regular-scan", finite_def("strongly_purified"), "factor-primary",
               [](const RingHandle& R) { return from(routes::z_gpp(R)); }),
        clause(
            "R is purified and pure ideals are regular", "idempotent-separation+all-ideals",
            [](const RingHandle& R) { return both(def(R, "purified"), pure_ideals_regular(R)); },
            "idempotent-separation+finitely-generated",
            [](const RingHandle& R) { return both(from(routes::z_purified(R)), theorem_backed(Verdict::yes())); })}});

  reg.push_back(
      {"LemmaI",
       TheoremKind::equivalence,
       "zero-dimensional total rings of fractions",
       {clause(
            "T(R) is zero-dimensional", "total-ring-scan",
            [=](const RingHandle& R) { return of_verdict(total(R).zero_dimensional, "T(R) is not zero-dimensional"); },
            "embedded-primes",
            [=](const RingHandle& R) {
              return theorem_backed(total(R).zero_dimensional);
            }),
        clause("stable Ann(f^n) has an h meeting it only in 0", "stable-annihilator-search", stable_annihilator_search,
               "associated-prime-pattern-search", ass_pattern_search),
        clause("f^n g = f^(2n) for a non-zero-divisor g", "nzd-search", nzd_search)}});

  reg.push_back(
      {"PropII",
       TheoremKind::equivalence,
       "domains among nonzero rings",
       {clause("R is a domain", "zero-divisor-scan", finite_def("domain"), "quotient-domain-test",
               [](const RingHandle& R) { return from(routes::z_domain(R)); }),
        clause("every principal ideal is free", "principal-free", principal_free),
        clause(
            "R is p.p. with trivial idempotents", "ann-idempotent-scan+idempotent-count",
            [](const RingHandle& R) {
              return both(def(R, "pp"), of_verdict(Verdict::of(R.table().idempotents().size() == 2),
                                                   "nontrivial idempotents"));
            },
            "reduced-and-mp+idempotent-count",
            [](const RingHandle& R) {
              return both(from(routes::z_pp(R)), of_verdict(Verdict::of(R.algebra().idempotents().size() == 2),
                                                            "nontrivial idempotents"));
            })},
       false,
       true});

  reg.push_back({"7856",
                 TheoremKind::suite,
                 "products of elements with pure annihilators",
                 {clause("Ann(fg) is pure when Ann(f) and Ann(g) are", "annihilator-product-purity",
                         annihilator_products_pure)}});
  reg.push_back({"PropIII",
                 TheoremKind::suite,
                 "GPP passes to quotients by pure ideals",
                 {clause("R/I is GPP for pure I when R is", "pure-quotients-gpp",
                         [](const RingHandle& R) { return pure_quotients(R, "gpp"); })}});
  reg.push_back({"PropV",
                 TheoremKind::suite,
                 "GPF passes to quotients by pure ideals",
                 {clause("R/I is GPF for pure I when R is", "pure-quotients-gpf",
                         [](const RingHandle& R) { return pure_quotients(R, "gpf"); })}});
  reg.push_back({"CorVII",
                 TheoremKind::implication,
                 "localizations of GPF rings are primary",
                 {clause("R is GPF", "chain-pure-scan", finite_def("gpf")),
                  clause("R_p is primary for every prime p", "prime-localization", [](const RingHandle& R) {
                    return localizations_are(R, prime_ideals(R), "primary", false);
                  })}});
  reg.push_back({"vnice", TheoremKind::equivalence, "GPP, GPF and quasi p.f. agree", {gpp, gpf, qpf}});
  reg.push_back({"local-qpf",
                 TheoremKind::implication,
                 "local quasi p.f. rings are primary",
                 {clause("R is local and quasi p.f.", "local+quasi-pure-scan",
                         [](const RingHandle& R) { return both(def(R, "local"), def(R, "quasi_pf")); }),
                  clause("R is primary", "primary-scan", finite_def("primary"))}});
  reg.push_back({"local-gpf",
                 TheoremKind::implication,
                 "local GPF rings are primary",
                 {clause("R is local and GPF", "local+chain-pure-scan",
                         [](const RingHandle& R) { return both(def(R, "local"), def(R, "gpf")); }),
                  clause("R is primary", "primary-scan", finite_def("primary"))}});
  reg.push_back({"ultra", TheoremKind::suite, "ultra-ring preservation", {}, true});

  for (const TheoremDef& t : reg) {
    std::set<std::string> fin, alg;
    for (const ClauseDef& c : t.clauses) {
      if (c.finite && !fin.insert(c.finite_route).second)
        throw VerificationError(t.id + " reuses the route " + c.finite_route);
      if (c.algebra && !alg.insert(c.algebra_route).second)
        throw VerificationError(t.id + " reuses the route " + c.algebra_route);
    }
  }
  return reg;
}

std::string canonical_id(const std::string& id) {
  static const std::map<std::string, std::string> aliases = {
      {"quasi-pf", "QPF"}, {"qpf", "QPF"},       {"cor-i", "CorI"},   {"cor-iii", "CorIII"},
      {"prop-iv", "PropIV"}, {"lemma-i", "LemmaI"}, {"remark", "Remark"}, {"92629456-implications", "92629456"}};
  auto it = aliases.find(id);
  return it == aliases.end() ? id : it->second;
}

struct Plan {
  std::vector<std::pair<const ClauseDef*, bool>> clauses;  // (clause, use algebra evaluator)
  RingHandle ring;                                          // ring handed to finite evaluators
};

Plan plan(const TheoremDef& t, const Subject& s, const VerifyOptions& opts) {
  Plan p;
  const RingHandle& R = s.ring;
  p.ring = R;
  if (R.is_algebra() && R.algebra().is_finite()) p.ring = routes::as_table(R);
  for (const ClauseDef& c : t.clauses) {
    const bool infinite = R.is_algebra() && !R.algebra().is_finite();
    if (R.is_algebra() && c.algebra && (!c.algebra_sampled || !infinite || opts.sampled_clauses))
      p.clauses.emplace_back(&c, true);
    else if (c.finite && R.is_finite())
      p.clauses.emplace_back(&c, false);
  }
  return p;
}

std::size_t minimum_clauses(TheoremKind k) { return k == TheoremKind::suite ? 1 : 2; }

}  // namespace

const std::vector<TheoremDef>& theorem_registry() {
  static const std::vector<TheoremDef> reg = build_registry();
  return reg;
}

std::vector<std::string> theorem_ids() {
  std::vector<std::string> out;
  for (const TheoremDef& t : theorem_registry()) out.push_back(t.id);
  return out;
}

const TheoremDef& theorem_def(const std::string& id) {
  const std::string key = canonical_id(id);
  for (const TheoremDef& t : theorem_registry())
    if (t.id == key) return t;
  throw UnknownName("no theorem named " + id);
}

bool theorem_applies(const std::string& id, const Subject& s, const VerifyOptions& opts) {
  const TheoremDef& t = theorem_def(id);
  if (t.needs_ultra) return s.ultra != nullptr;
  if (t.needs_nonzero && s.ring.size() == std::optional<std::size_t>(1)) return false;
  return plan(t, s, opts).clauses.size() >= minimum_clauses(t.kind);
}

TheoremReport verify_theorem(const std::string& id, const Subject& s, const VerifyOptions& opts) {
  const TheoremDef& t = theorem_def(id);
  if (!theorem_applies(id, s, opts))
    throw NotApplicable(t.id + " does not apply to " + s.ring.name() + " on the " + to_string(s.ring.backend()) +
                        " backend");
  if (t.needs_ultra) {
    TheoremReport rep = ultra_preservation_suite(*s.ultra);
    rep.ring = s.ring.name();
    return rep;
  }
  TheoremReport rep;
  rep.theorem_id = t.id;
  rep.ring = s.ring.name();
  rep.kind = t.kind;
  const Plan p = plan(t, s, opts);
  for (const auto& [c, algebra] : p.clauses) {
    const ClauseValue v = algebra ? c->algebra(s.ring) : c->finite(p.ring);
    rep.clauses.push_back(Clause{c->label, v.verdict, v.strategy, algebra ? c->algebra_route : c->finite_route, v.witness});
  }
  for (const ClauseDef& c : t.clauses)
    if (std::none_of(p.clauses.begin(), p.clauses.end(), [&](const auto& q) { return q.first == &c; }))
      rep.notes.push_back("clause \"" + c.label + "\" has no route on this backend");
  finalize(rep);
  return rep;
}

std::vector<TheoremReport> verify_all(const Subject& s, const VerifyOptions& opts) {
  std::vector<TheoremReport> out;
  for (const TheoremDef& t : theorem_registry())
    if (theorem_applies(t.id, s, opts)) out.push_back(verify_theorem(t.id, s, opts));
  return out;
}

}  // namespace ringlab
