#include "ringlab/classify.hpp"

#include <algorithm>
#include <map>

#include "ringlab/errors.hpp"
#include "ringlab/finite_ops.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/mutation.hpp"
#include "ringlab/zalgebra_ops.hpp"

namespace ringlab {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::definitional: return "definitional";
    case Strategy::theorem_backed: return "theorem-backed";
    default: return "unknown";
  }
}

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names = {
      "reduced", "domain", "field", "local", "zero_dimensional", "absolutely_flat",
      "primary", "mp", "pp", "pf", "gpp", "gpf", "quasi_pf", "almost_pp", "purified",
      "strongly_purified", "admissible"};
  return names;
}

const std::vector<std::pair<std::string, std::string>>& implication_lattice() {
  static const std::vector<std::pair<std::string, std::string>> pairs = {
      {"pp", "pf"},        {"pp", "gpp"},       {"pf", "gpf"},
      {"gpp", "gpf"},      {"gpf", "quasi_pf"}, {"quasi_pf", "mp"},
      {"absolutely_flat", "pp"}, {"zero_dimensional", "gpp"}, {"domain", "pp"},
      {"primary", "gpf"}};
  return pairs;
}

const PredicateResult& Classification::at(const std::string& name) const {
  auto it = results.find(name);
  if (it == results.end()) throw UnknownName("no predicate named " + name);
  return it->second;
}

std::vector<std::string> implication_violations(const std::map<std::string, PredicateResult>& results) {
  std::vector<std::string> out;
  for (const auto& [a, b] : implication_lattice()) {
    auto ia = results.find(a), ib = results.find(b);
    if (ia == results.end() || ib == results.end()) continue;
    if (ia->second.verdict.is_true() && ib->second.verdict.is_false()) out.push_back(a + " => " + b);
  }
  return out;
}

namespace {

constexpr std::size_t kMaxSamples = 3000;
constexpr std::size_t kSmallIdeal = 16;

bool is_name(const std::string& n) {
  const auto& names = predicate_names();
  return std::find(names.begin(), names.end(), n) != names.end();
}

Witness make_witness(std::vector<std::string> elements, std::string note,
                     WitnessKind kind = WitnessKind::refuting_element) {
  return Witness{kind, std::move(elements), std::move(note)};
}

PredicateResult result(bool holds, std::optional<Witness> w, Strategy s, std::string route) {
  PredicateResult r;
  r.verdict = Verdict::of(holds);
  if (!holds) r.witness = std::move(w);
  r.strategy = s;
  r.route = std::move(route);
  return r;
}

// ------------------------------------------------------------------------
// Finite rings

struct FiniteProfile {
  std::vector<IdxSet> ideals;
  std::vector<std::uint32_t> ann;  // element -> index into ideals
  std::vector<char> pure, quasi, regular;
  std::vector<std::optional<Idx>> idem;
};

FiniteProfile build_profile(const FiniteRing& F) {
  FiniteProfile p;
  std::map<IdxSet, std::uint32_t> index;
  p.ann.resize(F.size());
  for (Idx x = 0; x < F.size(); ++x) {
    IdxSet a = fin::annihilator(F, x);
    auto [it, inserted] = index.emplace(a, static_cast<std::uint32_t>(p.ideals.size()));
    if (inserted) p.ideals.push_back(std::move(a));
    p.ann[x] = it->second;
  }
  for (const IdxSet& I : p.ideals) {
    p.pure.push_back(!fin::pure_refuter(F, I));
    p.quasi.push_back(!fin::quasi_pure_refuter(F, I));
    p.regular.push_back(!fin::regular_refuter(F, I));
    p.idem.push_back(fin::idempotent_generator(F, I));
  }
  return p;
}

const FiniteProfile& profile(const FiniteRing& F) {
  const char* key = mutation::purity_always_true() ? "profile:mutated" : "profile";
  return *F.memo().get<FiniteProfile>(key, [&] { return build_profile(F); });
}

// Ideal ids of Ann(x), Ann(x^2), ... up to the first repeat.
std::vector<std::uint32_t> ann_chain(const FiniteRing& F, const FiniteProfile& p, Idx x) {
  std::vector<std::uint32_t> out;
  Idx power = x;
  for (;;) {
    const std::uint32_t id = p.ann[power];
    if (!out.empty() && out.back() == id) break;
    out.push_back(id);
    power = F.mul(power, x);
  }
  return out;
}

std::string describe(const FiniteRing& F, const IdxSet& I) {
  if (I.size() <= kSmallIdeal) {
    std::string s = "{";
    for (std::size_t i = 0; i < I.size(); ++i) s += (i ? ", " : "") + F.label(I[i]);
    return s + "}";
  }
  std::string s = "(";
  auto gens = fin::generators(F, I);
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + F.label(gens[i]);
  return s + ")";
}

std::size_t power_bound(const FiniteRing& F) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < F.size()) ++k;
  return k + 2;
}

// Annihilator-class predicates: `ok` decides one ideal id.
template <class Ok>
PredicateResult ann_scan(const FiniteRing& F, const FiniteProfile& p, bool powers, Ok ok,
                         const std::string& failure, const std::string& route) {
  for (Idx x = 0; x < F.size(); ++x) {
    if (!powers) {
      if (ok(p.ann[x])) continue;
      return result(false,
                    make_witness({F.label(x)}, "Ann(" + F.label(x) + ") = " + describe(F, p.ideals[p.ann[x]]) +
                                                   " is not " + failure),
                    Strategy::definitional, route);
    }
    const auto chain = ann_chain(F, p, x);
    if (std::any_of(chain.begin(), chain.end(), ok)) continue;
    return result(false,
                  make_witness({F.label(x)}, "Ann(" + F.label(x) + "^n) stabilizes at " +
                                                 describe(F, p.ideals[chain.back()]) + " and no power gives " +
                                                 failure + " annihilator"),
                  Strategy::definitional, route);
  }
  return result(true, std::nullopt, Strategy::definitional, route);
}

PredicateResult finite_predicate(const FiniteRing& F, const std::string& name) {
  const std::string route = "exhaustive";
  auto yes = [&] { return result(true, std::nullopt, Strategy::definitional, route); };
  auto no = [&](std::vector<std::string> elems, std::string note,
                WitnessKind k = WitnessKind::refuting_element) {
    return result(false, make_witness(std::move(elems), std::move(note), k), Strategy::definitional, route);
  };
  const Idx zero = F.zero();

  if (name == "reduced") {
    for (Idx x = 0; x < F.size(); ++x)
      if (x != zero && F.is_nilpotent(x)) return no({F.label(x)}, F.label(x) + " is a nonzero nilpotent");
    return yes();
  }
  if (name == "domain" || name == "field") {
    if (F.is_zero_ring()) return no({}, "the zero ring is excluded");
    for (Idx x = 0; x < F.size(); ++x) {
      if (x == zero) continue;
      if (name == "domain" && F.is_zero_divisor(x)) return no({F.label(x)}, F.label(x) + " is a zero-divisor");
      if (name == "field" && !F.is_unit(x)) return no({F.label(x)}, F.label(x) + " is not a unit");
    }
    return yes();
  }
  if (name == "local") {
    if (F.is_zero_ring()) return no({}, "the zero ring has no maximal ideal");
    for (Idx a = 0; a < F.size(); ++a) {
      if (F.is_unit(a)) continue;
      for (Idx b = a; b < F.size(); ++b)
        if (!F.is_unit(b) && F.is_unit(F.add(a, b)))
          return no({F.label(a), F.label(b)}, "non-units with a unit sum", WitnessKind::refuting_pair);
    }
    return yes();
  }
  if (name == "zero_dimensional") {
    // f^n in f^{n+1} R for some n
    const std::size_t bound = power_bound(F);
    for (Idx f = 0; f < F.size(); ++f) {
      bool found = false;
      Idx fn = f;
      for (std::size_t n = 1; n <= bound && !found; ++n) {
        const Idx fn1 = F.mul(fn, f);
        for (Idx g = 0; g < F.size() && !found; ++g) found = F.mul(fn1, g) == fn;
        fn = fn1;
      }
      if (!found) return no({F.label(f)}, "no n, g with f^n = f^(n+1) g");
    }
    return yes();
  }
  if (name == "absolutely_flat") {
    for (Idx f = 0; f < F.size(); ++f) {
      const Idx f2 = F.mul(f, f);
      bool found = false;
      for (Idx g = 0; g < F.size() && !found; ++g) found = F.mul(f2, g) == f;
      if (!found) return no({F.label(f)}, F.label(f) + " is not of the form f^2 g");
    }
    return yes();
  }
  if (name == "primary") {
    if (auto x = fin::primary_refuter(F)) return no({F.label(*x)}, F.label(*x) + " is a zero-divisor that is not nilpotent");
    return yes();
  }
  if (name == "mp" || name == "purified") {
    const auto mins = fin::minimal_primes(F);
    for (std::size_t i = 0; i < mins.size(); ++i)
      for (std::size_t j = 0; j < mins.size(); ++j) {
        if (i == j) continue;
        if (name == "mp") {
          if (j > i && fin::sum(F, mins[i], mins[j]).size() != F.size())
            return no({describe(F, mins[i]), describe(F, mins[j])}, "minimal primes with a proper sum",
                      WitnessKind::refuting_pair);
          continue;
        }
        bool separated = false;
        for (Idx e : F.idempotents())
          if (fin::contains(mins[i], e) && fin::contains(mins[j], F.sub(F.one(), e))) separated = true;
        if (!separated)
          return no({describe(F, mins[i]), describe(F, mins[j])}, "no idempotent e in the first with 1-e in the second",
                    WitnessKind::refuting_pair);
      }
    return yes();
  }
  if (name == "admissible") {
    // Every X_f lies in the finite set Max(R), so it is quasi-compact.
    return yes();
  }

  const FiniteProfile& p = profile(F);
  auto idem = [&](std::uint32_t id) { return p.idem[id].has_value(); };
  auto pure = [&](std::uint32_t id) { return p.pure[id] != 0; };
  auto quasi = [&](std::uint32_t id) { return p.quasi[id] != 0; };
  auto regular = [&](std::uint32_t id) { return p.regular[id] != 0; };
  if (name == "pp") return ann_scan(F, p, false, idem, "generated by an idempotent", route);
  if (name == "pf") return ann_scan(F, p, false, pure, "pure", route);
  if (name == "quasi_pf") return ann_scan(F, p, false, quasi, "quasi-pure", route);
  if (name == "almost_pp") return ann_scan(F, p, false, regular, "regular", route);
  if (name == "gpp") return ann_scan(F, p, true, idem, "an idempotent-generated", route);
  if (name == "gpf") return ann_scan(F, p, true, pure, "a pure", route);
  if (name == "strongly_purified") return ann_scan(F, p, true, regular, "a regular", route);
  throw UnknownName("no predicate named " + name);
}

// ------------------------------------------------------------------------
// Z-algebras

PredicateResult theorem(bool holds, std::optional<Witness> w, std::string route) {
  return result(holds, std::move(w), Strategy::theorem_backed, std::move(route));
}

std::string fmt(const Lattice& L, const ZAlgebra& A) {
  const IntMat gens = zal::generators(A, L);
  if (gens.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + A.format(gens[i]);
  return s + ")";
}

enum class Probe { ann_idem, ann_quasi, chain_idem, nilpotent, zero_divisor, primary, nonunit };

struct ProbeHit {
  IntVec f;
  std::string note;
};

std::optional<ProbeHit> run_probe(const ZAlgebra& A, Probe kind, int height) {
  std::size_t seen = 0;
  for (const IntVec& f : A.sample(height)) {
    if (seen++ == kMaxSamples) break;
    const std::string s = A.format(f);
    switch (kind) {
      case Probe::ann_idem: {
        Lattice ann = A.annihilator(f);
        if (!zal::idempotent_generator(A, ann))
          return ProbeHit{f, "Ann(" + s + ") = " + fmt(ann, A) + " is not generated by an idempotent"};
        break;
      }
      case Probe::ann_quasi: {
        Lattice ann = A.annihilator(f);
        if (auto g = zal::quasi_pure_refuter(A, ann))
          return ProbeHit{f, "Ann(" + s + ") = " + fmt(ann, A) + " is not quasi-pure: generator " + A.format(*g) +
                                 " has Ann(" + A.format(*g) + "^n) + Ann(" + s + ") proper"};
        break;
      }
      case Probe::chain_idem: {
        IntVec power = f;
        Lattice cur = A.annihilator(power);
        bool found = false;
        for (;;) {
          if (zal::idempotent_generator(A, cur)) {
            found = true;
            break;
          }
          power = A.mul(power, f);
          Lattice next = A.annihilator(power);
          if (next == cur) break;
          cur = std::move(next);
        }
        if (!found)
          return ProbeHit{f, "Ann(" + s + "^n) stabilizes at " + fmt(cur, A) +
                                 ", which no idempotent generates"};
        break;
      }
      case Probe::nilpotent:
        if (!A.is_zero(f) && A.is_nilpotent(f)) return ProbeHit{f, s + " is a nonzero nilpotent"};
        break;
      case Probe::zero_divisor:
        if (!A.is_zero(f) && A.is_zero_divisor(f)) return ProbeHit{f, s + " is a nonzero zero-divisor"};
        break;
      case Probe::primary:
        if (A.is_zero_divisor(f) && !A.is_nilpotent(f))
          return ProbeHit{f, s + " is a zero-divisor that is not nilpotent"};
        break;
      case Probe::nonunit:
        if (!A.is_zero(f) && !A.is_unit(f)) return ProbeHit{f, s + " is a nonzero non-unit"};
        break;
    }
  }
  return std::nullopt;
}

const std::optional<ProbeHit>& probe(const ZAlgebra& A, Probe kind, int height) {
  const std::string key = "probe:" + std::to_string(static_cast<int>(kind)) + ":" + std::to_string(height);
  return *A.memo().get<std::optional<ProbeHit>>(key, [&] { return run_probe(A, kind, height); });
}

std::optional<Probe> guard_for(const std::string& name) {
  if (name == "pp" || name == "pf" || name == "almost_pp") return Probe::ann_idem;
  if (name == "quasi_pf") return Probe::ann_quasi;
  if (name == "gpp" || name == "gpf" || name == "strongly_purified") return Probe::chain_idem;
  if (name == "reduced") return Probe::nilpotent;
  if (name == "domain") return Probe::zero_divisor;
  if (name == "primary") return Probe::primary;
  if (name == "field") return Probe::nonunit;
  return std::nullopt;
}

IntVec one_minus(const ZAlgebra& A, const IntVec& e) { return A.sub(A.one(), e); }

PredicateResult algebra_predicate(const RingHandle& R, const std::string& name, const ClassifyOptions& opts) {
  const ZAlgebra& A = R.algebra();
  const bool finite = A.is_finite();
  if (name == "field" || name == "local" || name == "zero_dimensional" || name == "absolutely_flat" ||
      name == "admissible") {
    if (finite) return routes::definitional(R, name);
    if (name == "admissible") {
      PredicateResult r;
      r.verdict = Verdict::unknown("maximal spectrum is infinite");
      r.strategy = Strategy::unknown;
      r.route = "not-decided";
      return r;
    }
    std::optional<Witness> w;
    if (name == "field")
      if (const auto& hit = probe(A, Probe::nonunit, opts.sample_height)) w = make_witness({A.format(hit->f)}, hit->note);
    PredicateResult r = theorem(false, w, "free-rank");
    if (!r.witness) r.witness = make_witness({}, "free rank " + std::to_string(A.r()) + " gives Krull dimension 1");
    return r;
  }

  PredicateResult r;
  if (name == "reduced") r = routes::z_reduced(R);
  else if (name == "domain") r = routes::z_domain(R);
  else if (name == "primary") r = routes::z_primary(R);
  else if (name == "mp") r = routes::z_mp(R);
  else if (name == "pp") r = routes::z_pp(R);
  else if (name == "pf") r = routes::z_pf(R);
  else if (name == "quasi_pf") r = routes::z_quasi_pf(R);
  else if (name == "gpp") r = routes::z_gpp(R);
  else if (name == "gpf") r = routes::z_gpf(R);
  else if (name == "purified") r = routes::z_purified(R);
  else if (name == "almost_pp") {
    r = routes::z_pp(R);
    r.route = "regular-equals-pp";
  } else if (name == "strongly_purified") {
    r = routes::z_gpp(R);
    r.route = "regular-equals-gpp";
  } else {
    throw UnknownName("no predicate named " + name);
  }

  if (auto kind = guard_for(name)) {
    const auto& hit = probe(A, *kind, opts.sample_height);
    if (r.verdict.is_true() && hit)
      throw ConsistencyError(name + " on " + R.name() + ": route " + r.route + " says true but " + hit->note);
    if (r.verdict.is_false()) {
      if (hit) {
        r.witness = make_witness({A.format(hit->f)}, hit->note);
      } else if (finite && !A.is_zero_ring()) {
        throw ConsistencyError(name + " on " + R.name() + ": route " + r.route +
                               " says false but the exhaustive scan finds no refutation");
      }
    }
  }
  return r;
}

}  // namespace

namespace routes {

RingHandle as_table(const RingHandle& R) {
  if (!R.is_algebra()) return R;
  const ZAlgebra& A = R.algebra();
  if (!A.is_finite()) throw InfiniteRing(R.name() + " is infinite");
  // The table handle holds no reference back to R, so caching it is safe.
  return *R.memo().get<RingHandle>("table", [&] {
    return RingHandle::from_table(A.to_finite(), Backend::table, R.name());
  });
}

PredicateResult definitional(const RingHandle& R, const std::string& name) {
  if (!is_name(name)) throw UnknownName("no predicate named " + name);
  return finite_predicate(as_table(R).table(), name);
}

PredicateResult sampled(const RingHandle& R, const std::string& name, int height) {
  if (!R.is_algebra()) return definitional(R, name);
  const auto kind = guard_for(name);
  if (!kind) throw UnknownName(name + " has no sampled definition");
  const ZAlgebra& A = R.algebra();
  const std::string route = "sampled-height-" + std::to_string(height);
  if (const auto& hit = probe(A, *kind, height)) {
    return result(false, make_witness({A.format(hit->f)}, hit->note), Strategy::definitional, route);
  }
  if (A.is_finite() && A.torsion_order() <= kMaxSamples) {
    if (A.is_zero_ring() && (name == "domain" || name == "field"))
      return result(false, make_witness({}, "the zero ring is excluded"), Strategy::definitional, route);
    return result(true, std::nullopt, Strategy::definitional, route);
  }
  PredicateResult r;
  r.verdict = Verdict::unknown("no refutation among samples of height " + std::to_string(height));
  r.strategy = Strategy::unknown;
  r.route = route;
  return r;
}

PredicateResult z_reduced(const RingHandle& R) {
  const ZAlgebra& A = R.algebra();
  const Lattice N = zal::nilradical(A);
  if (N == A.relations()) return theorem(true, std::nullopt, "nilradical");
  const IntVec g = zal::generators(A, N).front();
  return theorem(false, make_witness({A.format(g)}, A.format(g) + " is a nonzero nilpotent"), "nilradical");
}

PredicateResult z_domain(const RingHandle& R) {
  const ZAlgebra& A = R.algebra();
  if (A.is_zero_ring()) return theorem(false, make_witness({}, "the zero ring is excluded"), "quotient-domain-test");
  return theorem(zal::is_domain(A), std::nullopt, "quotient-domain-test");
}

PredicateResult z_primary(const RingHandle& R) {
  const ZAlgebra& A = R.algebra();
  const std::string route = "nilradical-prime-and-ker-pi";
  if (A.is_zero_ring()) return theorem(true, std::nullopt, route);
  const Lattice N = zal::nilradical(A);
  if (!zal::is_prime(A, N))
    return theorem(false, make_witness({}, "the nilradical " + fmt(N, A) + " is not prime"), route);
  const Lattice K = zal::ker_pi(A, N);
  if (K == A.relations()) return theorem(true, std::nullopt, route);
  return theorem(false, make_witness({}, "ker_pi of the nilradical is " + fmt(K, A) + ", not zero"), route);
}

PredicateResult z_mp(const RingHandle& R) {
  const ZAlgebra& A = R.algebra();
  const auto& mins = zal::minimal_primes(A);
  for (std::size_t i = 0; i < mins.size(); ++i)
    for (std::size_t j = i + 1; j < mins.size(); ++j)
      if (!(mins[i] + mins[j]).is_full())
        return theorem(false,
                       make_witness({fmt(mins[i], A), fmt(mins[j], A)}, "minimal primes with a proper sum",
                                    WitnessKind::refuting_pair),
                       "minimal-prime-sums");
  return theorem(true, std::nullopt, "minimal-prime-sums");
}

PredicateResult z_pp(const RingHandle& R) {
  const ZAlgebra& A = R.algebra();
  const std::string route = "reduced-and-mp";
  if (!(zal::nilradical(A) == A.relations()))
    return theorem(false, make_witness({}, "not reduced"), route);
  PredicateResult mp = z_mp(R);
  return theorem(mp.verdict.is_true(), mp.witness, route);
}

PredicateResult z_pf(const RingHandle& R) {
  const ZAlgebra& A = R.algebra();
  const std::string route = "idempotent-count";
  if (!zal::is_reduced(A)) return theorem(false, make_witness({}, "not reduced"), route);
  const std::size_t idem = zal::primitive_idempotents(A).size();
  const std::size_t mins = zal::minimal_primes(A).size();
  if (idem == mins) return theorem(true, std::nullopt, route);
  return theorem(false,
                 make_witness({}, std::to_string(mins) + " minimal primes but " + std::to_string(idem) +
                                      " primitive idempotents"),
                 route);
}

PredicateResult z_quasi_pf(const RingHandle& R) {
  const ZAlgebra& A = R.algebra();
  const std::string route = "ker-pi-idempotent";
  for (const Lattice& p : zal::minimal_primes(A)) {
    const Lattice K = zal::ker_pi(A, p);
    if (!zal::idempotent_generator(A, K))
      return theorem(false,
                     make_witness({}, "ker_pi" + fmt(p, A) + " = " + fmt(K, A) + " is not generated by an idempotent",
                                  WitnessKind::separator),
                     route);
  }
  return theorem(true, std::nullopt, route);
}

PredicateResult z_gpp(const RingHandle& R) {
  const ZAlgebra& A = R.algebra();
  const std::string route = "factor-primary";
  for (const IntVec& e : zal::primitive_idempotents(A)) {
    const ZQuotient q = A.quotient(A.principal(one_minus(A, e)));
    if (!zal::is_primary_by_ass(*q.ring))
      return theorem(false,
                     make_witness({A.format(e)}, "the factor cut out by " + A.format(e) + " is not primary",
                                  WitnessKind::idempotent),
                     route);
  }
  return theorem(true, std::nullopt, route);
}

PredicateResult z_gpf(const RingHandle& R) {
  const ZAlgebra& A = R.algebra();
  const std::string route = "associated-prime-patterns";
  const auto& ass = zal::associated_primes(A);
  const std::size_t k = ass.size();
  if (k > 12) {
    PredicateResult r;
    r.verdict = Verdict::unknown("more than 12 associated primes");
    r.strategy = Strategy::unknown;
    r.route = route;
    return r;
  }
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
    // f in J outside the remaining primes; such f exist by prime avoidance.
    std::optional<IntVec> f;
    const IntMat& rows = J.basis();
    if (rows.empty() && avoids(A.zero())) f = A.zero();
    for (const IntVec& row : rows)
      if (avoids(row)) {
        f = row;
        break;
      }
    if (!f) {
      std::vector<int> c(rows.size(), -2);
      for (bool more = !rows.empty(); more && !f;) {
        IntVec v = zero_vec(A.m());
        for (std::size_t i = 0; i < rows.size(); ++i)
          for (std::size_t j = 0; j < A.m(); ++j) v[j] += c[i] * rows[i][j];
        if (avoids(v)) f = v;
        more = false;
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (c[i] < 2) {
            ++c[i];
            more = true;
            break;
          }
          c[i] = -2;
        }
      }
    }
    if (!f) {
      PredicateResult r;
      r.verdict = Verdict::unknown("no element realizes an associated-prime pattern within coefficients |c| <= 2");
      r.strategy = Strategy::unknown;
      r.route = route;
      return r;
    }
    const IntVec g = A.canon(*f);
    const Lattice K = zal::saturation(A, A.relations(), g);
    if (!zal::idempotent_generator(A, K))
      return theorem(false,
                     make_witness({A.format(g)}, "Ann(" + A.format(g) + "^n) stabilizes at " + fmt(K, A) +
                                                     ", which no idempotent generates"),
                     route);
  }
  return theorem(true, std::nullopt, route);
}

PredicateResult z_purified(const RingHandle& R) {
  const ZAlgebra& A = R.algebra();
  const auto& mins = zal::minimal_primes(A);
  const auto& idem = A.idempotents();
  for (std::size_t i = 0; i < mins.size(); ++i)
    for (std::size_t j = 0; j < mins.size(); ++j) {
      if (i == j) continue;
      bool separated = false;
      for (const IntVec& e : idem)
        if (mins[i].contains(e) && mins[j].contains(one_minus(A, e))) separated = true;
      if (!separated)
        return theorem(false,
                       make_witness({fmt(mins[i], A), fmt(mins[j], A)},
                                    "no idempotent e in the first with 1-e in the second", WitnessKind::refuting_pair),
                       "idempotent-separation");
    }
  return theorem(true, std::nullopt, "idempotent-separation");
}

PredicateResult z_localizations_primary(const RingHandle& R) {
  const ZAlgebra& A = R.algebra();
  const auto& ass = zal::associated_primes(A);
  for (std::size_t i = 0; i < ass.size(); ++i)
    for (std::size_t j = i + 1; j < ass.size(); ++j)
      if (!(ass[i] + ass[j]).is_full())
        return theorem(false,
                       make_witness({fmt(ass[i], A), fmt(ass[j], A)},
                                    "two associated primes lie in a common maximal ideal", WitnessKind::refuting_pair),
                       "associated-primes-comaximal");
  return theorem(true, std::nullopt, "associated-primes-comaximal");
}

PredicateResult z_ker_pi_maximal_primary(const RingHandle& R) {
  const ZAlgebra& A = R.algebra();
  const std::string route = "ker-pi-at-candidate-maximals";
  std::vector<Lattice> candidates;
  if (A.is_finite()) {
    candidates = zal::maximal_over(A, A.relations());
  } else {
    candidates = zal::torsion_maximal_ideals(A);
    const auto& mins = zal::minimal_primes(A);
    for (std::size_t i = 0; i < mins.size(); ++i)
      for (std::size_t j = i + 1; j < mins.size(); ++j) {
        const Lattice s = mins[i] + mins[j];
        if (s.is_full()) continue;
        for (Lattice& m : zal::maximal_over(A, s)) candidates.push_back(std::move(m));
      }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const Lattice& m : candidates) {
    const Lattice K = zal::ker_pi(A, m);
    if (!zal::is_primary_ideal(A, K))
      return theorem(false,
                     make_witness({fmt(m, A)}, "ker_pi" + fmt(m, A) + " = " + fmt(K, A) + " is not primary",
                                  WitnessKind::separator),
                     route);
  }
  return theorem(true, std::nullopt, route);
}

}  // namespace routes

PredicateResult predicate(const RingHandle& R, const std::string& name, const ClassifyOptions& opts) {
  if (!is_name(name)) throw UnknownName("no predicate named " + name);
  const std::string key = "predicate:" + name + ":" + std::to_string(opts.sample_height) +
                          (mutation::purity_always_true() ? ":mutated" : "");
  return *R.memo().get<PredicateResult>(key, [&] {
    return R.is_algebra() ? algebra_predicate(R, name, opts) : routes::definitional(R, name);
  });
}

Classification classify(const RingHandle& R, const ClassifyOptions& opts) {
  Classification c;
  c.ring = R.name();
  for (const std::string& name : predicate_names()) c.results[name] = predicate(R, name, opts);
  c.violations = implication_violations(c.results);
  return c;
}

Classification quotient_mod_nil_profile(const RingHandle& R, const ClassifyOptions& opts) {
  return classify(mod_nil(R).ring(), opts);
}

}  // namespace ringlab
