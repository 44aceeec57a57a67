#include <gtest/gtest.h>

#include "ringlab/catalog.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/mutation.hpp"
#include "ringlab/theorems.hpp"
#include "support.hpp"

using namespace ringlab;
using namespace ringlab::test;

namespace {

Subject subject(const std::string& catalog_name) { return construct_subject(catalog_get(catalog_name).doc); }

std::vector<Truth> verdicts(const TheoremReport& r) {
  std::vector<Truth> out;
  for (const Clause& c : r.clauses) out.push_back(c.verdict.value);
  return out;
}

CorpusConfig small_corpus() {
  CorpusConfig cfg;
  cfg.max_zmod = 16;
  cfg.product_seeds = {"F2", "Z/4"};
  cfg.max_factors = 2;
  cfg.max_poly_size = 9;
  cfg.ultra_ground = 2;
  return cfg;
}

}  // namespace

TEST(Catalog, EveryEntryMatchesItsExpectations) {
  for (const std::string& name : catalog_names()) {
    const auto mismatches = check_entry(catalog_get(name));
    for (const CatalogMismatch& m : mismatches) ADD_FAILURE() << name << ": " << m.what << " expected " << m.expected;
  }
}

TEST(Catalog, RequiredEntriesExist) {
  for (const char* name : {"deligne", "z", "z_x_x2_minus_2x", "z_omega", "z_cross_z", "powerset2", "zmod4", "zmod4096"})
    EXPECT_NO_THROW(catalog_get(name)) << name;
  EXPECT_THROW(catalog_get("zmod4097"), UnknownName);
  EXPECT_THROW(catalog_get("nope"), UnknownName);
}

TEST(Catalog, DeligneExpectations) {
  const CatalogEntry e = catalog_get("deligne");
  std::map<std::string, Truth> exp;
  for (const Expectation& x : e.expected) exp[x.predicate] = x.value;
  EXPECT_EQ(exp.at("mp"), Truth::True);
  EXPECT_EQ(exp.at("quasi_pf"), Truth::False);
  EXPECT_EQ(exp.at("gpp"), Truth::False);
  EXPECT_EQ(e.idempotents.size(), 2u);
}

TEST(Theorems, RegistryHasEveryTheorem) {
  const auto ids = theorem_ids();
  for (const char* id : {"II", "III", "IV", "QPF", "IX", "XI", "CorI", "CorIII", "92629456", "PropIV", "LemmaI", "ultra"})
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  EXPECT_EQ(theorem_def("quasi-pf").id, "QPF");
  EXPECT_THROW(theorem_def("XII"), UnknownName);
}

TEST(Theorems, RoutesAreDistinctWithinATheorem) {
  for (const TheoremDef& t : theorem_registry()) {
    std::set<std::string> fin, alg;
    for (const ClauseDef& c : t.clauses) {
      if (c.finite) { EXPECT_TRUE(fin.insert(c.finite_route).second) << t.id; }
      if (c.algebra) { EXPECT_TRUE(alg.insert(c.algebra_route).second) << t.id; }
    }
  }
}

TEST(Theorems, IXOnDeligneIsFalseThroughout) {
  const TheoremReport r = verify_theorem("IX", subject("deligne"));
  EXPECT_EQ(verdicts(r), std::vector<Truth>(4, Truth::False));
  EXPECT_EQ(r.agreement, Agreement::pass);
}

TEST(Theorems, IIOnZ4IsFalseThroughout) {
  const TheoremReport r = verify_theorem("II", subject("zmod4"));
  EXPECT_EQ(verdicts(r), std::vector<Truth>(4, Truth::False));
  EXPECT_EQ(r.agreement, Agreement::pass);
}

TEST(Theorems, XIOnZ6IsTrueOnBothSides) {
  const TheoremReport r = verify_theorem("XI", subject("zmod6"));
  EXPECT_EQ(verdicts(r), std::vector<Truth>(2, Truth::True));
  EXPECT_EQ(r.agreement, Agreement::pass);
}

TEST(Theorems, ImplicationsOnlyFailForwards) {
  const TheoremReport r = verify_theorem("92629456", subject("deligne"));
  EXPECT_EQ(verdicts(r), (std::vector<Truth>{Truth::False, Truth::False, Truth::True}));
  EXPECT_EQ(r.agreement, Agreement::pass);
  const TheoremReport m = verify_theorem("92629456", subject("z_x_x2_minus_2x"));
  EXPECT_EQ(m.agreement, Agreement::pass);
}

TEST(Theorems, FiniteOnlyTheoremsDoNotApplyToInfiniteRings) {
  EXPECT_FALSE(theorem_applies("IV", subject("deligne")));
  EXPECT_THROW(verify_theorem("IV", subject("deligne")), NotApplicable);
  EXPECT_THROW(verify_theorem("ultra", subject("zmod4")), NotApplicable);
  EXPECT_FALSE(theorem_applies("PropII", subject("zmod1")));
}

TEST(Theorems, SampledClausesMakeInfiniteReportsIndeterminate) {
  VerifyOptions opts;
  opts.sampled_clauses = true;
  const TheoremReport r = verify_theorem("QPF", subject("z"), opts);
  EXPECT_EQ(r.agreement, Agreement::indeterminate);
  EXPECT_EQ(verify_theorem("QPF", subject("z")).agreement, Agreement::pass);
  EXPECT_EQ(verify_theorem("QPF", subject("deligne"), opts).agreement, Agreement::pass);
}

TEST(Judge, Rules) {
  auto clause = [](Verdict v) { return Clause{"c", v, Strategy::definitional, "r", std::nullopt}; };
  const Verdict T = Verdict::yes(), F = Verdict::no(), U = Verdict::unknown("bound");
  EXPECT_EQ(judge(TheoremKind::equivalence, {clause(T), clause(T)}), Agreement::pass);
  EXPECT_EQ(judge(TheoremKind::equivalence, {clause(T), clause(F)}), Agreement::fail);
  EXPECT_EQ(judge(TheoremKind::equivalence, {clause(T), clause(U)}), Agreement::indeterminate);
  EXPECT_EQ(judge(TheoremKind::equivalence, {clause(T), clause(F), clause(U)}), Agreement::fail);
  EXPECT_EQ(judge(TheoremKind::implication, {clause(F), clause(T)}), Agreement::pass);
  EXPECT_EQ(judge(TheoremKind::implication, {clause(T), clause(F)}), Agreement::fail);
  EXPECT_EQ(judge(TheoremKind::implication, {clause(F), clause(U)}), Agreement::pass);
  EXPECT_EQ(judge(TheoremKind::implication, {clause(U), clause(F)}), Agreement::indeterminate);
  EXPECT_EQ(judge(TheoremKind::suite, {clause(T), clause(U)}), Agreement::indeterminate);
  EXPECT_EQ(judge(TheoremKind::suite, {clause(U), clause(F)}), Agreement::fail);
}

TEST(MachineFormat, StableKeys) {
  const TheoremReport r = verify_theorem("II", subject("zmod4"));
  const Json j = to_json(r);
  for (const char* key : {"ring", "theorem", "verdict", "witness"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j.at("verdict"), "pass");
  const Json p = predicate_json("Z/4", "pf", predicate(zmod(4), "pf"));
  for (const char* key : {"ring", "predicate", "verdict", "witness"}) EXPECT_TRUE(p.contains(key)) << key;
  EXPECT_EQ(p.at("witness").at("elements"), Json::array({"2"}));
}

TEST(Corpus, DefaultGeneratorsCoverTheRequiredFamilies) {
  const auto rings = corpus_rings(CorpusConfig{});
  std::set<std::string> names;
  for (const CorpusRing& r : rings) names.insert(r.name);
  EXPECT_EQ(names.size(), rings.size());
  for (const char* n : {"Z/1", "Z/64", "F4 x Z/8 x Z/9", "Z/9 x Z/9 x Z/9", "catalog:deligne", "Z/2[x]/(x^6)",
                        "Z/4[x]/(x^3)", "ultra(Z/4 x F3 x F2 x Z/4; P({1,4}))"})
    EXPECT_TRUE(names.count(n)) << n;
  EXPECT_TRUE(std::is_sorted(rings.begin(), rings.end(), [](auto& a, auto& b) { return a.name < b.name; }));
}

TEST(Corpus, EmptyCorpusIsTrivial) {
  const CorpusSummary s = run_corpus(std::vector<CorpusRing>{}, CorpusConfig{}, 2);
  EXPECT_EQ(s.rings, 0u);
  EXPECT_EQ(s.fail, 0u);
  EXPECT_TRUE(s.lines.empty());
}

TEST(Corpus, CatalogCorpusMatchesExpectations) {
  CorpusConfig cfg;
  cfg.max_zmod = 0;
  cfg.max_factors = 0;
  cfg.max_poly_size = 0;
  cfg.ultra_ground = 0;
  const CorpusSummary s = run_corpus(cfg, 2);
  EXPECT_GT(s.rings, 10u);
  EXPECT_EQ(s.fail, 0u);
  EXPECT_EQ(s.indeterminate, 0u);
}

TEST(Corpus, SmallCorpusPassesAndIsDeterministic) {
  const CorpusConfig cfg = small_corpus();
  const CorpusSummary a = run_corpus(cfg, 1);
  const CorpusSummary b = run_corpus(cfg, 4);
  EXPECT_EQ(a.fail, 0u);
  EXPECT_EQ(a.indeterminate, 0u);
  EXPECT_EQ(a.lines, b.lines);
}

TEST(Corpus, PurityMutationIsCaught) {
  CorpusConfig cfg = small_corpus();
  cfg.ultra_ground = 0;
  std::size_t failures = 0;
  {
    mutation::ScopedPurityMutation mutate;
    EXPECT_TRUE(mutation::purity_always_true());
    failures = run_corpus(cfg, 1).fail;
  }
  EXPECT_GE(failures, 1u);
  EXPECT_FALSE(mutation::purity_always_true());
  EXPECT_EQ(run_corpus(cfg, 1).fail, 0u);
}

TEST(Corpus, SampledClausesAreReportedAsIndeterminate) {
  CorpusConfig cfg;
  cfg.max_zmod = 0;
  cfg.max_factors = 0;
  cfg.max_poly_size = 0;
  cfg.ultra_ground = 0;
  cfg.sampled_clauses = true;
  const CorpusSummary s = run_corpus(cfg, 2);
  EXPECT_EQ(s.fail, 0u);
  EXPECT_GE(s.indeterminate, 1u);
}
