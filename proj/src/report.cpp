#include "ringlab/report.hpp"

namespace ringlab {

std::string to_string(Agreement a) {
  switch (a) {
    case Agreement::pass: return "pass";
    case Agreement::fail: return "fail";
    default: return "indeterminate";
  }
}

std::string to_string(TheoremKind k) {
  switch (k) {
    case TheoremKind::equivalence: return "equivalence";
    case TheoremKind::implication: return "implication";
    default: return "suite";
  }
}

Clause clause_from(std::string label, const PredicateResult& r) {
  return Clause{std::move(label), r.verdict, r.strategy, r.route, r.witness};
}

Agreement judge(TheoremKind kind, const std::vector<Clause>& clauses) {
  bool unknown = false;
  switch (kind) {
    case TheoremKind::equivalence: {
      bool seen_true = false, seen_false = false;
      for (const Clause& c : clauses) {
        seen_true |= c.verdict.is_true();
        seen_false |= c.verdict.is_false();
        unknown |= !c.verdict.decided();
      }
      if (seen_true && seen_false) return Agreement::fail;
      break;
    }
    case TheoremKind::implication:
      for (std::size_t i = 0; i < clauses.size(); ++i)
        for (std::size_t j = i + 1; j < clauses.size(); ++j) {
          const Verdict& a = clauses[i].verdict;
          const Verdict& b = clauses[j].verdict;
          if (a.is_true() && b.is_false()) return Agreement::fail;
          if (!a.is_false() && !b.is_true() && !(a.decided() && b.decided())) unknown = true;
        }
      break;
    case TheoremKind::suite:
      for (const Clause& c : clauses) {
        if (c.verdict.is_false()) return Agreement::fail;
        unknown |= !c.verdict.decided();
      }
      break;
  }
  return unknown ? Agreement::indeterminate : Agreement::pass;
}

void finalize(TheoremReport& report) { report.agreement = judge(report.kind, report.clauses); }

nlohmann::json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"kind", to_string(w->kind)}, {"elements", w->elements}, {"note", w->note}};
}

nlohmann::json to_json(const TheoremReport& report) {
  nlohmann::json clauses = nlohmann::json::array();
  nlohmann::json witness = nullptr;
  for (const Clause& c : report.clauses) {
    nlohmann::json cj = {{"label", c.label},
                         {"route", c.route},
                         {"strategy", to_string(c.strategy)},
                         {"verdict", to_string(c.verdict)},
                         {"witness", witness_json(c.witness)}};
    if (!c.verdict.decided()) cj["bound"] = c.verdict.bound;
    if (witness.is_null() && c.witness) witness = cj["witness"];
    clauses.push_back(std::move(cj));
  }
  nlohmann::json j = {{"ring", report.ring},
                      {"theorem", report.theorem_id},
                      {"kind", to_string(report.kind)},
                      {"verdict", to_string(report.agreement)},
                      {"witness", witness},
                      {"clauses", clauses}};
  if (!report.notes.empty()) j["notes"] = report.notes;
  return j;
}

nlohmann::json predicate_json(const std::string& ring, const std::string& name, const PredicateResult& r) {
  nlohmann::json j = {{"ring", ring},
                      {"predicate", name},
                      {"verdict", to_string(r.verdict)},
                      {"route", r.route},
                      {"strategy", to_string(r.strategy)},
                      {"witness", witness_json(r.witness)}};
  if (!r.verdict.decided()) j["bound"] = r.verdict.bound;
  return j;
}

std::string machine_line(const nlohmann::json& j) { return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace); }

}  // namespace ringlab
