// ringlab command line: classify rings, verify theorems, run the corpus and
// build ring documents.
//
// Exit codes: 0 everything passed, 1 a refutation or failure, 2 an
// indeterminate result under --strict, 3 unusable input.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ringlab/catalog.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/report.hpp"
#include "ringlab/theorems.hpp"

using namespace ringlab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitInput = 3;

// catalog:NAME, an inline JSON document, a seed such as Z/12 or F4, or a
// path to a ring file.
Json resolve_ring(const std::string& arg) {
  if (arg.rfind("catalog:", 0) == 0) return {{"kind", "catalog"}, {"name", arg.substr(8)}};
  if (!arg.empty() && arg.front() == '{') return parse_document(arg);
  auto number = [&](std::size_t from) -> std::optional<std::size_t> {
    if (from >= arg.size() || arg.find_first_not_of("0123456789", from) != std::string::npos) return std::nullopt;
    return std::stoul(arg.substr(from));
  };
  if (arg.rfind("Z/", 0) == 0)
    if (auto n = number(2)) return {{"kind", "zmod"}, {"n", *n}};
  if (arg.rfind("F", 0) == 0)
    if (auto q = number(1)) return {{"kind", "gf"}, {"q", *q}};
  std::ifstream in(arg);
  if (!in) throw SchemaError("cannot read ring document " + arg + " (expected a file, catalog:NAME, Z/n, Fq or JSON)");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string witness_text(const std::optional<Witness>& w) {
  if (!w) return "";
  std::string out = w->note;
  if (!w->elements.empty()) {
    out += out.empty() ? "" : " ";
    out += "[";
    for (std::size_t i = 0; i < w->elements.size(); ++i) out += (i ? ", " : "") + w->elements[i];
    out += "]";
  }
  return out;
}

void print_report_text(const TheoremReport& r) {
  std::cout << r.theorem_id << " on " << r.ring << ": " << to_string(r.agreement) << " (" << to_string(r.kind) << ")\n";
  for (const Clause& c : r.clauses) {
    std::cout << "  " << std::left << std::setw(8) << to_string(c.verdict) << c.label << "  [" << c.route << "]";
    if (!c.verdict.decided() && !c.verdict.bound.empty()) std::cout << "  bound: " << c.verdict.bound;
    if (c.witness) std::cout << "\n           witness: " << witness_text(c.witness);
    std::cout << "\n";
  }
  for (const std::string& n : r.notes) std::cout << "  note: " << n << "\n";
}

int exit_for(std::size_t fail, std::size_t indeterminate, bool strict) {
  if (fail) return kExitFail;
  if (strict && indeterminate) return kExitIndeterminate;
  return kExitPass;
}

int cmd_classify(const std::string& ring_arg, const std::string& format) {
  const Json doc = resolve_ring(ring_arg);
  const Subject s = construct_subject(doc);
  const Classification cls = classify(s.ring);
  std::size_t fail = cls.violations.size();
  if (format == "machine") {
    for (const std::string& name : predicate_names())
      std::cout << machine_line(predicate_json(s.ring.name(), name, cls.at(name))) << "\n";
  } else {
    std::cout << s.ring.name() << "\n";
    for (const std::string& name : predicate_names()) {
      const PredicateResult& r = cls.at(name);
      std::cout << "  " << std::left << std::setw(18) << name << std::setw(8) << to_string(r.verdict) << r.route;
      if (r.witness) std::cout << "  " << witness_text(r.witness);
      if (!r.verdict.decided() && !r.verdict.bound.empty()) std::cout << "  (" << r.verdict.bound << ")";
      std::cout << "\n";
    }
  }
  for (const std::string& v : cls.violations) std::cerr << "implication violated: " << v << "\n";
  if (ring_arg.rfind("catalog:", 0) == 0) {
    for (const CatalogMismatch& m : check_entry(catalog_get(ring_arg.substr(8)))) {
      std::cerr << "catalog mismatch: " << m.what << " expected " << m.expected << ", computed " << m.actual << "\n";
      ++fail;
    }
  }
  return exit_for(fail, 0, false);
}

int cmd_verify(const std::string& theorem, const std::string& ring_arg, const std::string& format, bool strict,
               bool sampled) {
  const Subject s = construct_subject(resolve_ring(ring_arg));
  VerifyOptions opts;
  opts.sampled_clauses = sampled;
  std::vector<TheoremReport> reports;
  if (theorem == "all")
    reports = verify_all(s, opts);
  else
    reports.push_back(verify_theorem(theorem, s, opts));
  std::size_t fail = 0, indeterminate = 0;
  for (const TheoremReport& r : reports) {
    if (format == "machine")
      std::cout << machine_line(to_json(r)) << "\n";
    else
      print_report_text(r);
    fail += r.agreement == Agreement::fail;
    indeterminate += r.agreement == Agreement::indeterminate;
  }
  return exit_for(fail, indeterminate, strict);
}

int cmd_corpus(CorpusConfig cfg, const std::vector<std::string>& only, std::size_t jobs, bool strict,
               const std::string& output) {
  if (!only.empty()) {
    auto has = [&](const char* g) { return std::find(only.begin(), only.end(), g) != only.end(); };
    if (!has("zmod")) cfg.max_zmod = 0;
    if (!has("products")) cfg.max_factors = 0;
    if (!has("poly")) cfg.max_poly_size = 0;
    if (!has("catalog")) cfg.catalog = false;
    if (!has("ultra")) cfg.ultra_ground = 0;
  }
  const CorpusSummary sum = run_corpus(cfg, jobs);
  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw SchemaError("cannot write " + output);
  }
  std::ostream& out = output.empty() ? std::cout : file;
  for (const std::string& l : sum.lines) out << l << "\n";
  for (const std::string& f : sum.failures) std::cerr << "FAIL " << f << "\n";
  for (const std::string& f : sum.indeterminates) std::cerr << "INDETERMINATE " << f << "\n";
  std::cerr << "rings " << sum.rings << "  pass " << sum.pass << "  fail " << sum.fail << "  indeterminate "
            << sum.indeterminate << "\n";
  return exit_for(sum.fail, sum.indeterminate, strict);
}

void emit_document(const Json& doc, bool pretty) {
  const Subject s = construct_subject(doc);  // validates the document
  std::cout << (pretty ? doc.dump(2) : doc.dump()) << "\n";
  std::cerr << s.ring.name();
  if (const auto n = s.ring.size()) std::cerr << " with " << *n << " elements";
  std::cerr << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringlab: decide purity properties of commutative rings and cross-check the theorems relating them"};
  app.require_subcommand(1);
  int code = kExitPass;

  std::string ring_arg, format = "text";
  auto* classify_cmd = app.add_subcommand("classify", "Decide every registered predicate for one ring");
  classify_cmd->add_option("--ring", ring_arg, "catalog:NAME, Z/n, Fq, inline JSON or a ring file")->required();
  classify_cmd->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  classify_cmd->callback([&] { code = cmd_classify(ring_arg, format); });

  std::string theorem;
  bool strict = false, sampled = false;
  auto* verify_cmd = app.add_subcommand("verify", "Evaluate every clause of a theorem through its own route");
  verify_cmd->add_option("--theorem", theorem, "theorem id or all")->required();
  verify_cmd->add_option("--ring", ring_arg, "catalog:NAME, Z/n, Fq, inline JSON or a ring file")->required();
  verify_cmd->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  verify_cmd->add_flag("--strict", strict, "exit 2 on indeterminate reports");
  verify_cmd->add_flag("--sampled", sampled, "include sampled clauses on infinite rings");
  verify_cmd->callback([&] { code = cmd_verify(theorem, ring_arg, format, strict, sampled); });

  CorpusConfig cdoc;
  std::size_t jobs = 1;
  std::vector<std::string> only;
  std::string output;
  auto* corpus_cmd = app.add_subcommand("corpus", "Run the ring corpus and print machine reports");
  corpus_cmd->add_option("--max-zmod", cdoc.max_zmod, "largest n in the Z/n family")->capture_default_str();
  corpus_cmd->add_option("--jobs", jobs, "worker threads; 0 uses every core")->capture_default_str();
  corpus_cmd->add_option("--only", only, "restrict to generators")
      ->check(CLI::IsMember({"zmod", "products", "poly", "catalog", "ultra"}));
  corpus_cmd->add_option("--output", output, "write the reports here instead of stdout");
  corpus_cmd->add_flag("--strict", strict, "exit 2 on indeterminate reports");
  corpus_cmd->add_flag("--sampled", cdoc.sampled_clauses, "include sampled clauses on infinite rings");
  corpus_cmd->callback([&] { code = cmd_corpus(cdoc, only, jobs, strict, output); });

  auto* construct_cmd = app.add_subcommand("construct", "Print the ring document of a constructed ring");
  construct_cmd->require_subcommand(1);
  bool pretty = false;
  construct_cmd->add_flag("--pretty", pretty, "indent the document");
  std::vector<std::string> factors, generators, ideal;
  std::size_t k = 2;
  std::string name;

  auto* product_cmd = construct_cmd->add_subcommand("product", "Direct product of rings");
  product_cmd->add_option("--factor", factors, "factor ring, repeatable")->required();
  product_cmd->add_option("--name", name, "ring name");
  product_cmd->callback([&] {
    Json fs = Json::array();
    for (const std::string& f : factors) fs.push_back(resolve_ring(f));
    Json doc = {{"kind", "product"}, {"factors", fs}};
    if (!name.empty()) doc["name"] = name;
    emit_document(doc, pretty);
  });

  auto* quotient_cmd = construct_cmd->add_subcommand("quotient", "Quotient by the ideal the generators span");
  quotient_cmd->add_option("--ring", ring_arg, "parent ring")->required();
  quotient_cmd->add_option("--generator", generators, "ideal generator in element syntax, repeatable")->required();
  quotient_cmd->add_option("--name", name, "ring name");
  quotient_cmd->callback([&] {
    Json doc = {{"kind", "quotient"}, {"ring", resolve_ring(ring_arg)}, {"generators", generators}};
    if (!name.empty()) doc["name"] = name;
    emit_document(doc, pretty);
  });

  auto* truncate_cmd = construct_cmd->add_subcommand("truncate", "R[x]/(x^k) for a finite ring R");
  truncate_cmd->add_option("--ring", ring_arg, "base ring")->required();
  truncate_cmd->add_option("--k", k, "truncation degree")->capture_default_str();
  truncate_cmd->add_option("--name", name, "ring name");
  truncate_cmd->callback([&] {
    Json doc = {{"kind", "truncation"}, {"base", resolve_ring(ring_arg)}, {"k", k}};
    if (!name.empty()) doc["name"] = name;
    emit_document(doc, pretty);
  });

  auto* ultra_cmd = construct_cmd->add_subcommand("ultra", "Product over X modulo the star of an ideal of P(X)");
  ultra_cmd->add_option("--factor", factors, "factor ring, one per point of X")->required();
  ultra_cmd->add_option("--ideal", ideal, "generating subset as comma-separated points, repeatable");
  ultra_cmd->add_option("--name", name, "ring name");
  ultra_cmd->callback([&] {
    Json fs = Json::array();
    for (const std::string& f : factors) fs.push_back(resolve_ring(f));
    Json subsets = Json::array();
    for (const std::string& s : ideal) {
      Json members = Json::array();
      std::stringstream ss(s);
      for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) members.push_back(std::stoul(tok));
      subsets.push_back(members);
    }
    Json doc = {{"kind", "ultra"}, {"factors", fs}, {"ideal", subsets}};
    if (!name.empty()) doc["name"] = name;
    emit_document(doc, pretty);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitInput;
  } catch (const NotApplicable& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return kExitIndeterminate;
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return code;
}
