// phmon: exact computation in positively homogeneously presented monoids.
//
// Subcommands operate on a presentation chosen with --type (built-in
// catalog) or --presentation-file. Verdict-style exit codes: 0 for a
// definite positive answer, 1 for a definite negative answer, 2 when the
// search budget ran out, 64 for usage errors. JSON output is a single
// document on stdout; diagnostics go to stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "phmon/catalog.hpp"
#include "phmon/json_report.hpp"

using namespace phmon;
using nlohmann::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

constexpr std::size_t kMemberListLimit = 1000;

struct CommonOptions {
  std::string type;
  std::string file;
  std::uint64_t budget_nodes = SearchBudget::kDefaultMaxNodes;
  std::string format = "text";
  bool full = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool use_json(const CommonOptions& o) { return o.format == "json"; }

SearchBudget budget_of(const CommonOptions& o) {
  if (o.budget_nodes == 0) throw UsageError("--budget-nodes must be at least 1");
  return SearchBudget::nodes(o.budget_nodes);
}

Presentation load_presentation(const CommonOptions& o) {
  if (!o.type.empty() && !o.file.empty())
    throw UsageError("choose exactly one of --type and --presentation-file");
  if (!o.type.empty()) return catalog_lookup(o.type);
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw UsageError("cannot open presentation file: " + o.file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_presentation(text, o.file);
  }
  throw UsageError("a presentation is required: pass --type or --presentation-file");
}

json presentation_source(const CommonOptions& o) {
  if (!o.type.empty()) return json{{"type", o.type}};
  return json{{"file", o.file}};
}

void emit(const CommonOptions& o, const json& doc, const std::string& text) {
  if (use_json(o))
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Yes: return kExitYes;
    case Verdict::No: return kExitNo;
    default: return kExitInconclusive;
  }
}

json inconclusive_json(const CommonOptions& o, const BudgetExceeded& b) {
  return json_report::budget(b, o.budget_nodes);
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw UsageError("--side must be left or right");
}

// ---- subcommand handlers ----

int run_class(const CommonOptions& o, const std::string& word_text) {
  RewriteEngine eng(load_presentation(o));
  const auto& p = eng.presentation();
  const auto cls = eng.equivalence_class(p.word_from_string(word_text), budget_of(o));
  json doc{{"command", "class"}, {"presentation", presentation_source(o)}};
  if (!cls.ok()) {
    doc["budget"] = inconclusive_json(o, cls.budget());
    emit(o, doc, "inconclusive: budget exhausted after " +
                     std::to_string(cls.budget().nodes_visited) + " nodes\n");
    return kExitInconclusive;
  }
  doc.update(json_report::equiv_class(p, **cls, o.full, kMemberListLimit));
  std::string text = "class of " + word_text + ": size " + std::to_string((*cls)->size()) +
                     ", canonical " + p.word_to_string((*cls)->canonical()) + "\n";
  emit(o, doc, text);
  return kExitYes;
}

int run_equiv(const CommonOptions& o, const std::string& u, const std::string& v) {
  RewriteEngine eng(load_presentation(o));
  const auto& p = eng.presentation();
  const Verdict verdict = eng.are_equivalent(p.word_from_string(u), p.word_from_string(v),
                                             budget_of(o));
  json doc{{"command", "equiv"},
           {"presentation", presentation_source(o)},
           {"u", u},
           {"v", v},
           {"verdict", to_string(verdict)}};
  if (verdict == Verdict::Inconclusive) doc["budget_nodes"] = o.budget_nodes;
  emit(o, doc, std::string(to_string(verdict)) + "\n");
  return verdict_exit(verdict);
}

int run_derive(const CommonOptions& o, const std::string& u, const std::string& v) {
  RewriteEngine eng(load_presentation(o));
  const auto& p = eng.presentation();
  const auto d = eng.derivation(p.word_from_string(u), p.word_from_string(v), budget_of(o));
  json doc{{"command", "derive"},
           {"presentation", presentation_source(o)},
           {"u", u},
           {"v", v}};
  if (!d.ok()) {
    doc["budget"] = inconclusive_json(o, d.budget());
    emit(o, doc, "inconclusive\n");
    return kExitInconclusive;
  }
  if (!d->has_value()) {
    doc["found"] = false;
    emit(o, doc, "not equivalent: no derivation exists\n");
    return kExitNo;
  }
  doc["found"] = true;
  doc["replayed"] = eng.replay(**d);
  doc["derivation"] = json_report::derivation(p, **d);
  std::string text = "derivation in " + std::to_string((*d)->steps.size()) + " steps:";
  for (const Word& w : (*d)->words) text += " " + p.word_to_string(w);
  emit(o, doc, text + "\n");
  return kExitYes;
}

int run_divides(const CommonOptions& o, const std::string& u, const std::string& w,
                const std::string& side_text) {
  RewriteEngine eng(load_presentation(o));
  const auto& p = eng.presentation();
  const Side side = parse_side(side_text);
  const Word wu = p.word_from_string(u), ww = p.word_from_string(w);
  const Verdict verdict = divides(eng, wu, ww, side, budget_of(o));
  json doc{{"command", "divides"},
           {"presentation", presentation_source(o)},
           {"u", u},
           {"w", w},
           {"side", side_text},
           {"verdict", to_string(verdict)}};
  if (verdict == Verdict::Yes) {
    const auto q = quotients(eng, wu, ww, side, budget_of(o));
    if (q.ok() && !q->empty()) doc["quotients"] = json_report::words(p, *q);
  }
  if (verdict == Verdict::Inconclusive) doc["budget_nodes"] = o.budget_nodes;
  emit(o, doc, std::string(to_string(verdict)) + "\n");
  return verdict_exit(verdict);
}

int run_common_multiples(const CommonOptions& o, const std::string& u, const std::string& v,
                         const std::string& side_text, std::size_t length) {
  RewriteEngine eng(load_presentation(o));
  const auto& p = eng.presentation();
  const auto ms = common_multiples(eng, p.word_from_string(u), p.word_from_string(v),
                                   parse_side(side_text), length, budget_of(o));
  json doc{{"command", "common-multiples"},
           {"presentation", presentation_source(o)},
           {"u", u},
           {"v", v},
           {"side", side_text},
           {"length", length}};
  if (!ms.ok()) {
    doc["budget"] = inconclusive_json(o, ms.budget());
    emit(o, doc, "inconclusive\n");
    return kExitInconclusive;
  }
  doc["multiples"] = json_report::words(p, ms->multiples);
  doc["count"] = ms->multiples.size();
  std::string text = std::to_string(ms->multiples.size()) + " common multiple class(es):";
  for (const Word& m : ms->multiples) text += " " + p.word_to_string(m);
  emit(o, doc, text + "\n");
  return kExitYes;
}

int run_lcm(const CommonOptions& o, const std::string& u, const std::string& v,
            const std::string& side_text, std::size_t max_length) {
  RewriteEngine eng(load_presentation(o));
  const auto& p = eng.presentation();
  const auto cert = lcm_certificate(eng, p.word_from_string(u), p.word_from_string(v),
                                    parse_side(side_text), max_length, budget_of(o));
  json doc{{"command", "lcm"},
           {"presentation", presentation_source(o)},
           {"u", u},
           {"v", v},
           {"side", side_text},
           {"max_length", max_length},
           {"scope", "monoid"}};
  if (const auto* found = std::get_if<LcmFound>(&cert)) {
    doc["result"] = "found";
    doc["lcm"] = p.word_to_string(found->lcm);
    emit(o, doc, "lcm found: " + p.word_to_string(found->lcm) + "\n");
    return kExitYes;
  }
  if (const auto* no = std::get_if<NoLcmUpTo>(&cert)) {
    doc["result"] = "no-lcm-up-to";
    doc["scanned_length"] = no->max_length;
    doc["minimal"] = p.word_to_string(no->minimal);
    doc["witness"] = p.word_to_string(no->witness);
    emit(o, doc, "no lcm in the monoid up to length " + std::to_string(no->max_length) +
                     ": minimal " + p.word_to_string(no->minimal) + " does not divide " +
                     p.word_to_string(no->witness) + "\n");
    return kExitNo;
  }
  doc["result"] = "inconclusive";
  doc["budget"] = inconclusive_json(o, std::get<BudgetExceeded>(cert));
  emit(o, doc, "inconclusive: " + std::get<BudgetExceeded>(cert).context + "\n");
  return kExitInconclusive;
}

int run_fundamental(const CommonOptions& o, const std::string& word_text, bool split) {
  RewriteEngine eng(load_presentation(o));
  const auto& p = eng.presentation();
  const Word delta = p.word_from_string(word_text);
  json doc{{"command", "fundamental"},
           {"presentation", presentation_source(o)},
           {"word", word_text},
           {"split_witnesses", split}};
  if (split) {
    // exploratory, non-standard: left and right witnesses may differ
    const auto sigmas = fundamental_sigmas_split_witnesses(eng, delta, budget_of(o));
    if (!sigmas.ok()) {
      doc["budget"] = inconclusive_json(o, sigmas.budget());
      emit(o, doc, "inconclusive\n");
      return kExitInconclusive;
    }
    doc["fundamental"] = !sigmas->empty();
    doc["sigmas"] = json_report::sigmas(p, *sigmas);
    emit(o, doc, sigmas->empty() ? "not fundamental (split-witness variant)\n"
                                 : "fundamental (split-witness variant)\n");
    return sigmas->empty() ? kExitNo : kExitYes;
  }
  const auto fw = fundamental_witnesses(eng, delta, budget_of(o));
  if (!fw.ok()) {
    doc["budget"] = inconclusive_json(o, fw.budget());
    emit(o, doc, "inconclusive\n");
    return kExitInconclusive;
  }
  doc["fundamental"] = !fw->empty();
  json ws = json::array();
  for (const auto& w : *fw) ws.push_back(json_report::fundamental_witness(p, w));
  doc["witnesses"] = ws;
  if (fw->empty()) {
    emit(o, doc, "not fundamental\n");
    return kExitNo;
  }
  std::string text = "fundamental with sigma " + fw->front().sigma.to_string(p) + "\n";
  emit(o, doc, text);
  return kExitYes;
}

int run_quasi_central(const CommonOptions& o, const std::string& word_text) {
  RewriteEngine eng(load_presentation(o));
  const auto& p = eng.presentation();
  const auto qc = quasi_central_sigmas(eng, p.word_from_string(word_text), budget_of(o));
  json doc{{"command", "quasi-central"},
           {"presentation", presentation_source(o)},
           {"word", word_text}};
  if (!qc.ok()) {
    doc["budget"] = inconclusive_json(o, qc.budget());
    emit(o, doc, "inconclusive\n");
    return kExitInconclusive;
  }
  doc["quasi_central"] = !qc->empty();
  doc["sigmas"] = json_report::sigmas(p, *qc);
  emit(o, doc, qc->empty() ? "not quasi-central\n"
                           : "quasi-central with " + std::to_string(qc->size()) + " sigma(s)\n");
  return qc->empty() ? kExitNo : kExitYes;
}

int run_theorem3(const CommonOptions& o) {
  if (o.type.empty()) throw UsageError("theorem3 requires --type");
  RewriteEngine eng(load_presentation(o));
  const auto tv = verify_fundamental_table(eng, o.type, budget_of(o));
  json doc{{"command", "theorem3"}, {"presentation", presentation_source(o)}};
  if (!tv.ok()) {
    doc["budget"] = inconclusive_json(o, tv.budget());
    emit(o, doc, "inconclusive\n");
    return kExitInconclusive;
  }
  doc.update(json_report::table_verification(eng.presentation(), *tv));
  std::string text;
  for (const auto& e : tv->elements)
    text += e.row.delta + ": " +
            ((e.fundamental && e.sigma_matches && e.equivalents_ok) ? "verified" : "FAILED") +
            " (class size " + std::to_string(e.class_size) + ")\n";
  text += tv->all_verified ? "all verified\n" : "verification FAILED\n";
  emit(o, doc, text);
  return tv->all_verified ? kExitYes : kExitNo;
}

int run_cancel_scan(const CommonOptions& o, std::size_t max_length) {
  RewriteEngine eng(load_presentation(o));
  const auto rep = cancellation_scan(eng, max_length, budget_of(o));
  json doc{{"command", "cancel-scan"}, {"presentation", presentation_source(o)}};
  if (!rep.ok()) {
    doc["budget"] = inconclusive_json(o, rep.budget());
    emit(o, doc, "inconclusive\n");
    return kExitInconclusive;
  }
  doc.update(json_report::cancellation(eng.presentation(), *rep));
  emit(o, doc,
       "scanned quotient lengths 1.." + std::to_string(max_length) + ": " +
           std::to_string(rep->violations.size()) + " violation(s)\n");
  return rep->violations.empty() ? kExitYes : kExitNo;
}

int run_morphism(const CommonOptions& o, const std::string& from, const std::string& to,
                 const std::string& map_text) {
  CommonOptions from_opts = o;
  from_opts.type = from;
  from_opts.file.clear();
  CommonOptions to_opts = o;
  to_opts.type = to;
  to_opts.file.clear();
  RewriteEngine src(load_presentation(from_opts));
  RewriteEngine dst(load_presentation(to_opts));
  const auto& ps = src.presentation();
  const auto& pd = dst.presentation();

  // --map a=b,b=a,c=c : image word per source letter
  std::vector<Word> images(ps.alphabet_size());
  std::vector<bool> seen(ps.alphabet_size(), false);
  std::stringstream ss(map_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--map entries look like a=b");
    const Word src_letter = ps.word_from_string(item.substr(0, eq));
    if (src_letter.length() != 1) throw UsageError("--map keys must be single letters");
    images[src_letter[0]] = pd.word_from_string(item.substr(eq + 1));
    seen[src_letter[0]] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw UsageError("--map misses letter " + ps.alphabet_names()[i]);

  const auto m = check_morphism(src, dst, images, budget_of(o));
  json doc{{"command", "morphism"}, {"from", from}, {"to", to}, {"map", map_text}};
  if (!m.ok()) {
    doc["budget"] = inconclusive_json(o, m.budget());
    emit(o, doc, "inconclusive\n");
    return kExitInconclusive;
  }
  doc["valid"] = m->valid;
  if (m->failing_relation) {
    const auto& r = src.presentation().relations()[*m->failing_relation];
    doc["failing_relation"] = json{{"lhs", ps.word_to_string(r.lhs)},
                                   {"rhs", ps.word_to_string(r.rhs)}};
  }
  emit(o, doc, m->valid ? "valid morphism\n" : "not a morphism\n");
  return m->valid ? kExitYes : kExitNo;
}

int run_coxeter(const CommonOptions& o, unsigned max_k) {
  RewriteEngine eng(load_presentation(o));
  const auto& p = eng.presentation();
  const auto r = coxeter_power_search(eng, max_k, budget_of(o));
  json doc{{"command", "coxeter"},
           {"presentation", presentation_source(o)},
           {"max_k", max_k}};
  if (!r.ok()) {
    doc["budget"] = inconclusive_json(o, r.budget());
    emit(o, doc, "inconclusive\n");
    return kExitInconclusive;
  }
  if (!r->k) {
    doc["found"] = false;
    emit(o, doc, "no fundamental power up to k=" + std::to_string(max_k) + "\n");
    return kExitNo;
  }
  doc["found"] = true;
  doc["k"] = *r->k;
  doc["witness"] = json_report::fundamental_witness(p, *r->witness);
  emit(o, doc, "fundamental at k=" + std::to_string(*r->k) + "\n");
  return kExitYes;
}

int run_rep_verify(const CommonOptions& o, const std::string& branch_text) {
  if (o.type.empty()) throw UsageError("rep-verify requires --type");
  const RepType type = rep_type_from_string(o.type);
  std::vector<RingBranch> branches;
  if (type == RepType::H_ii) {
    if (branch_text == "i") branches = {RingBranch::I};
    else if (branch_text == "ii") branches = {RingBranch::II};
    else if (branch_text.empty()) branches = {RingBranch::I, RingBranch::II};
    else throw UsageError("--branch must be i or ii");
  } else {
    if (!branch_text.empty()) throw UsageError("--branch only applies to H_ii");
    branches = {RingBranch::Default};
  }

  const Presentation pres = catalog_lookup(o.type);
  json runs = json::array();
  bool all_hold = true;
  std::string text;
  for (RingBranch b : branches) {
    const auto rep = build_representation(type, b);
    const auto report = verify_representation(rep);
    json run = json_report::representation_report(report, pres);
    run["ring"] = rep.ring->description();
    if (const auto w = nonabelian_witness(rep)) {
      run["nonabelian"] = true;
      run["commutator"] = json{{"x", w->x}, {"y", w->y},
                               {"matrix", json_report::matrix(w->commutator)}};
    } else {
      run["nonabelian"] = false;
    }
    runs.push_back(std::move(run));
    all_hold = all_hold && report.all_hold;
    text += o.type + (branches.size() > 1 ? " branch " + to_string(b) : "") + ": " +
            std::to_string(report.relation_count - report.failures.size()) + "/" +
            std::to_string(report.relation_count) + " relations hold\n";
  }
  json doc{{"command", "rep-verify"},
           {"presentation", presentation_source(o)},
           {"runs", runs},
           {"all_hold", all_hold}};
  emit(o, doc, text);
  return all_hold ? kExitYes : kExitNo;
}

int run_omega_check(const CommonOptions& o, const std::string& type, bool all) {
  std::vector<std::string> types;
  if (all) {
    for (const auto& row : bifurcation_table()) types.push_back(row.type);
  } else if (!type.empty()) {
    types.push_back(type);
  } else {
    throw UsageError("omega-check needs --type <X> or --all");
  }
  json rows = json::array();
  bool all_hold = true;
  std::string text;
  for (const auto& t : types) {
    const auto v = check_bifurcation_row(t);
    rows.push_back(json_report::omega_verdict(v));
    all_hold = all_hold && v.holds;
    text += t + ": " + (v.holds ? "holds (constant " + v.constant.get_str() + ")" : "FAILS") +
            "\n";
  }
  json doc{{"command", "omega-check"}, {"rows", rows}, {"all_hold", all_hold}};
  emit(o, doc, text);
  return all_hold ? kExitYes : kExitNo;
}

int run_catalog(const CommonOptions& o) {
  json types = json::array();
  std::string text;
  for (const auto& t : catalog_types()) {
    const auto p = catalog_lookup(t);
    const auto n = normalize(p);
    types.push_back(json{{"name", t},
                         {"letters", p.alphabet_size()},
                         {"relations", p.relations().size()},
                         {"classes", n.class_count()},
                         {"normalized_relations", n.relations().size()}});
    text += t + ": " + std::to_string(p.relations().size()) + " relations, " +
            std::to_string(n.class_count()) + " letter class(es)\n";
  }
  json doc{{"command", "catalog"}, {"types", types}};
  emit(o, doc, text);
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact word-problem and structure computations for positively homogeneously "
               "presented monoids"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions opts;
  app.add_option("--type", opts.type, "built-in presentation label (see `catalog`)");
  app.add_option("--presentation-file", opts.file, "presentation file path");
  app.add_option("--budget-nodes", opts.budget_nodes,
                 "search budget in visited words (default 50000000)");
  app.add_option("--format", opts.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--full", opts.full, "list all class members regardless of size");

  std::string word, u, v, w, side = "left", map_text, branch, omega_type;
  std::size_t length = 0, max_length = 0;
  unsigned max_k = 6;
  bool split = false, omega_all = false;

  auto* c_class = app.add_subcommand("class", "equivalence class of a word");
  c_class->add_option("--word", word)->required();

  auto* c_equiv = app.add_subcommand("equiv", "decide equivalence of two words");
  c_equiv->add_option("--u", u)->required();
  c_equiv->add_option("--v", v)->required();

  auto* c_derive = app.add_subcommand("derive", "replayable derivation between two words");
  c_derive->add_option("--u", u)->required();
  c_derive->add_option("--v", v)->required();

  auto* c_div = app.add_subcommand("divides", "does u divide w on the given side");
  c_div->add_option("--u", u)->required();
  c_div->add_option("--w", w)->required();
  c_div->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));

  auto* c_cm = app.add_subcommand("common-multiples", "common multiple classes at a length");
  c_cm->add_option("--u", u)->required();
  c_cm->add_option("--v", v)->required();
  c_cm->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  c_cm->add_option("--length", length)->required();

  auto* c_lcm = app.add_subcommand("lcm", "least-common-multiple certificate up to a length");
  c_lcm->add_option("--u", u)->required();
  c_lcm->add_option("--v", v)->required();
  c_lcm->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  c_lcm->add_option("--max-length", max_length)->required();

  auto* c_fund = app.add_subcommand("fundamental", "is the word a fundamental element");
  c_fund->add_option("--word", word)->required();
  c_fund->add_flag("--split-witnesses", split,
                   "non-standard variant with independent left/right witnesses");

  auto* c_qc = app.add_subcommand("quasi-central", "is the word quasi-central");
  c_qc->add_option("--word", word)->required();

  app.add_subcommand("theorem3", "verify the catalog fundamental elements of a type");

  auto* c_scan = app.add_subcommand("cancel-scan", "bounded cancellation-violation scan");
  c_scan->add_option("--max-length", max_length)->required();

  auto* c_mor = app.add_subcommand("morphism", "check a generator map between presentations");
  std::string from_type, to_type;
  c_mor->add_option("--from", from_type)->required();
  c_mor->add_option("--to", to_type)->required();
  c_mor->add_option("--map", map_text)->required();

  auto* c_cox = app.add_subcommand("coxeter", "smallest fundamental power of cba");
  c_cox->add_option("--max-k", max_k);

  auto* c_rep = app.add_subcommand("rep-verify", "verify the 2x2 matrix representation");
  c_rep->add_option("--branch", branch, "root branch for H_ii: i or ii");

  auto* c_omega = app.add_subcommand("omega-check", "verify bifurcation resultant rows");
  c_omega->add_option("--type", omega_type, "divisor type");
  c_omega->add_flag("--all", omega_all, "check all seventeen rows");

  app.add_subcommand("catalog", "list the built-in presentations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_class->parsed()) return run_class(opts, word);
    if (c_equiv->parsed()) return run_equiv(opts, u, v);
    if (c_derive->parsed()) return run_derive(opts, u, v);
    if (c_div->parsed()) return run_divides(opts, u, w, side);
    if (c_cm->parsed()) return run_common_multiples(opts, u, v, side, length);
    if (c_lcm->parsed()) return run_lcm(opts, u, v, side, max_length);
    if (c_fund->parsed()) return run_fundamental(opts, word, split);
    if (c_qc->parsed()) return run_quasi_central(opts, word);
    if (app.get_subcommand("theorem3")->parsed()) return run_theorem3(opts);
    if (c_scan->parsed()) return run_cancel_scan(opts, max_length);
    if (c_mor->parsed()) return run_morphism(opts, from_type, to_type, map_text);
    if (c_cox->parsed()) return run_coxeter(opts, max_k);
    if (c_rep->parsed()) return run_rep_verify(opts, branch);
    if (c_omega->parsed()) return run_omega_check(opts, omega_type, omega_all);
    if (app.get_subcommand("catalog")->parsed()) return run_catalog(opts);
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "presentation error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
