#include "phmon/json_report.hpp"

namespace phmon::json_report {

json word(const Presentation& p, const Word& w) { return p.word_to_string(w); }

json words(const Presentation& p, const std::vector<Word>& ws) {
  json out = json::array();
  for (const Word& w : ws) out.push_back(word(p, w));
  return out;
}

json sigma(const Presentation& p, const PermutationSigma& s) {
  json map = json::object();
  for (auto [src, img] : s.mapping(p)) map[p.class_name(src)] = p.class_name(img);
  return json{{"identity", s.is_identity()}, {"map", map}, {"text", s.to_string(p)}};
}

json sigmas(const Presentation& p, const std::vector<PermutationSigma>& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back(sigma(p, x));
  return out;
}

json budget(const BudgetExceeded& b, std::uint64_t budget_nodes) {
  return json{{"budget_nodes", budget_nodes},
              {"context", b.context},
              {"nodes_visited", b.nodes_visited}};
}

json equiv_class(const Presentation& p, const EquivClass& c, bool full,
                 std::size_t member_limit) {
  json out{{"seed", word(p, c.seed())},
           {"canonical", word(p, c.canonical())},
           {"length", c.word_length()},
           {"size", c.size()}};
  if (full || c.size() <= member_limit) {
    json members = json::array();
    for (std::size_t i = 0; i < c.size(); ++i) members.push_back(word(p, c.member(i)));
    out["members"] = std::move(members);
    out["members_elided"] = false;
  } else {
    out["members_elided"] = true;
  }
  return out;
}

json derivation(const Presentation& p, const Derivation& d) {
  json steps = json::array();
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const auto& s = d.steps[i];
    steps.push_back(json{{"from", word(p, d.words[i])},
                         {"to", word(p, d.words[i + 1])},
                         {"position", s.position},
                         {"relation", s.relation},
                         {"forward", s.forward}});
  }
  return json{{"length", d.steps.size()}, {"words", words(p, d.words)}, {"steps", steps}};
}

json fundamental_witness(const Presentation& p, const FundamentalWitness& w) {
  json per = json::object();
  for (const auto& [letter, factor] : w.per_generator)
    per[p.class_name(letter)] = word(p, factor);
  return json{{"delta", word(p, w.delta)}, {"sigma", sigma(p, w.sigma)},
              {"per_generator", per}};
}

json cancellation(const Presentation& p, const CancellationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back(json{{"letter", p.class_name(v.letter)},
                              {"side", to_string(v.side)},
                              {"multiple", word(p, v.multiple_canonical)},
                              {"x", word(p, v.quotient_x)},
                              {"y", word(p, v.quotient_y)}});
  return json{{"presentation_name", r.presentation},
              {"max_length", r.max_length},
              {"complete", r.complete},
              {"violations", violations},
              {"violation_count", r.violations.size()}};
}

json table_verification(const Presentation& p, const TableVerification& tv) {
  json elements = json::array();
  for (const auto& e : tv.elements) {
    json el{{"delta", e.row.delta},
            {"sigma_expected", e.row.sigma_images},
            {"fundamental", e.fundamental},
            {"sigma_matches", e.sigma_matches},
            {"equivalents_ok", e.equivalents_ok},
            {"class_size", e.class_size},
            {"verified", e.fundamental && e.sigma_matches && e.equivalents_ok}};
    if (e.witness) el["witness"] = fundamental_witness(p, *e.witness);
    el["sigmas_found"] = sigmas(p, e.sigmas_found);
    elements.push_back(std::move(el));
  }
  return json{{"type", tv.type}, {"all_verified", tv.all_verified}, {"elements", elements}};
}

json matrix(const Matrix2& m) {
  return json::array({json::array({m.at(0, 0).to_string(), m.at(0, 1).to_string()}),
                      json::array({m.at(1, 0).to_string(), m.at(1, 1).to_string()})});
}

json representation_report(const RepresentationReport& r, const Presentation& p) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back(json{{"lhs", p.word_to_string(f.relation.lhs)},
                            {"rhs", p.word_to_string(f.relation.rhs)},
                            {"lhs_value", f.lhs_value},
                            {"rhs_value", f.rhs_value}});
  return json{{"type", to_string(r.type)},       {"branch", to_string(r.branch)},
              {"all_hold", r.all_hold},          {"relations_checked", r.relation_count},
              {"all_invertible", r.all_invertible}, {"failures", failures}};
}

json omega_verdict(const OmegaVerdict& v) {
  json out{{"type", v.type},
           {"epsilon", v.epsilon},
           {"weights_ok", v.weights_ok},
           {"holds", v.holds},
           {"computed", to_string(v.computed)},
           {"expected", to_string(v.expected)}};
  if (v.holds)
    out["constant"] = v.constant.get_str();
  else
    out["residual"] = to_string(v.residual);
  return out;
}

}  // namespace phmon::json_report
