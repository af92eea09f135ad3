#include "bckcode/report.hpp"

namespace bck {

using nlohmann::json;

json to_json(const CayleyTable& table) {
  json rows = json::array();
  for (Element x = 0; x < table.size(); ++x) {
    auto row = table.row(x);
    rows.push_back(std::vector<Element>(row.begin(), row.end()));
  }
  return rows;
}

json to_json(const AxiomReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"axiom", axiom_id(v.axiom)},
                          {"statement", axiom_statement(v.axiom)},
                          {"witness", v.witness}});
  }
  return {{"verdict", report.verdict}, {"violations", violations}};
}

json to_json(const ValidationReport& report) {
  json failures = json::array();
  for (const RuleFailure& f : report.failures) {
    json entry = {{"rule", rule_id(f.rule)},
                  {"description", rule_description(f.rule)},
                  {"detail", f.detail},
                  {"word", nullptr},
                  {"position", nullptr}};
    if (f.word) entry["word"] = *f.word;
    if (f.position) entry["position"] = *f.position;
    failures.push_back(std::move(entry));
  }
  return {{"admissible", report.admissible}, {"failures", failures}};
}

json to_json(const std::vector<DominanceGap>& gaps) {
  json out = json::array();
  for (const DominanceGap& g : gaps) out.push_back({{"word", g.word}, {"position", g.position}});
  return out;
}

json to_json(const BlockCode& code) {
  json words = json::array();
  json symbols = json::array();
  Symbol max_symbol = 0;
  for (const Codeword& w : code.words()) {
    words.push_back(to_string(w));
    symbols.push_back(w.symbols());
    for (Symbol s : w.symbols()) max_symbol = std::max(max_symbol, s);
  }
  return {{"n", code.alphabet().size()},
          {"q", code.length()},
          {"m", code.size()},
          {"max_symbol", max_symbol},
          {"words", words},
          {"symbols", symbols}};
}

json to_json(const ConstructionParams& params) {
  return {{"case", case_name(params.construction_case)},
          {"r", params.size},
          {"c", params.chain_block},
          {"m", params.words}};
}

json to_json(const ElementSubset& subset, const IdealReport& report) {
  json witnesses = json::array();
  for (const IdealWitness& w : report.witnesses) {
    witnesses.push_back(
        {{"clause", clause_id(w.clause)}, {"x", w.x}, {"y", w.y}, {"product", w.product}});
  }
  return {{"subset", subset.members()},
          {"contains_zero", report.contains_zero},
          {"right_ideal", report.right_ideal},
          {"subalgebra", report.subalgebra},
          {"closed_ideal", report.closed_ideal},
          {"witnesses", witnesses}};
}

json to_json(const OrderRelation& order) {
  json leq = json::array();
  for (Element x = 0; x < order.size(); ++x) {
    json row = json::array();
    for (Element y = 0; y < order.size(); ++y) row.push_back(order.leq(x, y));
    leq.push_back(std::move(row));
  }
  return {{"leq", leq},
          {"reflexive", order.reflexive()},
          {"antisymmetric", order.antisymmetric()},
          {"transitive", order.transitive()}};
}

}  // namespace bck
