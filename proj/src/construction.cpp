#include "bckcode/construction.hpp"

#include <algorithm>
#include <string>

namespace bck {

namespace {

std::string describe(const ValidationReport& report) {
  std::string out;
  for (const RuleFailure& f : report.failures) {
    if (!out.empty()) out += "; ";
    out += rule_id(f.rule);
    if (f.word) out += " word " + std::to_string(*f.word);
    if (f.position) out += " position " + std::to_string(*f.position);
    out += ": " + f.detail;
  }
  return out;
}

std::string describe(const AxiomReport& report) {
  std::string out = "table fails the BCK axioms";
  if (!report.violations.empty()) {
    const Violation& v = report.violations.front();
    out += " (first: " + std::string(axiom_id(v.axiom)) + " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(v.witness[i]);
    }
    out += "), " + std::to_string(report.violations.size()) + " violation(s) in total)";
  }
  return out;
}

}  // namespace

std::string_view case_name(ConstructionCase c) {
  return c == ConstructionCase::kShortWords ? "q<n" : "q>=n";
}

ConstructionParams dimension(const BlockCode& code) {
  const ValidationReport report = validate_constructible(code);
  if (!report.admissible) {
    throw Error(ErrorKind::kInadmissibleCode, "code cannot be constructed: " + describe(report));
  }
  const std::size_t n = code.alphabet().size();
  const std::size_t q = code.length();
  const std::size_t m = code.size();
  if (q < n) return {ConstructionCase::kShortWords, n - 1 + m, n - 1, m};
  return {ConstructionCase::kLongWords, m + q + 1, q + 1, m};
}

AssociatedMatrix build_matrix(const BlockCode& code) {
  const ConstructionParams params = dimension(code);
  const std::size_t r = params.size;
  const std::size_t q = code.length();
  std::vector<Element> entries(r * r, kZero);
  auto at = [&](std::size_t s, std::size_t t) -> Element& { return entries[s * r + t]; };

  for (std::size_t s = 1; s < r; ++s) at(s, 0) = static_cast<Element>(s);
  for (std::size_t s = 1; s < params.chain_block; ++s)
    for (std::size_t t = 1; t < s; ++t) at(s, t) = 1;
  for (std::size_t i = 1; i <= params.words; ++i) {
    const std::size_t s = params.row_of_word(i);
    const Codeword& w = code.word(i);
    // Row fit guarantees q < s, so the word sits strictly below the diagonal.
    for (std::size_t t = 1; t <= q; ++t) at(s, t) = w.at(t);
    for (std::size_t t = q + 1; t < s; ++t) at(s, t) = 1;
  }
  return AssociatedMatrix(CayleyTable(r, std::move(entries)), params, code);
}

ConstructionError::ConstructionError(AxiomReport report)
    : Error(ErrorKind::kNotBck, describe(report)), report_(std::move(report)) {}

CayleyTable build_algebra(const BlockCode& code) {
  AssociatedMatrix matrix = build_matrix(code);
  AxiomReport report = check_bck(matrix.table());
  if (!report.verdict) throw ConstructionError(std::move(report));
  return matrix.table();
}

EvaluationMap::EvaluationMap(std::vector<Element> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorKind::kInvalidArgument, "evaluation map needs at least one point");
}

EvaluationMap EvaluationMap::first_elements(std::size_t q) {
  std::vector<Element> points(q);
  for (std::size_t i = 0; i < q; ++i) points[i] = static_cast<Element>(i + 1);
  return EvaluationMap(std::move(points));
}

Codeword cut_codeword(const CayleyTable& t, Element s, const EvaluationMap& e) {
  if (!t.contains(s)) {
    throw Error(ErrorKind::kOutOfRange, "element " + std::to_string(s) + " is not in a size-" +
                                            std::to_string(t.size()) + " table");
  }
  std::vector<Symbol> symbols;
  symbols.reserve(e.size());
  for (Element p : e.points()) {
    if (!t.contains(p)) {
      throw Error(ErrorKind::kOutOfRange, "evaluation point " + std::to_string(p) +
                                              " is not in a size-" + std::to_string(t.size()) +
                                              " table");
    }
    symbols.push_back(t(s, p));
  }
  return Codeword(std::move(symbols));
}

BlockCode generate_code(const CayleyTable& t, const EvaluationMap& e) {
  std::vector<Codeword> words;
  for (Element s = 0; s < t.size(); ++s) words.push_back(cut_codeword(t, s, e));
  std::sort(words.begin(), words.end(),
            [](const Codeword& a, const Codeword& b) { return lex_compare(a, b) < 0; });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return BlockCode(Alphabet(std::max<std::size_t>(t.size(), 2)), e.size(), std::move(words));
}

RoundtripReport roundtrip_check(const BlockCode& code, const std::optional<EvaluationMap>& points) {
  AssociatedMatrix matrix = build_matrix(code);
  const EvaluationMap e = points.value_or(EvaluationMap::first_elements(code.length()));
  BlockCode generated = generate_code(matrix.table(), e);
  std::vector<Codeword> missing;
  for (const Codeword& w : code.words())
    if (!generated.contains(w)) missing.push_back(w);
  return {matrix.params(), matrix.table(), check_bck(matrix.table()), std::move(generated),
          std::move(missing)};
}

}  // namespace bck
