#include "bckcode/cli.hpp"

#include <array>
#include <charconv>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bckcode/axioms.hpp"
#include "bckcode/code.hpp"
#include "bckcode/construction.hpp"
#include "bckcode/ideals.hpp"
#include "bckcode/io.hpp"
#include "bckcode/isomorphism.hpp"
#include "bckcode/report.hpp"

namespace bck::cli {

namespace {

using nlohmann::json;

enum class Format { kText, kJson };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string load(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  try {
    return read_file(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<Element> parse_index_list(const std::string& text, std::string_view flag) {
  std::vector<Element> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) throw UsageError(std::string(flag) + ": empty entry in '" + text + "'");
    const auto last = item.find_last_not_of(" \t");
    item = item.substr(first, last - first + 1);
    Element value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError(std::string(flag) + ": '" + item + "' is not an element index");
    }
    values.push_back(value);
  }
  if (values.empty()) throw UsageError(std::string(flag) + " needs at least one element index");
  return values;
}

std::string tuple_text(const std::vector<Element>& xs, const std::vector<std::string>& labels) {
  std::string idx = "(";
  std::string named = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) {
      idx += ",";
      named += ",";
    }
    idx += std::to_string(xs[i]);
    named += xs[i] < labels.size() ? labels[xs[i]] : "?";
  }
  return idx + ") = " + named + ")";
}

void print_axiom_report(std::ostream& out, const AxiomReport& report, const std::vector<std::string>& labels) {
  for (const Violation& v : report.violations) {
    out << "  " << axiom_id(v.axiom) << "  " << axiom_statement(v.axiom) << "  fails at "
        << tuple_text(v.witness, labels) << '\n';
  }
}

void print_validation(std::ostream& out, const ValidationReport& report) {
  for (const RuleFailure& f : report.failures) {
    out << "  " << rule_id(f.rule);
    if (f.word) out << " word " << *f.word;
    if (f.position) out << " position " << *f.position;
    out << ": " << f.detail << "  (" << rule_description(f.rule) << ")\n";
  }
}

void print_gaps(std::ostream& out, const std::vector<DominanceGap>& gaps) {
  for (const DominanceGap& g : gaps) {
    out << "warning: word " << g.word << " position " << g.position
        << " is smaller than in word " << g.word - 1
        << "; the constructed table may fail BCI-1\n";
  }
}

std::string words_line(const BlockCode& code) {
  std::string line;
  for (const Codeword& w : code.words()) line += (line.empty() ? "" : " ") + to_string(w);
  return line;
}

std::string points_text(const EvaluationMap& e) {
  std::string s;
  for (Element p : e.points()) s += (s.empty() ? "" : ",") + std::to_string(p);
  return s;
}

// Shared state of one invocation.
struct Context {
  std::ostream& out;
  std::ostream& err;
  Format format = Format::kText;
  json doc;

  bool text() const { return format == Format::kText; }

  int finish(int code) {
    if (format == Format::kJson) {
      doc["exit_code"] = code;
      out << doc.dump(2) << '\n';
    }
    return code;
  }

  int fail_usage(const std::string& message) {
    err << "error: " << message << '\n';
    doc["error"] = message;
    return finish(kUsage);
  }
};

// ---------------------------------------------------------------- validate

int cmd_validate(Context& ctx, const std::string& path) {
  const BlockCode code = parse_code_file(load(path));
  const ValidationReport report = validate_admissible(code);
  const auto gaps = dominance_gaps(code);
  ctx.doc["code"] = to_json(code);
  ctx.doc["validation"] = to_json(report);
  ctx.doc["dominance_gaps"] = to_json(gaps);
  if (ctx.text()) {
    ctx.out << "code: n=" << code.alphabet().size() << " q=" << code.length() << " m=" << code.size()
            << "  [" << words_line(code) << "]\n";
    ctx.out << "admissible: " << (report.admissible ? "yes" : "no") << '\n';
    print_validation(ctx.out, report);
    print_gaps(ctx.out, gaps);
  }
  return ctx.finish(report.admissible ? kHolds : kFails);
}

// ------------------------------------------------------------------- build

int cmd_build(Context& ctx, const std::string& path, const std::string& emit, bool force) {
  const BlockCode code = parse_code_file(load(path));
  const ValidationReport validation = validate_admissible(code);
  ctx.doc["validation"] = to_json(validation);
  if (!validation.admissible) {
    ctx.err << "code is not admissible:\n";
    print_validation(ctx.err, validation);
    if (!force || !validate_constructible(code).admissible) return ctx.finish(kFails);
    ctx.err << "continuing because of --force\n";
  }

  const AssociatedMatrix matrix = build_matrix(code);
  const AxiomReport bck = check_bck(matrix.table());
  ctx.doc["params"] = to_json(matrix.params());
  ctx.doc["bck"] = to_json(bck);
  if (!bck.verdict) {
    ctx.err << "constructed table fails the BCK axioms:\n";
    print_axiom_report(ctx.err, bck, default_labels(matrix.table().size()));
  }

  if (bck.verdict || force) {
    const auto labels = default_labels(matrix.table().size());
    ctx.doc["matrix"] = to_json(matrix.table());
    if (emit == "table") ctx.doc["labels"] = labels;
    if (ctx.text()) {
      if (emit == "table") {
        ctx.out << render_labeled_table(matrix.table(), labels);
      } else {
        ctx.out << serialize_table_file(matrix.table());
      }
    }
  }
  return ctx.finish(validation.admissible && bck.verdict ? kHolds : kFails);
}

// ------------------------------------------------------------------ verify

json witness_json(const std::optional<std::vector<Element>>& w) {
  if (!w) return {{"holds", true}, {"witness", nullptr}};
  return {{"holds", false}, {"witness", *w}};
}

template <std::size_t N>
std::optional<std::vector<Element>> as_vector(const std::optional<std::array<Element, N>>& w) {
  if (!w) return std::nullopt;
  return std::vector<Element>(w->begin(), w->end());
}

int cmd_verify(Context& ctx, const std::string& path, const std::string& axioms, bool properties) {
  const TableFile file = parse_table_file(load(path));
  const CayleyTable& t = file.table;
  AxiomReport report;
  std::string title;
  if (axioms == "bci") {
    report = check_bci(t);
    title = "BCI (BCI-1..BCI-4)";
  } else if (axioms == "bck-alt") {
    report = check_bck_alt(t);
    title = "BCK, alternative axioms (ALT-1..ALT-3)";
  } else {
    report = check_bck(t);
    title = "BCK (BCI-1..BCI-4, BCK-5)";
  }
  ctx.doc["axioms"] = axioms;
  ctx.doc["size"] = t.size();
  ctx.doc["report"] = to_json(report);
  if (ctx.text()) {
    ctx.out << title << ": " << (report.verdict ? "holds" : "fails") << '\n';
    print_axiom_report(ctx.out, report, file.labels);
  }

  if (properties) {
    const auto commutative = as_vector(is_commutative(t));
    const auto implicative = as_vector(is_implicative(t));
    const auto positive = as_vector(is_positive_implicative(t));
    const OrderRelation order(t);
    ctx.doc["properties"] = {{"commutative", witness_json(commutative)},
                             {"implicative", witness_json(implicative)},
                             {"positive_implicative", witness_json(positive)},
                             {"order", to_json(order)}};
    if (ctx.text()) {
      auto line = [&](std::string_view name, const std::optional<std::vector<Element>>& w) {
        ctx.out << name << ": " << (w ? "false, fails at " + tuple_text(*w, file.labels) : "true") << '\n';
      };
      line("commutative", commutative);
      line("implicative", implicative);
      line("positive implicative", positive);
      ctx.out << "order x<=y iff x*y=0: reflexive=" << std::boolalpha << order.reflexive()
              << " antisymmetric=" << order.antisymmetric() << " transitive=" << order.transitive()
              << std::noboolalpha << '\n';
    }
  }
  return ctx.finish(report.verdict ? kHolds : kFails);
}

// ---------------------------------------------------------------- generate

int cmd_generate(Context& ctx, const std::string& path, const std::string& points_flag) {
  const TableFile file = parse_table_file(load(path));
  const EvaluationMap points(parse_index_list(points_flag, "--points"));
  for (Element p : points.points()) {
    if (!file.table.contains(p)) {
      throw UsageError("--points: element " + std::to_string(p) + " is not in a size-" +
                       std::to_string(file.table.size()) + " table");
    }
  }
  const BlockCode code = generate_code(file.table, points);
  ctx.doc["points"] = points.points();
  ctx.doc["code"] = to_json(code);
  if (ctx.text()) {
    ctx.out << "# generated at points " << points_text(points) << ": " << words_line(code) << '\n';
    ctx.out << serialize_code_file(code);
  }
  return ctx.finish(kHolds);
}

// --------------------------------------------------------------- roundtrip

int cmd_roundtrip(Context& ctx, const std::string& path, const std::string& points_flag) {
  const BlockCode code = parse_code_file(load(path));
  ctx.doc["stage_failed"] = nullptr;
  const ValidationReport validation = validate_admissible(code);
  ctx.doc["validation"] = to_json(validation);
  if (ctx.text()) ctx.out << "validate: " << (validation.admissible ? "ok" : "FAILED") << '\n';
  if (!validation.admissible) {
    if (ctx.text()) print_validation(ctx.out, validation);
    ctx.doc["stage_failed"] = "validate";
    return ctx.finish(kFails);
  }

  std::optional<EvaluationMap> points;
  if (!points_flag.empty()) points.emplace(parse_index_list(points_flag, "--points"));
  const RoundtripReport report = roundtrip_check(code, points);
  ctx.doc["params"] = to_json(report.params);
  ctx.doc["bck"] = to_json(report.bck);
  ctx.doc["generated"] = to_json(report.generated);
  json missing = json::array();
  for (const Codeword& w : report.missing) missing.push_back(to_string(w));
  ctx.doc["missing"] = missing;
  ctx.doc["contained"] = report.contained();

  if (ctx.text()) {
    ctx.out << "build: case " << case_name(report.params.construction_case) << ", r=" << report.params.size
            << ", c=" << report.params.chain_block << '\n';
    ctx.out << "verify bck: " << (report.bck.verdict ? "ok" : "FAILED") << '\n';
    print_axiom_report(ctx.out, report.bck, default_labels(report.table.size()));
    ctx.out << "generate: " << words_line(report.generated) << '\n';
    ctx.out << "containment: " << (report.contained() ? "ok" : "FAILED");
    for (const Codeword& w : report.missing) ctx.out << ' ' << to_string(w);
    ctx.out << '\n';
  }
  if (!report.bck.verdict) {
    ctx.doc["stage_failed"] = "verify";
    return ctx.finish(kFails);
  }
  if (!report.contained()) {
    ctx.doc["stage_failed"] = "containment";
    return ctx.finish(kFails);
  }
  return ctx.finish(kHolds);
}

// ------------------------------------------------------------------ ideals

void print_ideal(std::ostream& out, const ElementSubset& s, const IdealReport& report,
                 const std::vector<std::string>& labels) {
  out << "subset " << tuple_text(s.members(), labels) << '\n';
  out << "  contains zero: " << (report.contains_zero ? "yes" : "no") << '\n';
  out << "  right ideal:   " << (report.right_ideal ? "yes" : "no") << '\n';
  out << "  subalgebra:    " << (report.subalgebra ? "yes" : "no") << '\n';
  out << "  closed ideal:  " << (report.closed_ideal ? "yes" : "no") << '\n';
  for (const IdealWitness& w : report.witnesses) {
    if (w.clause == IdealClause::kContainsZero) {
      out << "  " << clause_id(w.clause) << ": 0 is missing\n";
      continue;
    }
    out << "  " << clause_id(w.clause) << ": " << labels[w.x] << " * " << labels[w.y] << " = "
        << labels[w.product] << " (" << w.x << "*" << w.y << "=" << w.product << ") is outside the subset\n";
  }
}

int cmd_ideals(Context& ctx, const std::string& path, const std::string& subset_flag, bool enumerate,
               std::optional<std::size_t> max_size, std::optional<std::size_t> candidate) {
  const int modes = (!subset_flag.empty()) + enumerate + candidate.has_value();
  if (modes != 1) throw UsageError("choose exactly one of --subset, --enumerate, --candidate");
  const TableFile file = parse_table_file(load(path));
  const CayleyTable& t = file.table;

  if (enumerate) {
    std::vector<ElementSubset> ideals;
    try {
      ideals = enumerate_closed_right_ideals(t, {max_size, 20});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kSearchRefused) throw;
      throw UsageError(std::string(e.what()) + "; pass --max-size to bound the search");
    }
    json list = json::array();
    for (const ElementSubset& s : ideals) list.push_back(s.members());
    ctx.doc["mode"] = "enumerate";
    ctx.doc["closed_right_ideals"] = list;
    if (ctx.text()) {
      ctx.out << ideals.size() << " closed right ideal(s)\n";
      for (const ElementSubset& s : ideals) ctx.out << "  " << tuple_text(s.members(), file.labels) << '\n';
    }
    return ctx.finish(kHolds);
  }

  if (candidate) {
    if (*candidate >= t.size()) {
      throw UsageError("--candidate: m=" + std::to_string(*candidate) + " must be below r=" +
                       std::to_string(t.size()));
    }
    const auto [subset, report] = ideal_candidate(t, *candidate);
    ctx.doc["mode"] = "candidate";
    ctx.doc["reading"] = "literal-index";
    ctx.doc["status"] = "unresolved-ambiguity";
    ctx.doc["result"] = to_json(subset, report);
    if (ctx.text()) {
      ctx.out << "candidate {0, 1, r-m, ..., r-1} with m=" << *candidate
              << " (literal index reading; which elements were intended is an unresolved ambiguity,"
                 " the verdict below is the table's)\n";
      print_ideal(ctx.out, subset, report, file.labels);
    }
    return ctx.finish(report.closed_ideal ? kHolds : kFails);
  }

  std::vector<Element> members = parse_index_list(subset_flag, "--subset");
  for (Element x : members) {
    if (!t.contains(x)) {
      throw UsageError("--subset: element " + std::to_string(x) + " is not in a size-" +
                       std::to_string(t.size()) + " table");
    }
  }
  const ElementSubset subset(t.size(), members);
  const IdealReport report = check_subset(t, subset);
  ctx.doc["mode"] = "subset";
  ctx.doc["result"] = to_json(subset, report);
  if (ctx.text()) print_ideal(ctx.out, subset, report, file.labels);
  return ctx.finish(report.closed_ideal ? kHolds : kFails);
}

// --------------------------------------------------------------------- iso

int cmd_iso(Context& ctx, const std::string& path_a, const std::string& path_b, std::size_t cap) {
  const TableFile a = parse_table_file(load(path_a));
  const TableFile b = parse_table_file(load(path_b));
  std::optional<std::vector<Element>> perm;
  try {
    perm = are_isomorphic(a.table, b.table, {cap});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kSearchRefused) throw;
    throw UsageError(std::string(e.what()) + "; raise --max-size to search anyway");
  }
  ctx.doc["isomorphic"] = perm.has_value();
  ctx.doc["permutation"] = perm ? json(*perm) : json(nullptr);
  if (ctx.text()) {
    if (!perm) {
      ctx.out << "not isomorphic\n";
    } else {
      ctx.out << "isomorphic via";
      for (Element x = 0; x < perm->size(); ++x) ctx.out << ' ' << x << "->" << (*perm)[x];
      ctx.out << '\n';
    }
  }
  return ctx.finish(perm ? kHolds : kFails);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build BCK-algebras from n-ary block codes and check them", "bckcode"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string file_a, file_b, emit = "matrix", axioms = "bck", points, subset;
  bool force = false, properties = false, enumerate = false;
  std::optional<std::size_t> max_size, candidate;
  std::size_t iso_cap = IsomorphismOptions{}.max_size;

  auto* validate = app.add_subcommand("validate", "Check a code file against the admissibility rules");
  validate->add_option("codefile", file_a, "Code file ('-' for stdin)")->required();
  add_format(validate);

  auto* build = app.add_subcommand("build", "Build the associated matrix / Cayley table of a code");
  build->add_option("codefile", file_a, "Code file ('-' for stdin)")->required();
  build->add_option("--emit", emit, "matrix: table file of indices; table: labeled table")
      ->check(CLI::IsMember({"matrix", "table"}));
  build->add_flag("--force", force, "Emit the matrix even for inadmissible or non-BCK results");
  add_format(build);

  auto* verify = app.add_subcommand("verify", "Check a table file against the axioms");
  verify->add_option("tablefile", file_a, "Table file ('-' for stdin)")->required();
  verify->add_option("--axioms", axioms, "Axiom system")->check(CLI::IsMember({"bci", "bck", "bck-alt"}));
  verify->add_flag("--properties", properties, "Also report commutative/implicative/positive implicative");
  add_format(verify);

  auto* generate = app.add_subcommand("generate", "Generate the cut-function code of a table");
  generate->add_option("tablefile", file_a, "Table file ('-' for stdin)")->required();
  generate->add_option("--points", points, "Comma-separated evaluation points, e.g. 1,2,3,4")->required();
  add_format(generate);

  auto* roundtrip = app.add_subcommand("roundtrip", "validate, build, verify, generate, check containment");
  roundtrip->add_option("codefile", file_a, "Code file ('-' for stdin)")->required();
  roundtrip->add_option("--points", points, "Evaluation points (default 1..q)");
  add_format(roundtrip);

  auto* ideals = app.add_subcommand("ideals", "Check or enumerate closed right ideals");
  ideals->add_option("tablefile", file_a, "Table file ('-' for stdin)")->required();
  ideals->add_option("--subset", subset, "Comma-separated subset to check");
  ideals->add_flag("--enumerate", enumerate, "List all closed right ideals");
  ideals->add_option("--max-size", max_size, "Largest subset to consider when enumerating");
  ideals->add_option("--candidate", candidate, "Check {0,1,r-m..r-1} for a code with m words");
  add_format(ideals);

  auto* iso = app.add_subcommand("iso", "Search for an isomorphism between two tables");
  iso->add_option("tablefile_a", file_a, "First table file")->required();
  iso->add_option("tablefile_b", file_b, "Second table file")->required();
  iso->add_option("--max-size", iso_cap, "Largest table size to search");
  add_format(iso);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  Context ctx{out, err};
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }
  ctx.format = format == "json" ? Format::kJson : Format::kText;

  CLI::App* chosen = app.get_subcommands().front();
  ctx.doc["command"] = chosen->get_name();
  try {
    if (chosen == validate) return cmd_validate(ctx, file_a);
    if (chosen == build) return cmd_build(ctx, file_a, emit, force);
    if (chosen == verify) return cmd_verify(ctx, file_a, axioms, properties);
    if (chosen == generate) return cmd_generate(ctx, file_a, points);
    if (chosen == roundtrip) return cmd_roundtrip(ctx, file_a, points);
    if (chosen == ideals) return cmd_ideals(ctx, file_a, subset, enumerate, max_size, candidate);
    return cmd_iso(ctx, file_a, file_b, iso_cap);
  } catch (const UsageError& e) {
    return ctx.fail_usage(e.what());
  } catch (const Error& e) {
    return ctx.fail_usage(e.what());
  }
}

}  // namespace bck::cli
