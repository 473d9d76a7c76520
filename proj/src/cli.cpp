#include "gradedpi/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <stdexcept>

#include "gradedpi/classify.hpp"
#include "gradedpi/json_io.hpp"

namespace gradedpi::cli {

namespace {

using nlohmann::json;

ElementaryGrading make_grading(const std::string& group_text, const std::string& tuple_csv) {
  Group group = Group::parse(group_text);
  std::vector<GroupElement> entries = parse_element_list(group, tuple_csv);
  return build_grading(GradingTuple(std::move(group), std::move(entries)));
}

// Labeled digraph of the grading: one vertex per row index, an arrow
// v_p -> v_q labeled with the degree g_q - g_p of the matrix unit e_pq.
void write_dot(const ElementaryGrading& grading, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open dot output file \"" + path + "\"");
  const Group& G = grading.group();
  const auto& entries = grading.tuple().entries;
  out << "digraph grading {\n";
  for (int p = 1; p <= grading.n(); ++p) out << "  v" << p << ";\n";
  for (int p = 1; p <= grading.n(); ++p) {
    for (int q = 1; q <= grading.n(); ++q) {
      if (p == q) continue;
      const GroupElement deg = G.sub(entries[static_cast<std::size_t>(q - 1)],
                                     entries[static_cast<std::size_t>(p - 1)]);
      out << "  v" << p << " -> v" << q << " [label=\"" << G.format_element(deg) << "\"];\n";
    }
  }
  out << "}\n";
}

std::string render(const json& doc, bool pretty) {
  return (pretty ? doc.dump(2) : doc.dump()) + "\n";
}

json witness_to_json(const IdentityWitness& witness) {
  if (const auto* chain = std::get_if<NonIdentityChain>(&witness)) return chain->indices;
  if (const auto* interval = std::get_if<TrivialInterval>(&witness)) {
    return json::array({interval->begin, interval->end});
  }
  return json::array();
}

const char* witness_kind(const IdentityWitness& witness) {
  if (std::holds_alternative<NonIdentityChain>(witness)) return "chain";
  if (std::holds_alternative<TrivialInterval>(witness)) return "interval";
  return "none";
}

const char* kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::canonical_z: return "canonical_z";
    case FamilyKind::family_n4: return "family_n4";
    case FamilyKind::family_n5: return "family_n5";
    case FamilyKind::unmatched: return "unmatched";
  }
  return "unmatched";
}

struct Args {
  std::string group = "Z";
  std::string tuple;
  std::string word;
  int max_len = 0;
  int n = 0;
  std::int64_t bound = 0;
  int L = 0;
  bool strict = false;
  bool pretty = false;
  bool no_prune = false;
  std::string dot_path;
};

CliResult run_analyze(const Args& a) {
  const ElementaryGrading grading = make_grading(a.group, a.tuple);
  const Group& G = grading.group();
  json components = json::array();
  for (const GroupElement& h : grading.support()) {
    json pairs = json::array();
    for (const auto& [p, q] : grading.component_pairs(h)) pairs.push_back(json::array({p, q}));
    components.push_back(
        {{"degree", element_to_json(G, h)}, {"dim", grading.dim(h)}, {"pairs", pairs}});
  }
  const json doc = {{"group", G.to_string()},
                    {"tuple", elements_to_json(G, grading.tuple().entries)},
                    {"n", grading.n()},
                    {"distinct_entries", grading.distinct_entries()},
                    {"support", elements_to_json(G, grading.support())},
                    {"components", components},
                    {"canonical_form", elements_to_json(G, canonical_form(grading.tuple()).entries)}};
  if (!a.dot_path.empty()) write_dot(grading, a.dot_path);
  return {0, render(doc, a.pretty), ""};
}

CliResult run_check(const Args& a) {
  const ElementaryGrading grading = make_grading(a.group, a.tuple);
  const Group& G = grading.group();
  const DegreeWord word(G, parse_element_list(G, a.word));
  const IdentityReport report = classify_word(grading, word);
  const json doc = {{"group", G.to_string()},
                    {"tuple", elements_to_json(G, grading.tuple().entries)},
                    {"word", elements_to_json(G, word.letters)},
                    {"verdict", report.is_identity},
                    {"trivial", report.is_trivial},
                    {"witness_kind", witness_kind(report.witness)},
                    {"witness", witness_to_json(report.witness)}};
  if (!a.dot_path.empty()) write_dot(grading, a.dot_path);
  const int code = a.strict && !report.is_identity ? 1 : 0;
  return {code, render(doc, a.pretty), ""};
}

CliResult run_enumerate(const Args& a) {
  const ElementaryGrading grading = make_grading(a.group, a.tuple);
  const Group& G = grading.group();
  const int max_len = a.max_len > 0 ? a.max_len : grading.n();
  const MinimalIdentitySet minimal = enumerate_minimal_identities(grading, max_len);
  const AlmostNondegeneracy verdict = is_almost_nondegenerate(grading);
  json identities = json::array();
  for (const DegreeWord& w : minimal.identities) identities.push_back(elements_to_json(G, w.letters));
  const json doc = {
      {"grading",
       {{"group", G.to_string()}, {"tuple", elements_to_json(G, grading.tuple().entries)}}},
      {"max_len", max_len},
      {"minimal_identities", identities},
      {"almost_nondegenerate", verdict.almost_nondegenerate},
      {"witness", verdict.witness ? elements_to_json(G, verdict.witness->letters) : json::array()}};
  if (!a.dot_path.empty()) write_dot(grading, a.dot_path);
  const int code = a.strict && !verdict.almost_nondegenerate ? 1 : 0;
  return {code, render(doc, a.pretty), ""};
}

CliResult run_classify(const Args& a) {
  const std::int64_t bound = a.bound > 0 ? a.bound : 2 * a.n + 2;
  ClassifyOptions options;
  options.palindromic_prune = !a.no_prune;
  const ClassificationResult result = classify_almost_nondeg(a.n, bound, options);
  json survivors = json::array();
  json families = json::object();
  for (const SurvivorInfo& s : result.survivors) {
    survivors.push_back(s.entries);
    std::string key;
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
      if (i) key += ',';
      key += std::to_string(s.entries[i]);
    }
    json entry = {{"kind", kind_name(s.kind)}};
    if (s.kind == FamilyKind::family_n4 || s.kind == FamilyKind::family_n5) {
      entry["a"] = s.a;
      entry["b"] = s.b;
    }
    families[key] = std::move(entry);
  }
  const json doc = {{"n", result.n},
                    {"bound", result.bound},
                    {"survivors", survivors},
                    {"families", families},
                    {"unmatched", result.unmatched}};
  const int code = a.strict && !result.unmatched.empty() ? 1 : 0;
  return {code, render(doc, a.pretty), ""};
}

CliResult run_goodseq(const Args& a) {
  Group Z(1, {});
  const std::vector<GroupElement> elems = parse_element_list(Z, a.tuple);
  std::vector<std::int64_t> entries;
  entries.reserve(elems.size());
  for (const GroupElement& e : elems) entries.push_back(e.coords[0]);
  const int L = a.L > 0 ? a.L : 2 * static_cast<int>(entries.size());
  const GoodSequenceVerdict verdict = is_good_sequence(entries, L);
  const json doc = {{"tuple", verdict.entries},
                    {"L", verdict.max_length},
                    {"good_up_to_L", verdict.good_up_to_length},
                    {"violation", verdict.violation ? json(*verdict.violation) : json::array()}};
  if (!a.dot_path.empty()) {
    write_dot(build_grading(GradingTuple(Z, elems)), a.dot_path);
  }
  const int code = a.strict && !verdict.good_up_to_length ? 1 : 0;
  return {code, render(doc, a.pretty), ""};
}

CliResult run_reduce(const Args& a) {
  const ElementaryGrading grading = make_grading(a.group, a.tuple);
  const Group& G = grading.group();
  const ElementaryGrading reduced = reduce_distinct(grading);
  const json doc = {{"group", G.to_string()},
                    {"tuple", elements_to_json(G, grading.tuple().entries)},
                    {"reduced_tuple", elements_to_json(G, reduced.tuple().entries)}};
  if (!a.dot_path.empty()) write_dot(grading, a.dot_path);
  return {0, render(doc, a.pretty), ""};
}

}  // namespace

CliResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Graded monomial identities of elementary gradings on matrix algebras"};
  app.require_subcommand(1);
  Args a;

  auto add_group = [&](CLI::App* cmd) {
    cmd->add_option("--group", a.group, "Group syntax: Z, Z^k, Z_m or products like ZxZ_2")
        ->capture_default_str();
  };
  auto add_tuple = [&](CLI::App* cmd) {
    cmd->add_option("--tuple", a.tuple, "Comma-separated grading tuple, e.g. 0,2,3,5")->required();
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--pretty", a.pretty, "Indent the JSON output");
    cmd->add_option("--dot", a.dot_path, "Write the labeled digraph of the grading to FILE");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Support, components and canonical form of a grading");
  add_group(analyze);
  add_tuple(analyze);
  add_common(analyze);

  CLI::App* check = app.add_subcommand("check", "Identity / triviality verdict for one degree word");
  add_group(check);
  add_tuple(check);
  check->add_option("--word", a.word, "Comma-separated degree word, e.g. 2,2,1")->required();
  check->add_flag("--strict", a.strict, "Exit 1 when the word is not an identity");
  add_common(check);

  CLI::App* enumerate = app.add_subcommand("enumerate", "Minimal non-trivial identities up to a length");
  add_group(enumerate);
  add_tuple(enumerate);
  enumerate->add_option("--max-len", a.max_len, "Maximum word length (default: n)")
      ->check(CLI::PositiveNumber);
  enumerate->add_flag("--strict", a.strict, "Exit 1 when the grading is not almost non-degenerate");
  add_common(enumerate);

  CLI::App* classify = app.add_subcommand("classify", "Scan ascending Z-tuples for almost non-degeneracy");
  classify->add_option("--n", a.n, "Matrix size, 2 <= n <= 5")->required()->check(CLI::Range(2, 5));
  classify->add_option("--bound", a.bound, "Largest entry searched (default: 2n+2)")
      ->check(CLI::PositiveNumber);
  classify->add_flag("--no-prune", a.no_prune, "Disable the palindromic-profile prune");
  classify->add_flag("--strict", a.strict, "Exit 1 when any survivor matches no known family");
  classify->add_flag("--pretty", a.pretty, "Indent the JSON output");

  CLI::App* goodseq = app.add_subcommand("goodseq", "Bounded good-sequence test for an integer tuple");
  goodseq->add_option("--tuple", a.tuple, "Comma-separated integers, e.g. 0,2,3,5")->required();
  goodseq->add_option("--L", a.L, "Maximum violation length searched (default: 2n)")
      ->check(CLI::PositiveNumber);
  goodseq->add_flag("--strict", a.strict, "Exit 1 when a violation is found");
  add_common(goodseq);

  CLI::App* reduce = app.add_subcommand("reduce", "Drop repeated tuple entries (first occurrences kept)");
  add_group(reduce);
  add_tuple(reduce);
  add_common(reduce);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    return {0, parsed.empty() ? app.help() : parsed.front()->help(), ""};
  } catch (const CLI::ParseError& e) {
    return {2, "", std::string("error: ") + e.what() + "\n"};
  }

  try {
    if (analyze->parsed()) return run_analyze(a);
    if (check->parsed()) return run_check(a);
    if (enumerate->parsed()) return run_enumerate(a);
    if (classify->parsed()) return run_classify(a);
    if (goodseq->parsed()) return run_goodseq(a);
    if (reduce->parsed()) return run_reduce(a);
  } catch (const std::invalid_argument& e) {
    return {2, "", std::string("error: ") + e.what() + "\n"};
  }
  return {2, "", "error: no subcommand given\n"};
}

}  // namespace gradedpi::cli
