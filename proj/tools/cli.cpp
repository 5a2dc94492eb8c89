#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "doxa/belief.hpp"
#include "doxa/corpus.hpp"
#include "doxa/dsl.hpp"
#include "doxa/principles.hpp"
#include "doxa/properties.hpp"
#include "doxa/search.hpp"

namespace doxa::cli {

namespace {

using json = nlohmann::ordered_json;

// Input errors that end the run with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write file");
  out << text;
}

ProbabilityStructure load(const std::string& path) {
  const auto text = read_file(path);
  try {
    return dsl::parse(text);
  } catch (const dsl::ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

json names_of(const ProbabilityStructure& m, const Proposition& p) {
  json arr = json::array();
  p.for_each([&](std::size_t s) { arr.push_back(m.state_name(s)); });
  return arr;
}

json belief_json(const ProbabilityStructure& m, const BeliefSet& b) {
  return json{{"evidence", names_of(m, b.evidence)},
              {"operator", to_string(b.op)},
              {"states", names_of(m, b.states)},
              {"mass", to_fraction_string(b.mass_given_evidence)}};
}

json witness_json(const ProbabilityStructure& m, const Witness& w) {
  json j{{"evidence", names_of(m, w.evidence)}};
  if (w.partition.empty()) {
    j["discovery"] = names_of(m, w.discovery);
  } else {
    json parts = json::array();
    for (const auto& p : w.partition) parts.push_back(names_of(m, p));
    j["partition"] = parts;
  }
  j["belief_before"] = belief_json(m, w.belief_before);
  json after = json::array();
  for (const auto& b : w.belief_after) after.push_back(belief_json(m, b));
  j["belief_after"] = after;
  j["detail"] = w.detail;
  return j;
}

json verdict_json(const ProbabilityStructure& m, const Verdict& v) {
  json j{{"principle", to_string(v.principle)}, {"symbol", symbol(v.principle)}};
  if (auto alias = klm_alias(v.principle)) j["klm"] = *alias;
  j["operator"] = to_string(v.op);
  j["outcome"] = v.holds() ? "holds" : "fails";
  j["instances_checked"] = v.instances_checked;
  j["bounded"] = v.bounded;
  json ws = json::array();
  for (const auto& w : v.witnesses) ws.push_back(witness_json(m, w));
  j["witnesses"] = ws;
  return j;
}

json report_json(const ProbabilityStructure& m, const ConstraintReport& r) {
  json j{{"constraint", to_string(r.constraint)}, {"outcome", r.holds() ? "holds" : "fails"}};
  json vs = json::array();
  for (const auto& v : r.violations) {
    json x{{"evidence", names_of(m, v.evidence)}};
    if (const auto* d = std::get_if<CellPairDetail>(&v.detail)) {
      x["cells"] = json::array({names_of(m, m.question().cell(d->cell_a)), names_of(m, m.question().cell(d->cell_b))});
      x["states"] = json::array({m.state_name(d->state_a), m.state_name(d->state_b)});
      x["prior_ratio"] = to_fraction_string(d->prior_ratio);
      x["conditional_ratio"] = to_fraction_string(d->conditional_ratio);
    } else if (const auto* d = std::get_if<CellSetDetail>(&v.detail)) {
      json cells = json::array();
      for (auto c : d->cells) cells.push_back(names_of(m, m.question().cell(c)));
      x["cells"] = cells;
      x["prior_mass"] = to_fraction_string(d->prior_mass);
      x["conditional_mass"] = to_fraction_string(d->conditional_mass);
    }
    vs.push_back(x);
  }
  j["violations"] = vs;
  return j;
}

void print_witness(std::ostream& out, const ProbabilityStructure& m, const Witness& w) {
  out << "  witness: E = " << format_proposition(m, w.evidence) << "\n";
  if (w.partition.empty()) {
    out << "    E' = " << format_proposition(m, w.discovery) << "\n";
  } else {
    for (const auto& p : w.partition) out << "    member " << format_proposition(m, p) << "\n";
  }
  out << "    " << w.detail << "\n";
}

void print_verdict(std::ostream& out, const ProbabilityStructure& m, const Verdict& v, std::size_t limit) {
  out << symbol(v.principle) << " " << to_string(v.principle);
  if (auto alias = klm_alias(v.principle)) out << " (" << *alias << ")";
  out << ": " << (v.holds() ? "holds" : "fails") << " [" << to_string(v.op) << ", " << v.instances_checked
      << " instances" << (v.bounded ? ", partition enumeration bounded" : "") << "]\n";
  for (std::size_t i = 0; i < v.witnesses.size() && i < limit; ++i) print_witness(out, m, v.witnesses[i]);
  if (v.witnesses.size() > limit) out << "  ... " << v.witnesses.size() - limit << " more witnesses\n";
}

void print_report(std::ostream& out, const ProbabilityStructure& m, const ConstraintReport& r, std::size_t limit) {
  out << to_string(r.constraint) << ": " << (r.holds() ? "holds" : "fails");
  if (!r.holds()) out << " (" << r.violations.size() << " violations)";
  out << "\n";
  for (std::size_t i = 0; i < r.violations.size() && i < limit; ++i) {
    const auto& v = r.violations[i];
    out << "  E = " << format_proposition(m, v.evidence) << ": ";
    if (const auto* d = std::get_if<CellPairDetail>(&v.detail)) {
      out << "states " << m.state_name(d->state_a) << ", " << m.state_name(d->state_b) << ": prior ratio "
          << to_string(d->prior_ratio) << " vs conditional ratio " << to_string(d->conditional_ratio) << "\n";
    } else if (const auto* d = std::get_if<CellSetDetail>(&v.detail)) {
      out << "answers";
      for (auto c : d->cells) out << " " << format_proposition(m, m.question().cell(c));
      out << ": prior " << to_string(d->prior_mass) << " but conditional " << to_string(d->conditional_mass) << "\n";
    }
  }
  if (r.violations.size() > limit) out << "  ... " << r.violations.size() - limit << " more violations\n";
}

Principle principle_arg(const std::string& name) {
  auto p = parse_principle(name);
  if (!p) throw InputError("--principle: unknown principle '" + name + "'");
  return *p;
}

BeliefOperator operator_arg(const std::string& name) {
  auto op = parse_operator(name);
  if (!op) throw InputError("--operator: expected hpd or lk, got '" + name + "'");
  return *op;
}

Proposition evidence_arg(const ProbabilityStructure& m, const std::string& spec) {
  if (!spec.empty() && std::all_of(spec.begin(), spec.end(), [](unsigned char c) { return std::isdigit(c); })) {
    const auto idx = std::stoull(spec);
    if (idx >= m.evidence().size()) {
      throw InputError("--evidence: index " + spec + " out of range (" + std::to_string(m.evidence().size()) +
                       " evidence sets)");
    }
    return m.evidence()[idx];
  }
  try {
    return dsl::parse_set(spec, m);
  } catch (const dsl::ParseError& e) {
    throw InputError(std::string("--evidence: ") + e.what());
  }
}

struct Options {
  std::string format = "text";
  std::size_t limit = 10;

  std::string file;
  std::string evidence;
  std::string op = "hpd";
  std::string question_file;
  std::vector<std::string> only;

  std::string example;
  std::size_t n = 0;
  std::string threshold;
  std::string question;
  std::string output;

  std::string principle;
  std::string constraint = "none";
  std::string mode;
  std::size_t budget = 10000;
  std::uint64_t seed = 0;
  std::size_t max_states = 6;
};

int cmd_check(const Options& o, Format fmt, std::ostream& out) {
  const auto m = load(o.file);
  if (fmt == Format::Json) {
    out << json{{"file", o.file},
                {"valid", true},
                {"states", m.state_count()},
                {"cells", m.question().size()},
                {"evidence", m.evidence().size()},
                {"threshold", to_fraction_string(m.threshold())},
                {"total_weight", to_fraction_string(m.total_weight())}}
               .dump(2)
        << "\n";
  } else {
    out << o.file << ": valid\n"
        << "  states: " << m.state_count() << "\n"
        << "  question cells: " << m.question().size() << "\n"
        << "  evidence sets: " << m.evidence().size() << "\n"
        << "  threshold: " << to_string(m.threshold()) << "\n"
        << "  total weight: " << to_string(m.total_weight()) << "\n";
  }
  return kOk;
}

int cmd_believe(const Options& o, Format fmt, std::ostream& out) {
  auto m = load(o.file);
  if (!o.question_file.empty()) {
    try {
      m = with_question(m, dsl::parse_question(read_file(o.question_file), m));
    } catch (const dsl::ParseError& e) {
      throw InputError(o.question_file + ":" + e.what());
    }
  }
  const auto op = operator_arg(o.op);
  const auto e = evidence_arg(m, o.evidence);
  const auto b = belief(m, e, op);
  if (fmt == Format::Json) {
    out << belief_json(m, b).dump(2) << "\n";
  } else {
    out << "operator: " << to_string(op) << "\n"
        << "evidence: " << format_proposition(m, e) << "\n"
        << "belief: " << format_proposition(m, b.states) << "\n"
        << "mass: " << to_string(b.mass_given_evidence) << "\n";
  }
  return kOk;
}

int cmd_principles(const Options& o, Format fmt, std::ostream& out) {
  const auto m = load(o.file);
  const auto op = operator_arg(o.op);
  std::vector<Principle> selected;
  for (const auto& name : o.only) {
    std::stringstream parts(name);
    std::string part;
    while (std::getline(parts, part, ',')) {
      if (part.empty()) continue;
      auto p = parse_principle(part);
      if (!p) throw InputError("--only: unknown principle '" + part + "'");
      selected.push_back(*p);
    }
  }
  if (selected.empty()) selected.assign(kAllPrinciples.begin(), kAllPrinciples.end());

  std::vector<Verdict> verdicts;
  if (selected.size() == kAllPrinciples.size()) {
    verdicts = check_all(m, op);
  } else {
    for (auto p : selected) verdicts.push_back(check_principle(m, p, op));
  }
  const bool all_hold = std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds(); });
  if (fmt == Format::Json) {
    json arr = json::array();
    for (const auto& v : verdicts) arr.push_back(verdict_json(m, v));
    out << json{{"file", o.file}, {"operator", to_string(op)}, {"verdicts", arr}}.dump(2) << "\n";
  } else {
    for (const auto& v : verdicts) print_verdict(out, m, v, o.limit);
  }
  return all_hold ? kOk : kFails;
}

int cmd_props(const Options& o, Format fmt, std::ostream& out) {
  const auto m = load(o.file);
  std::vector<ConstraintReport> reports;
  const bool want_orth = o.only.empty() || std::find(o.only.begin(), o.only.end(), "orthogonality") != o.only.end();
  const bool want_stab = o.only.empty() || std::find(o.only.begin(), o.only.end(), "stability") != o.only.end();
  if (!want_orth && !want_stab) throw InputError("--only: expected orthogonality or stability");
  if (want_orth) reports.push_back(check_orthogonality(m));
  if (want_stab) reports.push_back(check_stability(m));
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const ConstraintReport& r) { return r.holds(); });
  if (fmt == Format::Json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(m, r));
    out << json{{"file", o.file}, {"reports", arr}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report(out, m, r, o.limit);
  }
  return ok ? kOk : kFails;
}

ProbabilityStructure build_example(const Options& o) {
  using namespace corpus;
  const auto id = parse_corpus_id(o.example);
  if (!id) throw InputError("example: unknown structure '" + o.example + "'");
  std::optional<Rational> t;
  if (!o.threshold.empty()) {
    try {
      t = parse_rational(o.threshold);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--t: ") + e.what());
    }
  }

  ProbabilityStructure m;
  switch (*id) {
    case CorpusId::FlippingForHeads:
    case CorpusId::FlippingWithWalkaway:
      m = make_flipping(o.n != 0 ? o.n : 30, t.value_or(Rational(99, 100)), *id == CorpusId::FlippingWithWalkaway);
      break;
    case CorpusId::DrawingCard:
    case CorpusId::DrawingCardQPrime:
    case CorpusId::DrawingCardQDoublePrime: {
      auto q = *id == CorpusId::DrawingCardQPrime         ? CardQuestion::QPrime
               : *id == CorpusId::DrawingCardQDoublePrime ? CardQuestion::QDoublePrime
                                                          : CardQuestion::Q;
      if (o.question == "q") q = CardQuestion::Q;
      else if (o.question == "q-prime") q = CardQuestion::QPrime;
      else if (o.question == "q-double-prime") q = CardQuestion::QDoublePrime;
      else if (!o.question.empty()) throw InputError("--question: expected q, q-prime or q-double-prime");
      m = make_drawing_card(q);
      break;
    }
    case CorpusId::DrawingCardV2:
      m = make_drawing_card_v2(t.value_or(Rational(3, 10)));
      break;
    case CorpusId::HundredFlips: {
      auto q = FlipsQuestion::Count;
      if (o.question == "polar") q = FlipsQuestion::Polar;
      else if (o.question == "sequence") q = FlipsQuestion::Sequence;
      else if (!o.question.empty() && o.question != "count") {
        throw InputError("--question: expected polar, count or sequence");
      }
      const std::size_t n = o.n != 0 ? o.n : (q == FlipsQuestion::Sequence ? 10 : 100);
      m = make_hundred_flips(n, q, t.value_or(Rational(999, 1000)));
      break;
    }
    default:
      m = make_appendix(*id);
      break;
  }
  if (t && m.threshold() != *t) m = with_threshold(m, *t);
  return m;
}

int cmd_example(const Options& o, Format fmt, std::ostream& out) {
  const auto m = build_example(o);
  const auto text = dsl::serialize(m);
  if (!o.output.empty()) {
    write_file(o.output, text);
    if (fmt == Format::Json) {
      out << json{{"example", o.example}, {"output", o.output}}.dump(2) << "\n";
    } else {
      out << "wrote " << o.output << "\n";
    }
  } else if (fmt == Format::Json) {
    out << json{{"example", o.example}, {"bps", text}}.dump(2) << "\n";
  } else {
    out << text;
  }
  return kOk;
}

int cmd_search(const Options& o, Format fmt, std::ostream& out) {
  const auto pr = principle_arg(o.principle);
  const auto op = operator_arg(o.op);
  const auto filter = parse_constraint_filter(o.constraint);
  if (!filter) throw InputError("--constraint: expected orthogonality, stability or both");

  GeneratorConfig cfg;
  cfg.state_count = {2, std::max<std::size_t>(2, o.max_states)};
  cfg.cell_count = {1, cfg.state_count.hi};
  cfg.seed = o.seed;
  const bool orthogonal = *filter == ConstraintFilter::Orthogonality || *filter == ConstraintFilter::Both;
  cfg.mode = orthogonal ? GeneratorMode::Product : GeneratorMode::Free;
  if (!o.mode.empty()) {
    auto mode = parse_generator_mode(o.mode);
    if (!mode) throw InputError("--mode: expected free, coarse or product");
    cfg.mode = *mode;
  }

  const auto result = search_countermodel(pr, op, *filter, cfg, o.budget);
  if (result.found && !o.output.empty()) write_file(o.output, dsl::serialize(result.found->structure));

  if (fmt == Format::Json) {
    json j{{"principle", to_string(pr)},
           {"operator", to_string(op)},
           {"constraint", to_string(*filter)},
           {"mode", to_string(cfg.mode)},
           {"seed", o.seed},
           {"budget", o.budget},
           {"structures_tried", result.structures_tried},
           {"structures_checked", result.structures_checked},
           {"found", result.found.has_value()}};
    if (result.found) {
      const auto& m = result.found->structure;
      j["trial"] = result.found->trial_index;
      j["witness"] = witness_json(m, result.found->witness);
      j["bps"] = dsl::serialize(m);
    }
    out << j.dump(2) << "\n";
  } else if (result.found) {
    const auto& m = result.found->structure;
    out << "countermodel for " << to_string(pr) << " (" << to_string(op) << ") at trial "
        << result.found->trial_index << "\n";
    print_witness(out, m, result.found->witness);
    if (o.output.empty()) {
      out << dsl::serialize(m);
    } else {
      out << "wrote " << o.output << "\n";
    }
  } else {
    out << "no countermodel for " << to_string(pr) << " (" << to_string(op) << ", constraint "
        << to_string(*filter) << ") in " << result.structures_tried << " structures (" << result.structures_checked
        << " passed the filter)\n";
  }
  return result.found ? kFails : kOk;
}

int cmd_shrink(const Options& o, Format fmt, std::ostream& out) {
  const auto m = load(o.file);
  const auto pr = principle_arg(o.principle);
  const auto op = operator_arg(o.op);
  const auto small = shrink(m, pr, op);
  const auto text = dsl::serialize(small);
  if (!o.output.empty()) write_file(o.output, text);
  if (fmt == Format::Json) {
    out << json{{"principle", to_string(pr)},
                {"operator", to_string(op)},
                {"states_before", m.state_count()},
                {"states_after", small.state_count()},
                {"bps", text}}
               .dump(2)
        << "\n";
  } else if (o.output.empty()) {
    out << text;
  } else {
    out << "wrote " << o.output << " (" << small.state_count() << " states, was " << m.state_count() << ")\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Question-relative belief revision over finite probability structures", "doxa"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--limit", o.limit, "Witnesses or violations listed per item in text output");

  auto* check = app.add_subcommand("check", "Validate and summarize a structure");
  check->add_option("FILE", o.file)->required();

  auto* believe = app.add_subcommand("believe", "Belief set at a body of evidence");
  believe->add_option("FILE", o.file)->required();
  believe->add_option("--evidence", o.evidence, "Evidence index or {a b c}")->required();
  believe->add_option("--operator", o.op, "hpd or lk");
  believe->add_option("--question-file", o.question_file, "File with a replacement question: section");

  auto* principles = app.add_subcommand("principles", "Check the seven revision principles");
  principles->add_option("FILE", o.file)->required();
  principles->add_option("--operator", o.op, "hpd or lk");
  principles->add_option("--only", o.only, "Comma-separated principle names")->delimiter(',');

  auto* props = app.add_subcommand("props", "Check orthogonality and stability");
  props->add_option("FILE", o.file)->required();
  props->add_option("--only", o.only, "orthogonality or stability")->delimiter(',');

  auto* example = app.add_subcommand("example", "Write a named example structure");
  example->add_option("NAME", o.example)->required();
  example->add_option("--n", o.n, "Size parameter");
  example->add_option("--t", o.threshold, "Threshold");
  example->add_option("--question", o.question, "Question variant");
  example->add_option("-o,--output", o.output, "Output file");

  auto* search = app.add_subcommand("search", "Random countermodel search");
  search->add_option("--principle", o.principle)->required();
  search->add_option("--operator", o.op)->required();
  search->add_option("--constraint", o.constraint, "orthogonality, stability or both");
  search->add_option("--budget", o.budget, "Structures to generate")->required();
  search->add_option("--seed", o.seed)->required();
  search->add_option("--max-states", o.max_states);
  search->add_option("--mode", o.mode, "free, coarse or product");
  search->add_option("-o,--output", o.output, "Write the countermodel here");

  auto* shrink_cmd = app.add_subcommand("shrink", "Minimize a countermodel");
  shrink_cmd->add_option("FILE", o.file)->required();
  shrink_cmd->add_option("--principle", o.principle)->required();
  shrink_cmd->add_option("--operator", o.op)->required();
  shrink_cmd->add_option("-o,--output", o.output, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "doxa: " << e.what() << "\n";
    return kUsage;
  }

  const Format fmt = o.format == "json" ? Format::Json : Format::Text;
  try {
    if (check->parsed()) return cmd_check(o, fmt, out);
    if (believe->parsed()) return cmd_believe(o, fmt, out);
    if (principles->parsed()) return cmd_principles(o, fmt, out);
    if (props->parsed()) return cmd_props(o, fmt, out);
    if (example->parsed()) return cmd_example(o, fmt, out);
    if (search->parsed()) return cmd_search(o, fmt, out);
    if (shrink_cmd->parsed()) return cmd_shrink(o, fmt, out);
  } catch (const InputError& e) {
    err << "doxa: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "doxa: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace doxa::cli
