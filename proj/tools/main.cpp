#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>

#include "truthlab/coding.hpp"
#include "truthlab/cutmodel.hpp"
#include "truthlab/derivations.hpp"
#include "truthlab/disjunctions.hpp"
#include "truthlab/error.hpp"
#include "truthlab/json_io.hpp"
#include "truthlab/principles.hpp"
#include "truthlab/satclass.hpp"
#include "truthlab/semantics.hpp"
#include "truthlab/suite.hpp"
#include "truthlab/syntax.hpp"

namespace {

using truthlab::Json;

constexpr int kPass = 0, kViolation = 1, kError = 2;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json read_json_input(const std::string& path) {
  if (path.empty() || path == "-") {
    Json j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) throw truthlab::Error("cannot open input file: " + path);
  Json j;
  in >> j;
  return j;
}

std::vector<truthlab::Formula> formula_list(const Json& j) {
  std::vector<truthlab::Formula> out;
  for (const Json& s : j)
    out.push_back(truthlab::parse_formula(s.get<std::string>()));
  return out;
}

int exit_of(truthlab::PrincipleReport::Outcome outcome) {
  switch (outcome) {
    case truthlab::PrincipleReport::Outcome::Pass:
      return kPass;
    case truthlab::PrincipleReport::Outcome::Fail:
      return kViolation;
    default:
      return kError;
  }
}

int cmd_parse(const std::string& text) {
  truthlab::Formula f = truthlab::parse_formula(text);
  Json out{{"schema_version", 1},
           {"formula", truthlab::to_string(f)},
           {"ast", truthlab::to_json(f)},
           {"free_vars", truthlab::free_vars(f)}};
  emit(out);
  return kPass;
}

int cmd_encode(const std::string& text) {
  Json out{{"schema_version", 1}};
  try {
    truthlab::Formula f = truthlab::parse_formula(text);
    out["kind"] = "formula";
    out["code"] = truthlab::encode(f).to_decimal();
  } catch (const truthlab::ParseError&) {
    truthlab::Term t = truthlab::parse_term(text);
    out["kind"] = "term";
    out["code"] = truthlab::encode(t).to_decimal();
  }
  emit(out);
  return kPass;
}

int cmd_eval(const std::string& text, uint64_t budget) {
  truthlab::Formula f = truthlab::parse_formula(text);
  truthlab::Verdict v = truthlab::evaluate(f, {budget});
  Json out = truthlab::to_json(v);
  out["schema_version"] = 1;
  out["formula"] = truthlab::to_string(f);
  out["budget"] = budget;
  emit(out);
  return v.determined() ? kPass : kError;
}

int cmd_disj(const std::string& kind, const std::string& input,
             bool evaluate_result, uint64_t budget) {
  truthlab::BuilderKind bk;
  if (kind == "left") bk = truthlab::BuilderKind::LeftGrouped;
  else if (kind == "balanced") bk = truthlab::BuilderKind::Balanced;
  else if (kind == "outer") bk = truthlab::BuilderKind::QuantifiedOuter;
  else if (kind == "negconj") bk = truthlab::BuilderKind::NegatedConjunction;
  else if (kind == "selective") bk = truthlab::BuilderKind::Selective;
  else throw truthlab::Error("unknown builder kind: " + kind);

  auto sentences = formula_list(read_json_input(input));
  truthlab::Formula built = truthlab::make_builder(bk).apply(sentences);
  Json out{{"schema_version", 1},
           {"kind", kind},
           {"count", sentences.size()},
           {"sentence", truthlab::to_string(built)}};
  if (evaluate_result)
    out["evaluation"] = truthlab::to_json(truthlab::evaluate(built, {budget}));
  emit(out);
  return kPass;
}

int cmd_yablo(uint64_t length, uint64_t budget, const std::string& seq_file) {
  truthlab::SentenceSeq chain;
  if (!seq_file.empty()) {
    chain = formula_list(read_json_input(seq_file));
  } else {
    for (uint64_t j = 0; j < length; ++j)
      chain.push_back(truthlab::eq(truthlab::num(j), truthlab::num(j)));
  }
  truthlab::YabloSequence ys = truthlab::yablo_transform(chain);
  truthlab::YabloReport report = truthlab::check_yablo_claim(ys, budget);
  std::vector<truthlab::Formula> roots = ys.source;
  roots.insert(roots.end(), ys.derived.begin(), ys.derived.end());
  Json out = truthlab::to_json(report);
  out["schema_version"] = 1;
  out["length"] = chain.size();
  out["dag_nodes"] = truthlab::dag_node_count(roots);
  out["tree_nodes_last"] =
      truthlab::tree_node_count(ys.derived.back()).to_decimal();
  emit(out);
  return report.ok() ? kPass : kViolation;
}

int cmd_check(const std::string& principle, const std::string& input,
              uint64_t budget, const std::string& variant_name) {
  Json j = read_json_input(input);
  truthlab::PrincipleReport report;
  if (principle == "ctminus") {
    auto v = truthlab::valuation_from_json(j.at("valuation"));
    auto variant = variant_name == "term"
                       ? truthlab::QuantifierVariant::ClosedTerm
                       : truthlab::QuantifierVariant::Numeral;
    report = truthlab::check_ct_minus(v, variant, budget);
  } else if (principle == "dc" || principle == "dcin" ||
             principle == "dcout") {
    auto v = truthlab::valuation_from_json(j.at("valuation"));
    std::vector<truthlab::SentenceSeq> seqs;
    for (const Json& s : j.at("sequences")) seqs.push_back(formula_list(s));
    auto dir = principle == "dc"     ? truthlab::DcDirection::Both
               : principle == "dcin" ? truthlab::DcDirection::In
                                     : truthlab::DcDirection::Out;
    report = truthlab::check_dc(v, seqs, dir);
  } else if (principle == "seqind" || principle == "seqoind") {
    std::set<uint64_t> t;
    for (const Json& n : j.at("t")) t.insert(n.get<uint64_t>());
    auto seqs = truthlab::sequences_from_json(j.at("sequences"));
    report = principle == "seqind" ? truthlab::check_seqind(t, seqs)
                                   : truthlab::check_seqoind(t, seqs);
  } else if (principle == "int") {
    truthlab::Formula phi =
        truthlab::parse_formula(j.at("formula").get<std::string>());
    truthlab::TruthOracle oracle;
    if (j.contains("valuation")) {
      auto v = std::make_shared<truthlab::TruthValuation>(
          truthlab::valuation_from_json(j.at("valuation")));
      oracle = [v](truthlab::Formula f) { return v->get(f); };
    } else {
      oracle = truthlab::evaluation_oracle(budget);
    }
    report = truthlab::check_int(oracle, phi, budget);
  } else if (principle == "qfc") {
    auto v = truthlab::valuation_from_json(j.at("valuation"));
    report = truthlab::check_qfc(v, budget);
  } else if (principle == "outer") {
    const std::string kind = j.value("kind", "left");
    truthlab::BuilderKind bk =
        kind == "left"       ? truthlab::BuilderKind::LeftGrouped
        : kind == "balanced" ? truthlab::BuilderKind::Balanced
        : kind == "outer"    ? truthlab::BuilderKind::QuantifiedOuter
        : kind == "negconj"  ? truthlab::BuilderKind::NegatedConjunction
                             : truthlab::BuilderKind::Selective;
    std::vector<truthlab::SentenceSeq> samples;
    for (const Json& s : j.at("samples")) samples.push_back(formula_list(s));
    truthlab::TruthOracle oracle;
    if (j.contains("valuation")) {
      auto v = std::make_shared<truthlab::TruthValuation>(
          truthlab::valuation_from_json(j.at("valuation")));
      oracle = [v](truthlab::Formula f) { return v->get(f); };
    } else {
      oracle = truthlab::evaluation_oracle(budget);
    }
    auto outer = truthlab::check_outer_contract(truthlab::make_builder(bk),
                                                oracle, samples);
    Json out = truthlab::to_json(outer.truth);
    out["schema_version"] = 1;
    out["structural_append_ok"] = outer.structural_append_ok();
    out["structural_append_failures"] = outer.structural_append_failures;
    emit(out);
    return exit_of(outer.truth.verdict());
  } else {
    throw truthlab::Error("unknown principle: " + principle);
  }
  Json out = truthlab::to_json(report);
  out["schema_version"] = 1;
  emit(out);
  return exit_of(report.verdict());
}

int cmd_ev(const std::string& scenario_file, const std::string& audit) {
  truthlab::SatScenario sc =
      truthlab::scenario_from_json(read_json_input(scenario_file));
  auto [result, report] = truthlab::build_sat_class(sc);
  truthlab::SatClassReport validation = truthlab::validate_sat_class(
      result, truthlab::SatCheckOptions{sc.value_bound, true});
  Json out{{"schema_version", 1},
           {"construction", truthlab::to_json(report)},
           {"validation", truthlab::to_json(validation)}};
  if (audit == "full") out["result"] = truthlab::to_json(result);
  emit(out);
  return report.ok() && validation.ok() ? kPass : kViolation;
}

int cmd_cutmodel(const std::string& which, uint64_t size, uint64_t cut,
                 const std::string& seqs_file, uint64_t seed, uint64_t count,
                 uint64_t max_len, uint64_t long_threshold) {
  truthlab::CutModel m;
  if (!seqs_file.empty()) {
    m.size = size;
    m.cut = cut;
    m.sequences = truthlab::sequences_from_json(read_json_input(seqs_file));
  } else {
    truthlab::Rng rng(seed);
    m = truthlab::gen::random_cut_model(rng, size, cut, count, max_len);
  }
  m.long_threshold = long_threshold;
  truthlab::ApproxTrace trace;
  truthlab::CutConstruction construction;
  if (which == "A" || which == "a") {
    construction = truthlab::CutConstruction::A;
    trace = truthlab::construct_a(m);
  } else if (which == "B" || which == "b") {
    construction = truthlab::CutConstruction::B;
    trace = truthlab::construct_b(m);
  } else {
    throw truthlab::Error("cutmodel: --which must be A or B");
  }
  truthlab::PrincipleReport audit =
      truthlab::audit_construction(trace, m, construction);
  Json out{{"schema_version", 1},
           {"which", which},
           {"trace", truthlab::to_json(trace)},
           {"audit", truthlab::to_json(audit)}};
  emit(out);
  return exit_of(audit.verdict());
}

int cmd_suite(uint64_t seed, uint64_t budget, const std::string& only) {
  truthlab::SuiteConfig config;
  config.seed = seed;
  config.budget = budget;
  config.only = only;
  config.progress = [](const truthlab::CheckResult& r) {
    std::cerr << r.id << " " << (r.pass ? "pass" : "FAIL") << " ("
              << r.seconds << "s): " << r.name << "\n"
              << std::flush;
  };
  truthlab::SuiteReport report = truthlab::run_suite(config);
  emit(truthlab::suite_report_json(report));
  if (report.all_pass()) return kPass;
  return report.any_violation() ? kViolation : kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite laboratory for compositional truth principles"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  uint64_t budget = 64, seed = 7, long_cut = 4;
  std::string variant = "numeral", format = "json";
  app.add_option("--budget", budget, "quantifier search budget")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized commands")
      ->capture_default_str();
  app.add_option("--long-cut", long_cut, "long-disjunction threshold")
      ->capture_default_str();
  app.add_option("--variant", variant, "quantifier clause variant")
      ->check(CLI::IsMember({"numeral", "term"}))
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json"}))
      ->capture_default_str();

  auto* parse_cmd = app.add_subcommand("parse", "parse a formula");
  std::string parse_text;
  parse_cmd->add_option("formula", parse_text)->required();

  auto* encode_cmd =
      app.add_subcommand("encode", "syntax code of a formula or term");
  std::string encode_text;
  encode_cmd->add_option("text", encode_text)->required();

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a sentence");
  std::string eval_text;
  eval_cmd->add_option("sentence", eval_text)->required();

  auto* disj_cmd = app.add_subcommand("disj", "disjunction builders");
  auto* disj_build = disj_cmd->add_subcommand("build", "build a disjunction");
  std::string disj_kind = "left", disj_input;
  bool disj_eval = false;
  disj_build->add_option("--kind", disj_kind)
      ->check(
          CLI::IsMember({"left", "balanced", "outer", "negconj", "selective"}));
  disj_build->add_option("--input", disj_input,
                         "JSON list of formula strings (default stdin)");
  disj_build->add_flag("--eval", disj_eval, "also evaluate the result");

  auto* yablo_cmd = app.add_subcommand("yablo", "sequence transform");
  auto* yablo_run = yablo_cmd->add_subcommand("run", "transform and check");
  uint64_t yablo_length = 8;
  std::string yablo_seq;
  yablo_run->add_option("--length", yablo_length)->capture_default_str();
  yablo_run->add_option("--seq", yablo_seq, "JSON list of formula strings");

  auto* check_cmd = app.add_subcommand("check", "principle checkers");
  std::string principle, check_input;
  check_cmd->add_option("--principle", principle)
      ->required()
      ->check(CLI::IsMember({"ctminus", "dc", "dcin", "dcout", "seqind",
                             "seqoind", "int", "qfc", "outer"}));
  check_cmd->add_option("--input", check_input, "JSON input (default stdin)");

  auto* ev_cmd = app.add_subcommand("ev", "stagewise construction engine");
  auto* ev_run = ev_cmd->add_subcommand("run", "run a scenario");
  std::string ev_scenario, ev_audit = "summary";
  ev_run->add_option("scenario", ev_scenario)->required();
  ev_run->add_option("--audit", ev_audit)
      ->check(CLI::IsMember({"summary", "full"}));

  auto* cut_cmd = app.add_subcommand("cutmodel", "cut approximations");
  auto* cut_run = cut_cmd->add_subcommand("run", "run a construction");
  std::string cut_which, cut_seqs;
  uint64_t cut_size = 2000, cut_cut = 1000, cut_count = 300, cut_maxlen = 50,
           cut_threshold = 0;
  cut_run->add_option("--which", cut_which)->required();
  cut_run->add_option("--size", cut_size)->capture_default_str();
  cut_run->add_option("--cut", cut_cut)->capture_default_str();
  cut_run->add_option("--seqs", cut_seqs, "JSON list of number sequences");
  cut_run->add_option("--count", cut_count)->capture_default_str();
  cut_run->add_option("--max-len", cut_maxlen)->capture_default_str();
  cut_run->add_option("--long-threshold", cut_threshold)
      ->capture_default_str();

  auto* suite_cmd = app.add_subcommand("suite", "run the full check suite");
  std::string suite_only;
  suite_cmd->add_option("--only", suite_only, "check id prefix filter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints usage/help text
    return code == 0 ? kPass : kError;
  }

  try {
    if (*parse_cmd) return cmd_parse(parse_text);
    if (*encode_cmd) return cmd_encode(encode_text);
    if (*eval_cmd) return cmd_eval(eval_text, budget);
    if (*disj_build) return cmd_disj(disj_kind, disj_input, disj_eval, budget);
    if (*yablo_run) return cmd_yablo(yablo_length, budget, yablo_seq);
    if (*check_cmd) return cmd_check(principle, check_input, budget, variant);
    if (*ev_run) return cmd_ev(ev_scenario, ev_audit);
    if (*cut_run)
      return cmd_cutmodel(cut_which, cut_size, cut_cut, cut_seqs, seed,
                          cut_count, cut_maxlen, cut_threshold);
    if (*suite_cmd) return cmd_suite(seed, budget, suite_only);
    std::cerr << "no subcommand selected\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
