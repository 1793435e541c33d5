#include "tomex/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tomex/error.hpp"
#include "tomex/explain.hpp"
#include "tomex/oracle/theorems.hpp"
#include "tomex/revision.hpp"
#include "tomex/scenario.hpp"
#include "tomex/semantics.hpp"

#ifndef TOMEX_FIXTURE_DIR
#define TOMEX_FIXTURE_DIR "fixtures"
#endif

namespace tomex::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

enum class Format { table, records };

struct Loaded {
  Scenario scenario;
  StateVector vector;
};

Loaded load(const std::string& path, std::ostream& err) {
  Scenario scenario = load_scenario(path);
  BuildResult built = build_vector(scenario);
  for (const auto& w : built.warnings) err << "warning: " << w << "\n";
  return {std::move(scenario), std::move(built.vector)};
}

AgentId agent_in(const Scenario& s, const std::string& name) {
  for (const auto& a : s.agents) {
    if (a.name() == name) return a;
  }
  throw Error(ErrorCode::UnknownAgent, "unknown agent '" + name + "'");
}

Formula formula_in(const Scenario& s, const std::string& text) {
  return parse(text, s.vocabulary, s.agents);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? sep : "") + items[k];
  return out;
}

// Left-aligned text columns sized to their widest cell.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

FormulaPool explanation_pool(const Scenario& s, const Formula& beta, unsigned literals,
                             unsigned modal_depth, const std::string& abducibles) {
  if (abducibles.empty()) return abducible_pool(s.vocabulary, s.agents, beta, literals, modal_depth);
  return FormulaPool{split_list(abducibles), s.agents, literals, modal_depth};
}

std::string pool_summary(const FormulaPool& pool) {
  return "{" + join(pool.symbols, ", ") + "} literals<=" + std::to_string(pool.max_literals) +
         " modal-depth " + std::to_string(pool.modal_depth);
}

// -- check --------------------------------------------------------------------

int cmd_check(const std::string& path, const std::string& text, Format format, std::ostream& out,
              std::ostream& err) {
  Loaded l = load(path, err);
  if (!text.empty()) {
    const bool value = holds(l.vector, formula_in(l.scenario, text));
    if (format == Format::records) {
      out << json{{"formula", text}, {"value", value}}.dump() << "\n";
    } else {
      out << (value ? "true" : "false") << "\n";
    }
    return value ? kAffirmative : kNegative;
  }
  if (l.scenario.queries.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no formula given and the scenario has no queries");
  }
  bool all_ok = true;
  std::vector<std::vector<std::string>> rows{{"value", "expected", "status", "formula"}};
  for (const auto& q : l.scenario.queries) {
    const bool value = holds(l.vector, q.formula);
    const bool ok = value == q.expected.value_or(true);
    all_ok = all_ok && ok;
    if (format == Format::records) {
      json record{{"formula", q.text}, {"value", value}, {"ok", ok}};
      record["expected"] = q.expected ? json(*q.expected) : json(nullptr);
      out << record.dump() << "\n";
    } else {
      rows.push_back({value ? "true" : "false",
                      q.expected ? (*q.expected ? "true" : "false") : "-", ok ? "ok" : "MISMATCH",
                      q.text});
    }
  }
  if (format == Format::table) {
    print_table(out, rows);
    out << (all_ok ? "all queries as expected" : "some queries differ from expectation") << "\n";
  }
  return all_ok ? kAffirmative : kNegative;
}

// -- explain ------------------------------------------------------------------

struct ExplainArgs {
  std::string scenario;
  std::string explainer;
  std::string explainee;
  std::string explanandum;
  unsigned pool_literals = 2;
  unsigned modal_depth = 0;
  std::string order = "lexicographic";
  unsigned top = 0;
  std::string abducibles;
  bool objective = false;
};

int cmd_explain(const ExplainArgs& a, Format format, std::ostream& out, std::ostream& err) {
  Loaded l = load(a.scenario, err);
  const AgentId explainer = agent_in(l.scenario, a.explainer);
  const AgentId explainee = agent_in(l.scenario, a.explainee);
  const Formula beta = formula_in(l.scenario, a.explanandum);
  const FormulaPool pool =
      explanation_pool(l.scenario, beta, a.pool_literals, a.modal_depth, a.abducibles);
  const PreferenceOrder order = PreferenceOrder::parse(a.order);
  const auto ranked = synthesize(l.vector, explainer, explainee, beta, pool, order,
                                 a.objective ? Perspective::objective : Perspective::subjective);
  const std::size_t shown = a.top == 0 ? ranked.size() : std::min<std::size_t>(a.top, ranked.size());

  if (format == Format::records) {
    for (std::size_t k = 0; k < shown; ++k) {
      const auto& r = ranked[k];
      out << json{{"rank", k + 1},
                  {"candidate", render(r.candidate)},
                  {"optimal", r.optimal},
                  {"subjective", !r.subjective_for.empty()},
                  {"objective", r.objective},
                  {"letters", r.scores.letters},
                  {"plausibility", r.scores.plausibility},
                  {"truthful", r.scores.truthful}}
                 .dump()
          << "\n";
    }
    return ranked.empty() ? kNegative : kAffirmative;
  }

  out << "explainer: " << explainer.name() << "\nexplainee: " << explainee.name()
      << "\nexplanandum: " << render(beta) << "\nperspective: "
      << (a.objective ? "objective" : "subjective") << "\norder: " << order.to_string()
      << "\npool: " << pool_summary(pool) << "\n\n";
  if (ranked.empty()) {
    out << "no explanation in the pool\n";
    return kNegative;
  }
  std::vector<std::vector<std::string>> rows{
      {"rank", "candidate", "subjective", "objective", "letters", "plausibility", "truthful"}};
  for (std::size_t k = 0; k < shown; ++k) {
    const auto& r = ranked[k];
    rows.push_back({std::to_string(k + 1) + (r.optimal ? "*" : ""), render(r.candidate),
                    yes_no(!r.subjective_for.empty()), yes_no(r.objective),
                    std::to_string(r.scores.letters), std::to_string(r.scores.plausibility),
                    yes_no(r.scores.truthful)});
  }
  print_table(out, rows);
  out << "\n* optimal within the pool\n";
  return kAffirmative;
}

// -- discrepancies --------------------------------------------------------------

int cmd_discrepancies(const std::string& path, const std::string& between,
                      const std::string& perspective, unsigned literals, Format format,
                      std::ostream& out, std::ostream& err) {
  Loaded l = load(path, err);
  const auto pair = split_list(between);
  if (pair.size() != 2) {
    throw Error(ErrorCode::InvalidArgument, "--between expects two agents, as in mary,bob");
  }
  const AgentId i = agent_in(l.scenario, pair[0]);
  const AgentId j = agent_in(l.scenario, pair[1]);
  std::optional<AgentId> p;
  if (!perspective.empty()) p = agent_in(l.scenario, perspective);
  FormulaPool pool{l.scenario.vocabulary.symbols(), l.scenario.agents, literals, 0};
  auto found = find_discrepancies(l.vector, i, j, pool, p);
  // The empty conjunction is never a discrepancy between consistent agents;
  // drop it so inconsistent agents do not list it.
  found.erase(std::remove(found.begin(), found.end(), l.scenario.vocabulary.top()), found.end());

  if (format == Format::records) {
    for (const auto& f : found) {
      json record{{"between", {i.name(), j.name()}}, {"discrepancy", render(f)}};
      record["perspective"] = p ? json(p->name()) : json(nullptr);
      out << record.dump() << "\n";
    }
  } else {
    out << "discrepancies between " << i.name() << " and " << j.name()
        << (p ? " from the perspective of " + p->name() : std::string(" (objective)")) << ":\n";
    if (found.empty()) out << "  none\n";
    for (const auto& f : found) out << "  " << render(f) << "\n";
  }
  return found.empty() ? kNegative : kAffirmative;
}

// -- adequacy -----------------------------------------------------------------

int cmd_adequacy(const ExplainArgs& a, Format format, std::ostream& out, std::ostream& err) {
  Loaded l = load(a.scenario, err);
  const AgentId i = agent_in(l.scenario, a.explainer);
  const AgentId j = agent_in(l.scenario, a.explainee);
  const Formula beta = formula_in(l.scenario, a.explanandum);
  const FormulaPool pool = explanation_pool(l.scenario, beta, a.pool_literals, a.modal_depth, a.abducibles);
  const AdequacyResult result = is_adequate(l.vector, i, j, beta, pool);

  if (format == Format::records) {
    json witnesses = json::array();
    for (const auto& w : result.witnesses) {
      witnesses.push_back(
          {{"candidate", render(w.alpha)}, {"subjective", w.subjective}, {"objective", w.objective}});
    }
    out << json{{"explainer", i.name()},
                {"explainee", j.name()},
                {"explanandum", render(beta)},
                {"adequate", result.adequate},
                {"witnesses", witnesses}}
               .dump()
        << "\n";
  } else {
    out << i.name() << "'s model of " << j.name() << " is "
        << (result.adequate ? "adequate" : "inadequate") << " for " << render(beta)
        << "\npool: " << pool_summary(pool) << "\n";
    if (!result.witnesses.empty()) {
      out << "\n";
      std::vector<std::vector<std::string>> rows{{"candidate", "subjective", "objective"}};
      for (const auto& w : result.witnesses) {
        rows.push_back({render(w.alpha), yes_no(w.subjective), yes_no(w.objective)});
      }
      print_table(out, rows);
    }
  }
  return result.adequate ? kAffirmative : kNegative;
}

// -- postulates ---------------------------------------------------------------

int cmd_postulates(const std::string& op, const std::string& vocab, unsigned literals,
                   Format format, std::ostream& out) {
  const auto report =
      check_agm_postulates(parse_revision_operator(op), Vocabulary(split_list(vocab)), literals);
  if (format == Format::records) {
    for (const auto& r : report.results) {
      out << json{{"operator", op},
                  {"postulate", r.name},
                  {"passed", r.passed},
                  {"counterexamples", r.counterexamples},
                  {"first_counterexample", r.first_counterexample}}
                 .dump()
          << "\n";
    }
  } else {
    out << report.render_table();
  }
  return kAffirmative;
}

// -- verify-theorems ----------------------------------------------------------

int cmd_verify(const std::vector<std::string>& scenario_paths, const std::string& fixtures,
               const oracle::TheoremBounds& bounds, Format format, std::ostream& out) {
  std::vector<fs::path> paths(scenario_paths.begin(), scenario_paths.end());
  if (paths.empty()) {
    const fs::path dir = fixtures.empty() ? fs::path(TOMEX_FIXTURE_DIR) : fs::path(fixtures);
    if (!fs::is_directory(dir)) {
      throw Error(ErrorCode::InvalidArgument, "fixture directory not found: " + dir.string());
    }
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() == ".scn") paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end());
  }
  std::vector<oracle::NamedScenario> scenarios;
  for (const auto& p : paths) scenarios.emplace_back(p.stem().string(), load_scenario(p));

  const auto reports = oracle::verify_all(scenarios, bounds);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (format == Format::records) {
    for (const auto& r : reports) {
      out << json{{"id", r.id},
                  {"claim", r.claim},
                  {"checked", r.instances_checked},
                  {"excluded", r.premise_excluded},
                  {"extra", r.extra},
                  {"violations", r.violations}}
                 .dump()
          << "\n";
    }
  } else {
    std::vector<std::string> names;
    for (const auto& [name, s] : scenarios) names.push_back(name);
    out << "scenarios: " << join(names, ", ") << "\nbounds: vocabulary " << bounds.vocab_size
        << ", literals " << bounds.max_literals << ", sequences " << bounds.max_seq_len
        << ", pairs " << bounds.pairs_per_kind << ", seed " << bounds.seed << "\n\n"
        << oracle::render_reports(reports);
  }
  return ok ? kAffirmative : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explanations between agents that model each other's beliefs", "tomex"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "table";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"table", "records"}))
      ->capture_default_str();

  std::string check_path, check_formula;
  auto* check = app.add_subcommand("check", "Evaluate an agent formula (or the scenario's queries)");
  check->add_option("scenario", check_path, "Scenario file")->required();
  check->add_option("formula", check_formula, "Agent formula");

  ExplainArgs ex;
  auto* explain = app.add_subcommand("explain", "Rank explanations of an explanandum");
  explain->add_option("scenario", ex.scenario, "Scenario file")->required();
  explain->add_option("--explainer", ex.explainer)->required();
  explain->add_option("--explainee", ex.explainee)->required();
  explain->add_option("--explanandum", ex.explanandum)->required();
  explain->add_option("--pool-literals", ex.pool_literals)->capture_default_str();
  explain->add_option("--modal-depth", ex.modal_depth)->check(CLI::Range(0, 1))->capture_default_str();
  explain->add_option("--order", ex.order, "min_letters, plausibility, semantic_minimality, "
                                           "truthful or lexicographic(...)")
      ->capture_default_str();
  explain->add_option("--top", ex.top, "Show at most this many rows (0 = all)");
  explain->add_option("--abducibles", ex.abducibles,
                      "Comma-separated pool symbols (default: symbols not in the explanandum)");
  explain->add_flag("--objective", ex.objective, "Rank actual explanations instead of believed ones");

  std::string disc_path, between, perspective;
  unsigned disc_literals = 1;
  auto* disc = app.add_subcommand("discrepancies", "List beliefs one agent holds and another denies");
  disc->add_option("scenario", disc_path, "Scenario file")->required();
  disc->add_option("--between", between, "Two agents, as in mary,bob")->required();
  disc->add_option("--perspective", perspective, "Evaluate inside this agent's beliefs");
  disc->add_option("--pool-literals", disc_literals)->capture_default_str();

  ExplainArgs ad;
  auto* adequacy = app.add_subcommand("adequacy", "Compare believed and actual explanations");
  adequacy->add_option("scenario", ad.scenario, "Scenario file")->required();
  adequacy->add_option("--explainer", ad.explainer)->required();
  adequacy->add_option("--explainee", ad.explainee)->required();
  adequacy->add_option("--explanandum", ad.explanandum)->required();
  adequacy->add_option("--pool-literals", ad.pool_literals)->capture_default_str();
  adequacy->add_option("--modal-depth", ad.modal_depth)->check(CLI::Range(0, 1))->capture_default_str();
  adequacy->add_option("--abducibles", ad.abducibles);

  std::string op = "dalal", vocab = "p,q";
  unsigned postulate_literals = 3;
  auto* postulates = app.add_subcommand("postulates", "Check the AGM postulates exhaustively");
  postulates->add_option("--operator", op)->check(CLI::IsMember({"dalal", "prioritized"}))->capture_default_str();
  postulates->add_option("--vocab", vocab, "Up to three symbols")->capture_default_str();
  postulates->add_option("--max-literals", postulate_literals)->capture_default_str();

  std::vector<std::string> verify_paths;
  std::string fixtures;
  oracle::TheoremBounds bounds;
  auto* verify = app.add_subcommand("verify-theorems", "Run the bounded theorem suites");
  verify->add_option("--scenario", verify_paths, "Scenario file (repeatable)");
  verify->add_option("--fixtures", fixtures, "Directory of .scn files used when no --scenario is given");
  verify->add_option("--vocab-size", bounds.vocab_size)->check(CLI::Range(1, 3))->capture_default_str();
  verify->add_option("--max-literals", bounds.max_literals)->capture_default_str();
  verify->add_option("--max-seq-len", bounds.max_seq_len)->capture_default_str();
  verify->add_option("--pairs", bounds.pairs_per_kind)->capture_default_str();
  verify->add_option("--seed", bounds.seed)->capture_default_str();

  std::vector<const char*> argv{"tomex"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAffirmative : kError;
  }

  const Format format = format_name == "records" ? Format::records : Format::table;
  try {
    if (*check) return cmd_check(check_path, check_formula, format, out, err);
    if (*explain) return cmd_explain(ex, format, out, err);
    if (*disc) return cmd_discrepancies(disc_path, between, perspective, disc_literals, format, out, err);
    if (*adequacy) return cmd_adequacy(ad, format, out, err);
    if (*postulates) return cmd_postulates(op, vocab, postulate_literals, format, out);
    if (*verify) return cmd_verify(verify_paths, fixtures, bounds, format, out);
  } catch (const Error& e) {
    err << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace tomex::cli
