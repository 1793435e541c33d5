#include "tomex/revision.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "tomex/error.hpp"
#include "tomex/pool.hpp"

namespace tomex {

bool Rnf::is_propositional() const noexcept { return positive.empty() && negative.empty(); }

namespace {

[[noreturn]] void unsupported(const Formula& f, const std::string& why) {
  throw Error(ErrorCode::UnsupportedRevisionFormula,
              "cannot revise by " + render(f) + ": " + why);
}

void decompose(const Formula& f, Rnf& out) {
  if (f.is_modal_free()) {
    if (f.kind() == FormulaKind::And) {
      decompose(f.lhs(), out);
      decompose(f.rhs(), out);
    } else {
      out.propositional.push_back(f);
    }
    return;
  }
  switch (f.kind()) {
    case FormulaKind::And:
      decompose(f.lhs(), out);
      decompose(f.rhs(), out);
      return;
    case FormulaKind::Believes:
      out.positive.push_back({f.agent(), to_rnf(f.operand())});
      return;
    case FormulaKind::Not: {
      const Formula& inner = f.operand();
      if (inner.kind() == FormulaKind::Not) {
        decompose(inner.operand(), out);
        return;
      }
      if (inner.kind() == FormulaKind::Believes) {
        if (!inner.operand().is_modal_free()) {
          unsupported(f, "negated belief with a modal operand");
        }
        out.negative.push_back({inner.agent(), inner.operand()});
        return;
      }
      if (inner.kind() == FormulaKind::AfterRevision) {
        unsupported(f, "nested revision operator");
      }
      unsupported(f, "negation over a modal conjunction");
    }
    case FormulaKind::AfterRevision:
      unsupported(f, "nested revision operator");
    case FormulaKind::Atom:
      break;
  }
  unsupported(f, "unexpected formula shape");
}

std::string render_conjunct(const Formula& f) {
  if (f.kind() == FormulaKind::Not && f.operand().is_atom()) return "~" + f.operand().symbol();
  return render(f);
}

std::string rnf_string(const Rnf& rnf, const char* sep) {
  std::string out = "(";
  if (rnf.propositional.empty()) {
    out += "true";
  } else {
    for (std::size_t i = 0; i < rnf.propositional.size(); ++i) {
      if (i != 0) out += " & ";
      out += render_conjunct(rnf.propositional[i]);
    }
  }
  out += sep;
  out += "[";
  for (std::size_t i = 0; i < rnf.positive.size(); ++i) {
    if (i != 0) out += ", ";
    out += "(" + rnf.positive[i].agent.name() + ", " + rnf_string(rnf.positive[i].content, ";") + ")";
  }
  out += "]";
  out += sep;
  out += "[";
  for (std::size_t i = 0; i < rnf.negative.size(); ++i) {
    if (i != 0) out += ", ";
    out += "(" + rnf.negative[i].agent.name() + ", " + render_conjunct(rnf.negative[i].content) + ")";
  }
  out += "])";
  return out;
}

WorldSet conjunct_worlds(const std::vector<Formula>& conjuncts, const Vocabulary& vocabulary) {
  WorldSet out = WorldSet::all(vocabulary.size());
  for (const auto& f : conjuncts) out = out & models_of(f, vocabulary);
  return out;
}

StratifiedBase clause_base(const WorldSet& worlds, const Frame& frame) {
  StratifiedBase base;
  auto clauses = excluding_clauses(worlds, frame.law_worlds, frame.vocabulary);
  if (!clauses.empty()) base.push_back(std::move(clauses));
  return base;
}

EpistemicState revise_prioritized(const EpistemicState& state, const std::vector<Formula>& input) {
  const Frame& frame = state.frame();
  const WorldSet admissible = frame.law_worlds & conjunct_worlds(input, frame.vocabulary);
  if (admissible.empty()) {
    return state.with_beliefs(StratifiedBase{input}, WorldSet::none(frame.vocabulary.size()));
  }
  StratifiedBase base;
  if (!input.empty()) base.push_back(input);
  WorldSet kept = admissible;
  for (const auto& stratum : state.base()) {
    Stratum survivors;
    for (const auto& f : stratum) {
      WorldSet narrowed = kept & models_of(f, frame.vocabulary);
      if (narrowed.empty()) continue;
      kept = std::move(narrowed);
      survivors.push_back(f);
    }
    if (!survivors.empty()) base.push_back(std::move(survivors));
  }
  return state.with_beliefs(std::move(base), std::move(kept));
}

EpistemicState revise_dalal(const EpistemicState& state, const std::vector<Formula>& input) {
  const Frame& frame = state.frame();
  const WorldSet admissible = frame.law_worlds & conjunct_worlds(input, frame.vocabulary);
  WorldSet result = state.worlds().empty() ? admissible : closest(state.worlds(), admissible);
  StratifiedBase base = clause_base(result, frame);
  return state.with_beliefs(std::move(base), std::move(result));
}

EpistemicState revise_own(const EpistemicState& state, const std::vector<Formula>& input) {
  switch (state.revision_operator()) {
    case RevisionOperator::dalal: return revise_dalal(state, input);
    case RevisionOperator::prioritized: break;
  }
  return revise_prioritized(state, input);
}

// Moves literals about the owner into the top level.
void absorb_self(const Rnf& rnf, const AgentId& owner, Rnf& out) {
  out.propositional.insert(out.propositional.end(), rnf.propositional.begin(),
                           rnf.propositional.end());
  for (const auto& p : rnf.positive) {
    if (p.agent == owner) {
      absorb_self(p.content, owner, out);
    } else {
      out.positive.push_back(p);
    }
  }
  out.negative.insert(out.negative.end(), rnf.negative.begin(), rnf.negative.end());
}

}  // namespace

Rnf to_rnf(const Formula& alpha) {
  Rnf out;
  decompose(alpha, out);
  return out;
}

std::string to_string(const Rnf& rnf) { return rnf_string(rnf, "; "); }

Formula propositional_part(const Rnf& rnf, const Vocabulary& vocabulary) {
  return conjoin(rnf.propositional, vocabulary);
}

EpistemicState revise(const EpistemicState& state, const Formula& alpha) {
  return revise(state, to_rnf(alpha));
}

EpistemicState revise(const EpistemicState& state, const Rnf& alpha) {
  Rnf flat;
  absorb_self(alpha, state.owner(), flat);

  EpistemicState result = flat.propositional.empty() ? state : revise_own(state, flat.propositional);
  for (const auto& n : flat.negative) {
    if (n.agent == state.owner()) result = contract(result, n.content);
  }
  if (result.depth() == 0) return result;
  for (const auto& p : flat.positive) {
    result = result.with_model(p.agent, revise(result.model_of(p.agent), p.content));
  }
  for (const auto& n : flat.negative) {
    if (n.agent == state.owner()) continue;
    result = result.with_model(n.agent, contract(result.model_of(n.agent), n.content));
  }
  return result;
}

EpistemicState contract(const EpistemicState& state, const Formula& psi) {
  const Frame& frame = state.frame();
  const WorldSet target = models_of(psi, frame.vocabulary);
  if (frame.law_worlds.subset_of(target)) {
    throw Error(ErrorCode::ContractionImpossible,
                "cannot give up " + render(psi) + ": it follows from the laws");
  }
  if (state.revision_operator() == RevisionOperator::dalal) {
    const WorldSet counter = frame.law_worlds & target.complement();
    WorldSet result = state.worlds() | (state.worlds().empty() ? counter : closest(state.worlds(), counter));
    StratifiedBase base = clause_base(result, frame);
    return state.with_beliefs(std::move(base), std::move(result));
  }
  StratifiedBase base;
  WorldSet kept = frame.law_worlds;
  for (const auto& stratum : state.base()) {
    Stratum survivors;
    for (const auto& f : stratum) {
      WorldSet narrowed = kept & models_of(f, frame.vocabulary);
      if (narrowed.subset_of(target)) continue;
      kept = std::move(narrowed);
      survivors.push_back(f);
    }
    if (!survivors.empty()) base.push_back(std::move(survivors));
  }
  return state.with_beliefs(std::move(base), std::move(kept));
}

// ---------------------------------------------------------------------------

bool PostulateReport::all_passed() const noexcept {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

const PostulateResult& PostulateReport::result(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return r;
  }
  throw Error(ErrorCode::InvalidArgument, "no postulate named '" + name + "'");
}

std::string PostulateReport::render_table() const {
  std::ostringstream os;
  os << "operator: " << to_string(op) << "\nvocabulary: {";
  for (std::size_t i = 0; i < vocabulary.size(); ++i) os << (i ? ", " : "") << vocabulary[i];
  os << "}\nstates: " << states_checked << "\ninputs: " << inputs_checked << "\n\n";
  os << std::left << std::setw(16) << "postulate" << std::setw(8) << "result" << std::setw(17)
     << "counterexamples" << "first counterexample\n";
  for (const auto& r : results) {
    os << std::setw(16) << r.name << std::setw(8) << (r.passed ? "pass" : "FAIL") << std::setw(17)
       << r.counterexamples << (r.first_counterexample.empty() ? "-" : r.first_counterexample)
       << "\n";
  }
  return os.str();
}

namespace {

std::vector<Formula> clauses_up_to(const Vocabulary& vocabulary, unsigned max_literals) {
  std::vector<Formula> out;
  FormulaPool pool{vocabulary.symbols(), {}, max_literals, 0};
  for (const auto& term : pool.members(vocabulary)) {
    if (letter_count(term) < 2) continue;
    // Same literal set as the term, joined by disjunction.
    std::vector<Formula> literals;
    Formula rest = term;
    while (rest.kind() == FormulaKind::And) {
      literals.push_back(rest.rhs());
      rest = rest.lhs();
    }
    literals.push_back(rest);
    std::reverse(literals.begin(), literals.end());
    Formula clause = literals.front();
    for (std::size_t i = 1; i < literals.size(); ++i) {
      clause = Formula::disjunction(std::move(clause), literals[i]);
    }
    out.push_back(std::move(clause));
  }
  return out;
}

struct Tally {
  PostulateResult result;
  void fail(const std::string& description) {
    result.passed = false;
    if (result.counterexamples++ == 0) result.first_counterexample = description;
  }
};

}  // namespace

PostulateReport check_agm_postulates(RevisionOperator op, const Vocabulary& vocabulary,
                                     unsigned max_literals) {
  if (vocabulary.size() > 3) {
    throw Error(ErrorCode::InvalidArgument, "the postulate harness supports at most 3 atoms");
  }
  const AgentId owner("a");
  auto frame = make_frame(vocabulary, {owner}, {});

  std::vector<Formula> inputs = FormulaPool{vocabulary.symbols(), {}, max_literals, 0}.members(vocabulary);
  for (auto& c : clauses_up_to(vocabulary, max_literals)) inputs.push_back(std::move(c));
  inputs.push_back(vocabulary.bottom());

  std::vector<std::string> names = {"closure", "success", "inclusion",
                                    "vacuity", "consistency", "extensionality"};
  std::vector<Tally> tallies(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) tallies[i].result.name = names[i];
  auto& closure = tallies[0];
  auto& success = tallies[1];
  auto& inclusion = tallies[2];
  auto& vacuity = tallies[3];
  auto& consistency = tallies[4];
  auto& extensionality = tallies[5];

  const std::size_t universe = std::size_t{1} << vocabulary.size();
  PostulateReport report;
  report.op = op;
  report.vocabulary = vocabulary.symbols();
  report.inputs_checked = inputs.size();

  for (std::size_t mask = 1; mask < (std::size_t{1} << universe); ++mask) {
    WorldSet t = WorldSet::none(vocabulary.size());
    for (std::size_t v = 0; v < universe; ++v) {
      if ((mask >> v) & 1u) t.insert(static_cast<Valuation>(v));
    }
    ++report.states_checked;
    const EpistemicState state = EpistemicState::from_worlds(frame, owner, t, 0, op);

    for (const auto& alpha : inputs) {
      const WorldSet a = models_of(alpha, vocabulary);
      const EpistemicState r = revise(state, alpha);
      const WorldSet& rw = r.worlds();
      auto describe = [&](const std::string& extra) {
        return "T=" + render_worlds(t, vocabulary) + " alpha=" + render(alpha) + " result=" +
               render_worlds(rw, vocabulary) + extra;
      };

      WorldSet base_models = frame->law_worlds;
      for (const auto& f : flatten(r.base())) base_models = base_models & models_of(f, vocabulary);
      if (!(base_models == rw)) closure.fail(describe(" base=" + render_worlds(base_models, vocabulary)));

      if (!rw.subset_of(a)) success.fail(describe(""));
      if (!(t & a).subset_of(rw)) inclusion.fail(describe(""));
      if (t.intersects(a) && !rw.subset_of(t & a)) vacuity.fail(describe(""));
      if (!a.empty() && rw.empty()) consistency.fail(describe(""));

      const Formula variants[] = {
          Formula::negation(Formula::negation(alpha)),
          Formula::conjunction(alpha, alpha),
          Formula::conjunction(alpha, vocabulary.top()),
      };
      for (const auto& variant : variants) {
        const WorldSet vw = revise(state, variant).worlds();
        if (!(vw == rw)) {
          extensionality.fail(describe(" variant=" + render(variant) + " gives " +
                                       render_worlds(vw, vocabulary)));
        }
      }
    }
  }
  for (auto& t : tallies) report.results.push_back(std::move(t.result));
  return report;
}

}  // namespace tomex
