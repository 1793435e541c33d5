#include "tomex/oracle/reference.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace tomex::oracle {

std::vector<Assignment> truth_table(const std::vector<std::string>& vocabulary) {
  std::vector<Assignment> rows{Assignment{}};
  for (const auto& symbol : vocabulary) {
    std::vector<Assignment> next;
    for (const auto& row : rows) {
      for (bool value : {false, true}) {
        Assignment extended = row;
        extended[symbol] = value;
        next.push_back(std::move(extended));
      }
    }
    rows = std::move(next);
  }
  return rows;
}

bool ref_eval(const Assignment& world, const Formula& phi) {
  switch (phi.kind()) {
    case FormulaKind::Atom: return world.at(phi.symbol());
    case FormulaKind::Not: return !ref_eval(world, phi.operand());
    case FormulaKind::And: return ref_eval(world, phi.lhs()) && ref_eval(world, phi.rhs());
    default: break;
  }
  throw std::logic_error("reference: modal formula in propositional position: " + render(phi));
}

namespace {

bool satisfies_all(const Assignment& world, const std::vector<Formula>& formulas) {
  return std::all_of(formulas.begin(), formulas.end(),
                     [&](const Formula& f) { return ref_eval(world, f); });
}

std::vector<Assignment> filter(const std::vector<Assignment>& rows,
                               const std::vector<Formula>& formulas) {
  std::vector<Assignment> out;
  for (const auto& row : rows) {
    if (satisfies_all(row, formulas)) out.push_back(row);
  }
  return out;
}

bool any_model(const RefContext& context, const std::vector<Formula>& formulas) {
  std::vector<Assignment> fallback;
  const std::vector<Assignment>* rows = &context.table;
  if (rows->empty()) rows = &(fallback = truth_table(context.vocabulary));
  for (const auto& row : *rows) {
    if (satisfies_all(row, context.laws) && satisfies_all(row, formulas)) return true;
  }
  return false;
}

unsigned differing(const Assignment& a, const Assignment& b) {
  unsigned count = 0;
  for (const auto& [symbol, value] : a) {
    if (b.at(symbol) != value) ++count;
  }
  return count;
}

bool member(const std::vector<Assignment>& set, const Assignment& row) {
  return std::find(set.begin(), set.end(), row) != set.end();
}

std::vector<Formula> all_of_strata(const std::vector<std::vector<Formula>>& strata) {
  std::vector<Formula> out;
  for (const auto& s : strata) out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::string operator_for(const RefContext& context, const std::string& agent) {
  auto it = context.operators.find(agent);
  return it == context.operators.end() ? "prioritized" : it->second;
}

// A revision input split into its parts.
struct Split {
  std::vector<Formula> props;
  std::vector<std::pair<std::string, Formula>> positive;
  std::vector<std::pair<std::string, Formula>> negative;
};

void split_into(const Formula& phi, Split& out) {
  switch (phi.kind()) {
    case FormulaKind::Atom:
      out.props.push_back(phi);
      return;
    case FormulaKind::And:
      split_into(phi.lhs(), out);
      split_into(phi.rhs(), out);
      return;
    case FormulaKind::Believes:
      out.positive.emplace_back(phi.agent().name(), phi.operand());
      return;
    case FormulaKind::Not: {
      const Formula& x = phi.operand();
      if (x.is_modal_free()) {
        out.props.push_back(phi);
        return;
      }
      if (x.kind() == FormulaKind::Not) {
        split_into(x.operand(), out);
        return;
      }
      if (x.kind() == FormulaKind::Believes && x.operand().is_modal_free()) {
        out.negative.emplace_back(x.agent().name(), x.operand());
        return;
      }
      break;
    }
    case FormulaKind::AfterRevision:
      break;
  }
  throw std::invalid_argument("reference: revision input outside the supported fragment: " +
                              render(phi));
}

Split split_for(const Formula& alpha, const std::string& owner) {
  Split raw;
  split_into(alpha, raw);
  Split out;
  out.props = raw.props;
  for (const auto& [agent, content] : raw.positive) {
    if (agent == owner) {
      Split inner = split_for(content, owner);
      out.props.insert(out.props.end(), inner.props.begin(), inner.props.end());
      out.positive.insert(out.positive.end(), inner.positive.begin(), inner.positive.end());
      out.negative.insert(out.negative.end(), inner.negative.begin(), inner.negative.end());
    } else {
      out.positive.emplace_back(agent, content);
    }
  }
  out.negative.insert(out.negative.end(), raw.negative.begin(), raw.negative.end());
  return out;
}

RefState revise_own(const RefState& state, const std::vector<Formula>& props) {
  const RefContext& context = *state.context;
  RefState out = state;
  const auto admissible = filter(law_models(context), props);
  if (state.op == "dalal") {
    if (state.worlds.empty() || admissible.empty()) {
      out.worlds = admissible;
    } else {
      unsigned best = std::numeric_limits<unsigned>::max();
      for (const auto& a : admissible) {
        for (const auto& w : state.worlds) best = std::min(best, differing(a, w));
      }
      out.worlds.clear();
      for (const auto& a : admissible) {
        bool near = false;
        for (const auto& w : state.worlds) near = near || differing(a, w) == best;
        if (near) out.worlds.push_back(a);
      }
    }
    out.strata.clear();
    return out;
  }
  if (admissible.empty()) {
    out.strata = {props};
    out.worlds.clear();
    return out;
  }
  std::vector<Formula> kept = props;
  out.strata.clear();
  if (!props.empty()) out.strata.push_back(props);
  for (const auto& stratum : state.strata) {
    std::vector<Formula> survivors;
    for (const auto& f : stratum) {
      kept.push_back(f);
      if (any_model(context, kept)) {
        survivors.push_back(f);
      } else {
        kept.pop_back();
      }
    }
    if (!survivors.empty()) out.strata.push_back(std::move(survivors));
  }
  out.worlds = filter(law_models(context), kept);
  return out;
}

bool holds_at(const Assignment& world, const RefState& state, const Formula& phi) {
  switch (phi.kind()) {
    case FormulaKind::Atom: return world.at(phi.symbol());
    case FormulaKind::Not: return !holds_at(world, state, phi.operand());
    case FormulaKind::And:
      return holds_at(world, state, phi.lhs()) && holds_at(world, state, phi.rhs());
    case FormulaKind::Believes: return ref_truth(ref_model(state, phi.agent().name()), phi.operand());
    case FormulaKind::AfterRevision: {
      const std::string j = phi.agent().name();
      if (j == state.owner) return holds_at(world, ref_revise(state, phi.input()), phi.body());
      RefState changed = state;
      if (state.depth > 0) changed.models[j] = ref_revise(ref_model(state, j), phi.input());
      return holds_at(world, changed, phi.body());
    }
  }
  return false;
}

RefState copy_state(const EpistemicState& state, const std::shared_ptr<const RefContext>& context) {
  RefState out;
  out.context = context;
  out.owner = state.owner().name();
  out.op = std::string(to_string(state.revision_operator()));
  out.depth = state.depth();
  for (const auto& stratum : state.base()) out.strata.push_back(stratum);
  out.worlds = filter(law_models(*context), all_of_strata(out.strata));
  for (const auto& [agent, model] : state.models()) {
    out.models.emplace(agent.name(), copy_state(model, context));
  }
  return out;
}

std::shared_ptr<const RefContext> context_of(const Frame& frame) {
  auto context = std::make_shared<RefContext>();
  context->vocabulary = frame.vocabulary.symbols();
  context->laws = frame.laws;
  context->table = truth_table(context->vocabulary);
  for (const auto& agent : frame.agents) {
    context->agents.push_back(agent.name());
    context->operators[agent.name()] = std::string(to_string(frame.operator_of(agent)));
  }
  return context;
}

}  // namespace

std::vector<Assignment> law_models(const RefContext& context) {
  if (context.table.empty()) return filter(truth_table(context.vocabulary), context.laws);
  return filter(context.table, context.laws);
}

RefState from_engine(const EpistemicState& state) {
  return copy_state(state, context_of(state.frame()));
}

RefVector from_engine(const StateVector& vector) {
  RefVector out;
  if (vector.states().empty()) return out;
  const auto context = context_of(vector.states().begin()->second.frame());
  for (const auto& [agent, state] : vector.states()) {
    out.emplace(agent.name(), copy_state(state, context));
  }
  return out;
}

RefState ref_ignorant(const std::shared_ptr<const RefContext>& context, const std::string& agent,
                      unsigned depth) {
  RefState out;
  out.context = context;
  out.owner = agent;
  out.op = operator_for(*context, agent);
  out.depth = depth;
  out.worlds = law_models(*context);
  if (depth > 0) {
    for (const auto& other : context->agents) {
      if (other != agent) out.models.emplace(other, ref_ignorant(context, other, depth - 1));
    }
  }
  return out;
}

RefState ref_model(const RefState& state, const std::string& agent) {
  if (agent == state.owner) return state;
  auto it = state.models.find(agent);
  if (it != state.models.end()) return it->second;
  return ref_ignorant(state.context, agent, state.depth == 0 ? 0 : state.depth - 1);
}

RefState ref_contract(const RefState& state, const Formula& psi) {
  const RefContext& context = *state.context;
  const auto laws = law_models(context);
  std::vector<Assignment> counter;
  for (const auto& row : laws) {
    if (!ref_eval(row, psi)) counter.push_back(row);
  }
  if (counter.empty()) throw std::invalid_argument("reference: contraction by a law consequence");

  RefState out = state;
  if (state.op == "dalal") {
    std::vector<Assignment> extra = counter;
    if (!state.worlds.empty()) {
      unsigned best = std::numeric_limits<unsigned>::max();
      for (const auto& c : counter) {
        for (const auto& w : state.worlds) best = std::min(best, differing(c, w));
      }
      extra.clear();
      for (const auto& c : counter) {
        for (const auto& w : state.worlds) {
          if (differing(c, w) == best) {
            extra.push_back(c);
            break;
          }
        }
      }
    }
    out.worlds.clear();
    for (const auto& row : laws) {
      if (member(state.worlds, row) || member(extra, row)) out.worlds.push_back(row);
    }
    out.strata.clear();
    return out;
  }

  const Formula not_psi = Formula::negation(psi);
  std::vector<Formula> kept;
  out.strata.clear();
  for (const auto& stratum : state.strata) {
    std::vector<Formula> survivors;
    for (const auto& f : stratum) {
      kept.push_back(f);
      std::vector<Formula> probe = kept;
      probe.push_back(not_psi);
      if (any_model(context, probe)) {
        survivors.push_back(f);
      } else {
        kept.pop_back();
      }
    }
    if (!survivors.empty()) out.strata.push_back(std::move(survivors));
  }
  out.worlds = filter(laws, kept);
  return out;
}

RefState ref_revise(const RefState& state, const Formula& alpha) {
  const Split parts = split_for(alpha, state.owner);
  RefState out = parts.props.empty() ? state : revise_own(state, parts.props);
  for (const auto& [agent, psi] : parts.negative) {
    if (agent == state.owner) out = ref_contract(out, psi);
  }
  if (out.depth == 0) return out;
  for (const auto& [agent, psi] : parts.positive) {
    out.models[agent] = ref_revise(ref_model(out, agent), psi);
  }
  for (const auto& [agent, psi] : parts.negative) {
    if (agent != state.owner) out.models[agent] = ref_contract(ref_model(out, agent), psi);
  }
  return out;
}

bool ref_truth(const RefState& state, const Formula& phi) {
  for (const auto& world : state.worlds) {
    if (!holds_at(world, state, phi)) return false;
  }
  return true;
}

bool ref_holds(const RefVector& vector, const Formula& phi) {
  switch (phi.kind()) {
    case FormulaKind::Believes: return ref_truth(vector.at(phi.agent().name()), phi.operand());
    case FormulaKind::Not: return !ref_holds(vector, phi.operand());
    case FormulaKind::And: return ref_holds(vector, phi.lhs()) && ref_holds(vector, phi.rhs());
    case FormulaKind::AfterRevision: {
      RefVector changed = vector;
      const std::string i = phi.agent().name();
      changed[i] = ref_revise(vector.at(i), phi.input());
      return ref_holds(changed, phi.body());
    }
    case FormulaKind::Atom: break;
  }
  throw std::invalid_argument("reference: not an agent formula: " + render(phi));
}

bool ref_explains(const RefVector& vector, const std::string& agent, const Formula& alpha,
                  const Formula& beta) {
  const RefState revised = ref_revise(vector.at(agent), alpha);
  return !revised.worlds.empty() && ref_truth(revised, beta);
}

int ref_plausibility(const RefState& state, const Formula& alpha) {
  const Split parts = split_for(alpha, state.owner);
  const auto targets = filter(law_models(*state.context), parts.props);
  if (targets.empty()) return -1;
  if (state.worlds.empty()) return 0;
  unsigned best = std::numeric_limits<unsigned>::max();
  for (const auto& t : targets) {
    for (const auto& w : state.worlds) best = std::min(best, differing(t, w));
  }
  return static_cast<int>(best);
}

bool classical_explains(const std::vector<Assignment>& theory, const Formula& alpha,
                        const Formula& beta) {
  bool consistent = false;
  for (const auto& row : theory) {
    if (!ref_eval(row, alpha)) continue;
    consistent = true;
    if (!ref_eval(row, beta)) return false;
  }
  return consistent;
}

}  // namespace tomex::oracle
