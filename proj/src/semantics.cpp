#include "tomex/semantics.hpp"

#include <optional>

#include "tomex/error.hpp"
#include "tomex/revision.hpp"

namespace tomex {

bool entails(const EpistemicState& state, const Formula& phi) {
  return state.worlds().subset_of(models_of(phi, state.vocabulary()));
}

WorldSet truth_set(const EpistemicState& state, const Formula& phi) {
  const Vocabulary& vocabulary = state.vocabulary();
  switch (phi.kind()) {
    case FormulaKind::Atom: {
      auto index = vocabulary.index_of(phi.symbol());
      if (!index) throw Error(ErrorCode::UnknownSymbol, "unknown symbol '" + phi.symbol() + "'");
      return WorldSet::atom_mask(vocabulary.size(), *index);
    }
    case FormulaKind::Not:
      return truth_set(state, phi.operand()).complement();
    case FormulaKind::And:
      return truth_set(state, phi.lhs()) & truth_set(state, phi.rhs());
    case FormulaKind::Believes:
      return truth_at(state.model_of(phi.agent()), phi.operand())
                 ? WorldSet::all(vocabulary.size())
                 : WorldSet::none(vocabulary.size());
    case FormulaKind::AfterRevision: {
      const AgentId& j = phi.agent();
      if (j == state.owner()) return truth_set(revise(state, phi.input()), phi.body());
      return truth_set(state.with_model(j, revise(state.model_of(j), phi.input())), phi.body());
    }
  }
  return WorldSet::none(vocabulary.size());
}

bool truth_at(const EpistemicState& state, const Formula& phi) {
  if (state.worlds().empty()) return true;
  return state.worlds().subset_of(truth_set(state, phi));
}

namespace {

bool holds_checked(const StateVector& vector, const Formula& phi) {
  switch (phi.kind()) {
    case FormulaKind::Believes:
      return truth_at(vector.at(phi.agent()), phi.operand());
    case FormulaKind::Not:
      return !holds_checked(vector, phi.operand());
    case FormulaKind::And:
      return holds_checked(vector, phi.lhs()) && holds_checked(vector, phi.rhs());
    case FormulaKind::AfterRevision: {
      const AgentId& i = phi.agent();
      return holds_checked(vector.with(i, revise(vector.at(i), phi.input())), phi.body());
    }
    case FormulaKind::Atom:
      break;
  }
  throw Error(ErrorCode::NotAgentFormula, "not an agent formula: " + render(phi));
}

std::optional<EpistemicState> try_revise(const EpistemicState& state, const Formula& alpha) {
  try {
    return revise(state, alpha);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

bool holds(const StateVector& vector, const Formula& phi) {
  if (!is_agent_formula(phi)) {
    throw Error(ErrorCode::NotAgentFormula, "not an agent formula: " + render(phi));
  }
  return holds_checked(vector, phi);
}

bool states_equivalent(const EpistemicState& a, const EpistemicState& b,
                       std::span<const Formula> pool, unsigned max_seq_len) {
  const Formula bottom = a.vocabulary().bottom();
  if (truth_at(a, bottom) != truth_at(b, bottom)) return false;
  for (const auto& phi : pool) {
    if (truth_at(a, phi) != truth_at(b, phi)) return false;
  }
  if (max_seq_len == 0) return true;
  for (const auto& alpha : pool) {
    auto ra = try_revise(a, alpha);
    auto rb = try_revise(b, alpha);
    if (ra.has_value() != rb.has_value()) return false;
    if (!ra) continue;
    if (!states_equivalent(*ra, *rb, pool, max_seq_len - 1)) return false;
  }
  return true;
}

bool states_equivalent(const EpistemicState& a, const EpistemicState& b, const FormulaPool& pool,
                       unsigned max_seq_len) {
  const auto members = pool.members(a.vocabulary());
  return states_equivalent(a, b, members, max_seq_len);
}

}  // namespace tomex
