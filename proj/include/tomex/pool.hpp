#pragma once

#include <string>
#include <vector>

#include "tomex/formula.hpp"

namespace tomex {

/// Finite candidate space for explanations, explananda and revision inputs.
///
/// Members are conjunctions of literals over distinct `symbols` with at most
/// `max_literals` conjuncts (the empty conjunction is `true`). With
/// `modal_depth == 1` every non-empty propositional member l also yields
/// B[j] l and ~B[j] l for each pool agent j.
///
/// Canonical order: by letter count, then propositional before modal, then
/// lexicographically by (symbol, positive-before-negative) literal tuples;
/// modal members are further ordered by agent and polarity.
struct FormulaPool {
  std::vector<std::string> symbols;
  std::vector<AgentId> agents;
  unsigned max_literals = 2;
  unsigned modal_depth = 0;

  std::vector<Formula> members(const Vocabulary& vocabulary) const;
};

/// Pool over the full vocabulary and agent list.
FormulaPool full_pool(const Vocabulary& vocabulary, std::vector<AgentId> agents,
                      unsigned max_literals, unsigned modal_depth = 0);

}  // namespace tomex
