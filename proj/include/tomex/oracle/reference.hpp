// Reference evaluator used as a test oracle.
//
// Everything here works on explicit truth assignments (symbol -> bool) and
// unfolds the definitions directly: worlds are found by enumerating the truth
// table, consistency is a search for a satisfying row, Dalal distance counts
// differing symbols. It shares only the formula AST and parser with the
// engine, so agreement between the two is meaningful.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tomex/formula.hpp"
#include "tomex/state.hpp"

namespace tomex::oracle {

using Assignment = std::map<std::string, bool>;

struct RefContext {
  std::vector<std::string> vocabulary;
  std::vector<Formula> laws;
  std::vector<std::string> agents;
  std::map<std::string, std::string> operators;  // agent -> "prioritized" | "dalal"
  std::vector<Assignment> table;                 // truth_table(vocabulary)
};

struct RefState {
  std::shared_ptr<const RefContext> context;
  std::string owner;
  std::string op;
  unsigned depth = 0;
  /// Only meaningful for prioritized states; Dalal states are pure world sets.
  std::vector<std::vector<Formula>> strata;
  /// Kept in truth-table order so equal sets compare equal.
  std::vector<Assignment> worlds;
  std::map<std::string, RefState> models;
};

using RefVector = std::map<std::string, RefState>;

/// Every assignment over `vocabulary`, in a fixed order.
std::vector<Assignment> truth_table(const std::vector<std::string>& vocabulary);

/// Propositional evaluation. Throws std::logic_error on modal formulas.
bool ref_eval(const Assignment& world, const Formula& phi);

std::vector<Assignment> law_models(const RefContext& context);

/// Copies the declarative content (vocabulary, laws, strata, nested models)
/// of an engine state and recomputes every world set from scratch. Dalal
/// states keep their world set, re-derived from the base by truth table.
RefState from_engine(const EpistemicState& state);
RefVector from_engine(const StateVector& vector);

RefState ref_ignorant(const std::shared_ptr<const RefContext>& context, const std::string& agent,
                      unsigned depth);
RefState ref_model(const RefState& state, const std::string& agent);

RefState ref_revise(const RefState& state, const Formula& alpha);
RefState ref_contract(const RefState& state, const Formula& psi);

bool ref_truth(const RefState& state, const Formula& phi);
bool ref_holds(const RefVector& vector, const Formula& phi);

/// Expl(agent, alpha, beta) unfolded: after revising by alpha the agent has
/// worlds and believes beta.
bool ref_explains(const RefVector& vector, const std::string& agent, const Formula& alpha,
                  const Formula& beta);

/// Fewest differing symbols between a world of `state` and a law model of
/// the propositional conjuncts of alpha. Returns -1 when there is no such
/// model and 0 when `state` has no worlds.
int ref_plausibility(const RefState& state, const Formula& alpha);

/// Classical abduction against a theory given by its models: T u {alpha} is
/// consistent and entails beta.
bool classical_explains(const std::vector<Assignment>& theory, const Formula& alpha,
                        const Formula& beta);

}  // namespace tomex::oracle
