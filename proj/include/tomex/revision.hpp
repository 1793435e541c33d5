// Belief revision e * alpha for concrete states.
//
// Revision inputs are restricted to a normal form: a conjunction of
// propositional conjuncts, positive belief literals B[j] psi (psi again in
// normal form) and negative belief literals ~B[j] psi (psi propositional).
// The propositional part revises the owner's own beliefs with the owner's
// operator; belief literals about other agents revise or contract the owner's
// nested model of that agent.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tomex/formula.hpp"
#include "tomex/state.hpp"

namespace tomex {

struct Rnf {
  struct Positive;
  struct Negative {
    AgentId agent;
    Formula content;  // modal-free
  };

  std::vector<Formula> propositional;  // empty means `true`
  std::vector<Positive> positive;
  std::vector<Negative> negative;

  bool is_propositional() const noexcept;
};

struct Rnf::Positive {
  AgentId agent;
  Rnf content;
};

/// Throws UnsupportedRevisionFormula for nested revision operators, negated
/// modal conjunctions and ~B[j] psi with modal psi.
Rnf to_rnf(const Formula& alpha);

/// "(rain; [(tom, (~holeInRoof;[];[]))]; [])"
std::string to_string(const Rnf& rnf);

/// The conjunction of the propositional part (`true` when empty).
Formula propositional_part(const Rnf& rnf, const Vocabulary& vocabulary);

EpistemicState revise(const EpistemicState& state, const Formula& alpha);
EpistemicState revise(const EpistemicState& state, const Rnf& alpha);

/// Gives up beliefs until `psi` is no longer entailed. Throws
/// ContractionImpossible when the laws entail `psi`.
EpistemicState contract(const EpistemicState& state, const Formula& psi);

// -- Empirical AGM harness -------------------------------------------------

struct PostulateResult {
  std::string name;
  bool passed = true;
  std::size_t counterexamples = 0;
  std::string first_counterexample;
};

struct PostulateReport {
  RevisionOperator op = RevisionOperator::prioritized;
  std::vector<std::string> vocabulary;
  std::size_t states_checked = 0;
  std::size_t inputs_checked = 0;
  std::vector<PostulateResult> results;

  bool all_passed() const noexcept;
  const PostulateResult& result(const std::string& name) const;
  std::string render_table() const;
};

/// Exhaustive check over every non-empty world set of `vocabulary` (no laws)
/// and every term or clause with at most `max_literals` literals, plus
/// syntactic variants for extensionality. Postulates: closure, success,
/// inclusion, vacuity, consistency, extensionality.
PostulateReport check_agm_postulates(RevisionOperator op, const Vocabulary& vocabulary,
                                     unsigned max_literals = 3);

}  // namespace tomex
