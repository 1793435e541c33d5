// Explanation predicates, ranking, discrepancies and adequacy.
//
// Expl(i, alpha, beta) abbreviates [alpha]_i (B[i] beta & ~B[i] false): after
// revising by alpha, agent i believes beta and is still consistent. The
// subjective variants wrap the same formula in the explainer's belief
// operator, so they are evaluated entirely inside the explainer's tower.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tomex/formula.hpp"
#include "tomex/pool.hpp"
#include "tomex/state.hpp"

namespace tomex {

Formula expand_expl(const Vocabulary& vocabulary, const AgentId& i, const Formula& alpha,
                    const Formula& beta);

bool is_explanation(const StateVector& vector, const AgentId& i, const Formula& alpha,
                    const Formula& beta);

/// B[i] Expl(j, alpha, beta)
bool is_subjective_explanation(const StateVector& vector, const AgentId& i, const AgentId& j,
                               const Formula& alpha, const Formula& beta);

/// [alpha]_i ~B[i] ~beta
bool is_possibility_explanation(const StateVector& vector, const AgentId& i, const Formula& alpha,
                                const Formula& beta);

bool explains_for_all(const StateVector& vector, const AgentId& i, const Formula& alpha,
                      std::span<const std::pair<AgentId, Formula>> targets);

/// alpha explains beta to `to` but, as far as i believes, not to
/// `hidden_from`. Always false when the two coincide.
bool is_private_explanation(const StateVector& vector, const AgentId& i, const Formula& alpha,
                            const Formula& beta, const AgentId& to, const AgentId& hidden_from);

/// B[c1] B[c2] ... Expl(k, alpha, beta) for chain = [c1, c2, ...].
bool nested_explanation_holds(const StateVector& vector, std::span<const AgentId> chain,
                              const AgentId& k, const Formula& alpha, const Formula& beta);

/// Subjective explanation that the explainer itself believes.
bool is_subjectively_truthful(const StateVector& vector, const AgentId& i, const AgentId& j,
                              const Formula& alpha, const Formula& beta);

/// Fewest atom flips from a world of `state` to a law-respecting model of
/// alpha's propositional part. 0 for an inconsistent state. Throws
/// NoLawConsistentModel when no such model exists.
unsigned plausibility_distance(const EpistemicState& state, const Formula& alpha);

/// Every other candidate entails alpha under the laws of `frame`.
bool semantically_minimal(std::span<const Formula> candidates, const Formula& alpha,
                          const Frame& frame);

// -- Ranking -----------------------------------------------------------------

enum class Criterion { truthful, min_letters, plausibility, semantic_minimality };

std::string_view to_string(Criterion c) noexcept;

/// Lexicographic combination of criteria. Ties fall back to pool order.
struct PreferenceOrder {
  std::vector<Criterion> criteria;

  /// lexicographic(truthful, min_letters, plausibility)
  static PreferenceOrder standard();

  /// Accepts a single criterion name, a comma-separated list, or
  /// "lexicographic(a,b,...)". "lexicographic" alone is the standard order.
  static PreferenceOrder parse(std::string_view text);

  std::string to_string() const;
};

struct ExplanationScores {
  std::size_t letters = 0;
  unsigned plausibility = 0;
  bool truthful = false;
  /// Other explanations that do not entail this one; modal candidates get
  /// the maximum.
  std::size_t non_entailing = 0;
};

struct ExplanationResult {
  Formula candidate;
  std::size_t pool_index = 0;
  bool objective = false;
  std::vector<AgentId> subjective_for;
  ExplanationScores scores;
  bool optimal = false;
};

enum class Perspective { subjective, objective };

/// Enumerates the pool in canonical order and keeps the candidates that
/// explain beta to the explainee: from the explainer's perspective
/// (subjective) or in the actual state vector (objective). Plausibility is
/// measured on the explainer's model of the explainee, or on the explainee's
/// own state in objective mode. Results are sorted by `order`; the leading
/// block of equal keys is marked optimal. Throws EmptyPool.
std::vector<ExplanationResult> synthesize(const StateVector& vector, const AgentId& explainer,
                                          const AgentId& explainee, const Formula& beta,
                                          const FormulaPool& pool, const PreferenceOrder& order,
                                          Perspective perspective = Perspective::subjective);

std::vector<Formula> optimal_candidates(const std::vector<ExplanationResult>& ranked);

/// Pool over every symbol that does not occur in beta.
FormulaPool abducible_pool(const Vocabulary& vocabulary, std::vector<AgentId> agents,
                           const Formula& beta, unsigned max_literals, unsigned modal_depth = 0);

// -- Discrepancies and adequacy ----------------------------------------------

/// Pool members beta with B[i] beta & B[j] ~beta, objectively or inside
/// B[perspective].
std::vector<Formula> find_discrepancies(const StateVector& vector, const AgentId& i,
                                        const AgentId& j, const FormulaPool& pool,
                                        const std::optional<AgentId>& perspective = std::nullopt);

/// B[i] [alpha]_j ~B[j] ~beta
bool resolves_discrepancy(const StateVector& vector, const AgentId& i, const AgentId& j,
                          const Formula& alpha, const Formula& beta);

struct AdequacyWitness {
  Formula alpha;
  bool subjective = false;
  bool objective = false;
};

struct AdequacyResult {
  bool adequate = true;
  std::vector<AdequacyWitness> witnesses;
};

/// i's view of j agrees with j's actual state on which pool members explain
/// beta to j.
AdequacyResult is_adequate(const StateVector& vector, const AgentId& i, const AgentId& j,
                           const Formula& beta, const FormulaPool& pool);

}  // namespace tomex
