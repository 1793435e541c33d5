#include "tomex/explain.hpp"

#include <algorithm>
#include <limits>

#include "tomex/error.hpp"
#include "tomex/revision.hpp"
#include "tomex/semantics.hpp"

namespace tomex {

Formula expand_expl(const Vocabulary& vocabulary, const AgentId& i, const Formula& alpha,
                    const Formula& beta) {
  Formula believes_beta = Formula::believes(i, beta);
  Formula consistent = Formula::negation(Formula::believes(i, vocabulary.bottom()));
  return Formula::after_revision(i, alpha, Formula::conjunction(believes_beta, consistent));
}

namespace {

const Vocabulary& vocabulary_of(const StateVector& vector) {
  if (vector.states().empty()) throw Error(ErrorCode::InvalidArgument, "empty state vector");
  return vector.states().begin()->second.vocabulary();
}

}  // namespace

bool is_explanation(const StateVector& vector, const AgentId& i, const Formula& alpha,
                    const Formula& beta) {
  return holds(vector, expand_expl(vocabulary_of(vector), i, alpha, beta));
}

bool is_subjective_explanation(const StateVector& vector, const AgentId& i, const AgentId& j,
                               const Formula& alpha, const Formula& beta) {
  return holds(vector, Formula::believes(i, expand_expl(vocabulary_of(vector), j, alpha, beta)));
}

bool is_possibility_explanation(const StateVector& vector, const AgentId& i, const Formula& alpha,
                                const Formula& beta) {
  Formula body = Formula::negation(Formula::believes(i, Formula::negation(beta)));
  return holds(vector, Formula::after_revision(i, alpha, body));
}

bool explains_for_all(const StateVector& vector, const AgentId& i, const Formula& alpha,
                      std::span<const std::pair<AgentId, Formula>> targets) {
  for (const auto& [j, beta] : targets) {
    if (!is_subjective_explanation(vector, i, j, alpha, beta)) return false;
  }
  return true;
}

bool is_private_explanation(const StateVector& vector, const AgentId& i, const Formula& alpha,
                            const Formula& beta, const AgentId& to, const AgentId& hidden_from) {
  if (to == hidden_from) return false;
  const Vocabulary& vocabulary = vocabulary_of(vector);
  Formula shown = Formula::believes(i, expand_expl(vocabulary, to, alpha, beta));
  Formula hidden =
      Formula::believes(i, Formula::negation(expand_expl(vocabulary, hidden_from, alpha, beta)));
  return holds(vector, Formula::conjunction(shown, hidden));
}

bool nested_explanation_holds(const StateVector& vector, std::span<const AgentId> chain,
                              const AgentId& k, const Formula& alpha, const Formula& beta) {
  if (chain.empty()) throw Error(ErrorCode::InvalidArgument, "belief chain must not be empty");
  Formula phi = expand_expl(vocabulary_of(vector), k, alpha, beta);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) phi = Formula::believes(*it, phi);
  return holds(vector, phi);
}

bool is_subjectively_truthful(const StateVector& vector, const AgentId& i, const AgentId& j,
                              const Formula& alpha, const Formula& beta) {
  return is_subjective_explanation(vector, i, j, alpha, beta) && truth_at(vector.at(i), alpha);
}

unsigned plausibility_distance(const EpistemicState& state, const Formula& alpha) {
  const Rnf rnf = to_rnf(alpha);
  WorldSet target = state.frame().law_worlds;
  for (const auto& f : rnf.propositional) target = target & models_of(f, state.vocabulary());
  if (target.empty()) {
    throw Error(ErrorCode::NoLawConsistentModel,
                "no model of the laws satisfies " + render(alpha));
  }
  if (state.worlds().empty()) return 0;
  return min_distance(state.worlds(), target);
}

bool semantically_minimal(std::span<const Formula> candidates, const Formula& alpha,
                          const Frame& frame) {
  const WorldSet alpha_worlds = models_of(alpha, frame.vocabulary);
  for (const auto& c : candidates) {
    if (c == alpha) continue;
    if (!(frame.law_worlds & models_of(c, frame.vocabulary)).subset_of(alpha_worlds)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Criterion c) noexcept {
  switch (c) {
    case Criterion::truthful: return "truthful";
    case Criterion::min_letters: return "min_letters";
    case Criterion::plausibility: return "plausibility";
    case Criterion::semantic_minimality: return "semantic_minimality";
  }
  return "min_letters";
}

PreferenceOrder PreferenceOrder::standard() {
  return {{Criterion::truthful, Criterion::min_letters, Criterion::plausibility}};
}

namespace {

Criterion parse_criterion(std::string_view name) {
  for (Criterion c : {Criterion::truthful, Criterion::min_letters, Criterion::plausibility,
                      Criterion::semantic_minimality}) {
    if (name == to_string(c)) return c;
  }
  throw Error(ErrorCode::InvalidArgument,
              "unknown preference criterion '" + std::string(name) +
                  "' (expected truthful, min_letters, plausibility or semantic_minimality)");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

PreferenceOrder PreferenceOrder::parse(std::string_view text) {
  text = trim(text);
  if (text == "lexicographic") return standard();
  constexpr std::string_view prefix = "lexicographic(";
  if (text.starts_with(prefix)) {
    if (!text.ends_with(")")) {
      throw Error(ErrorCode::InvalidArgument, "unterminated lexicographic(...) order");
    }
    text = text.substr(prefix.size(), text.size() - prefix.size() - 1);
  }
  PreferenceOrder order;
  while (true) {
    const auto comma = text.find(',');
    order.criteria.push_back(parse_criterion(trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return order;
}

std::string PreferenceOrder::to_string() const {
  if (criteria.size() == 1) return std::string(tomex::to_string(criteria.front()));
  std::string out = "lexicographic(";
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (i != 0) out += ",";
    out += tomex::to_string(criteria[i]);
  }
  return out + ")";
}

namespace {

std::vector<std::size_t> sort_key(const ExplanationScores& s, const PreferenceOrder& order) {
  std::vector<std::size_t> key;
  for (Criterion c : order.criteria) {
    switch (c) {
      case Criterion::truthful: key.push_back(s.truthful ? 0 : 1); break;
      case Criterion::min_letters: key.push_back(s.letters); break;
      case Criterion::plausibility: key.push_back(s.plausibility); break;
      case Criterion::semantic_minimality: key.push_back(s.non_entailing); break;
    }
  }
  return key;
}

}  // namespace

std::vector<ExplanationResult> synthesize(const StateVector& vector, const AgentId& explainer,
                                          const AgentId& explainee, const Formula& beta,
                                          const FormulaPool& pool, const PreferenceOrder& order,
                                          Perspective perspective) {
  const EpistemicState& explainer_state = vector.at(explainer);
  const Frame& frame = explainer_state.frame();
  const auto members = pool.members(frame.vocabulary);
  if (members.empty()) throw Error(ErrorCode::EmptyPool, "the candidate pool is empty");

  const EpistemicState plausibility_state = perspective == Perspective::subjective
                                                ? explainer_state.model_of(explainee)
                                                : vector.at(explainee);
  std::vector<ExplanationResult> results;
  for (std::size_t index = 0; index < members.size(); ++index) {
    const Formula& alpha = members[index];
    const bool subjective = is_subjective_explanation(vector, explainer, explainee, alpha, beta);
    const bool objective = is_explanation(vector, explainee, alpha, beta);
    if (!(perspective == Perspective::subjective ? subjective : objective)) continue;
    ExplanationResult r{alpha, index, objective, {}, {}, false};
    if (subjective) r.subjective_for.push_back(explainer);
    r.scores.letters = letter_count(alpha);
    r.scores.truthful = truth_at(explainer_state, alpha);
    try {
      r.scores.plausibility = plausibility_distance(plausibility_state, alpha);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoLawConsistentModel) throw;
      r.scores.plausibility = std::numeric_limits<unsigned>::max();
    }
    results.push_back(std::move(r));
  }

  for (auto& r : results) {
    if (!r.candidate.is_modal_free()) {
      r.scores.non_entailing = std::numeric_limits<std::size_t>::max();
      continue;
    }
    const WorldSet mine = models_of(r.candidate, frame.vocabulary);
    for (const auto& other : results) {
      if (&other == &r || !other.candidate.is_modal_free()) continue;
      if (!(frame.law_worlds & models_of(other.candidate, frame.vocabulary)).subset_of(mine)) {
        ++r.scores.non_entailing;
      }
    }
  }

  std::stable_sort(results.begin(), results.end(), [&](const auto& a, const auto& b) {
    return sort_key(a.scores, order) < sort_key(b.scores, order);
  });
  if (!results.empty()) {
    const auto best = sort_key(results.front().scores, order);
    for (auto& r : results) r.optimal = sort_key(r.scores, order) == best;
  }
  return results;
}

std::vector<Formula> optimal_candidates(const std::vector<ExplanationResult>& ranked) {
  std::vector<Formula> out;
  for (const auto& r : ranked) {
    if (r.optimal) out.push_back(r.candidate);
  }
  return out;
}

FormulaPool abducible_pool(const Vocabulary& vocabulary, std::vector<AgentId> agents,
                           const Formula& beta, unsigned max_literals, unsigned modal_depth) {
  const auto excluded = atoms_of(beta);
  FormulaPool pool{{}, std::move(agents), max_literals, modal_depth};
  for (const auto& s : vocabulary.symbols()) {
    if (!excluded.count(s)) pool.symbols.push_back(s);
  }
  return pool;
}

// ---------------------------------------------------------------------------

std::vector<Formula> find_discrepancies(const StateVector& vector, const AgentId& i,
                                        const AgentId& j, const FormulaPool& pool,
                                        const std::optional<AgentId>& perspective) {
  std::vector<Formula> out;
  for (const auto& beta : pool.members(vocabulary_of(vector))) {
    Formula phi = Formula::conjunction(Formula::believes(i, beta),
                                       Formula::believes(j, Formula::negation(beta)));
    if (perspective) phi = Formula::believes(*perspective, phi);
    if (holds(vector, phi)) out.push_back(beta);
  }
  return out;
}

bool resolves_discrepancy(const StateVector& vector, const AgentId& i, const AgentId& j,
                          const Formula& alpha, const Formula& beta) {
  Formula possible = Formula::negation(Formula::believes(j, Formula::negation(beta)));
  return holds(vector, Formula::believes(i, Formula::after_revision(j, alpha, possible)));
}

AdequacyResult is_adequate(const StateVector& vector, const AgentId& i, const AgentId& j,
                           const Formula& beta, const FormulaPool& pool) {
  AdequacyResult result;
  for (const auto& alpha : pool.members(vocabulary_of(vector))) {
    const bool subjective = is_subjective_explanation(vector, i, j, alpha, beta);
    const bool objective = is_explanation(vector, j, alpha, beta);
    if (subjective != objective) {
      result.adequate = false;
      result.witnesses.push_back({alpha, subjective, objective});
    }
  }
  return result;
}

}  // namespace tomex
