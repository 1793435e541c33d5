// Concrete epistemic states.
//
// An EpistemicState is a tower: a stratified belief base over the shared
// vocabulary, the world set it induces together with the protected laws, and
// one nested model per other agent (what the owner believes that agent
// believes), each one level shallower. The owner's model of itself is the
// state itself. At depth 0 no nested models are stored and every query about
// another agent is answered by the ignorant state (laws only).

#pragma once

#include <map>
#include <memory>
#include <string_view>
#include <vector>

#include "tomex/formula.hpp"
#include "tomex/worlds.hpp"

namespace tomex {

enum class RevisionOperator { prioritized, dalal };

std::string_view to_string(RevisionOperator op) noexcept;
RevisionOperator parse_revision_operator(std::string_view name);

using Stratum = std::vector<Formula>;
/// Index 0 is the most entrenched stratum (laws sit above it).
using StratifiedBase = std::vector<Stratum>;

std::vector<Formula> flatten(const StratifiedBase& base);

/// Context shared by every state of a tower: vocabulary, agents, laws and the
/// revision operator each agent is taken to use.
struct Frame {
  Vocabulary vocabulary;
  std::vector<AgentId> agents;
  std::vector<Formula> laws;
  WorldSet law_worlds;
  std::map<AgentId, RevisionOperator> operators;

  RevisionOperator operator_of(const AgentId& agent) const;
};

/// Validates laws (modal-free, jointly consistent) and agent names.
std::shared_ptr<const Frame> make_frame(Vocabulary vocabulary, std::vector<AgentId> agents,
                                        std::vector<Formula> laws,
                                        std::map<AgentId, RevisionOperator> operators = {});

class EpistemicState {
 public:
  using ModelMap = std::map<AgentId, EpistemicState>;

  /// worlds = models(laws & all strata); the empty set when inconsistent.
  static EpistemicState from_base(std::shared_ptr<const Frame> frame, AgentId owner,
                                  StratifiedBase base, unsigned depth, ModelMap models = {});

  /// Like from_base but with an explicit operator instead of the frame's.
  static EpistemicState from_base(std::shared_ptr<const Frame> frame, AgentId owner,
                                  StratifiedBase base, unsigned depth, RevisionOperator op,
                                  ModelMap models);

  /// A state whose worlds are exactly `worlds` (intersected with the laws);
  /// the base is one stratum of clauses excluding the missing law-worlds.
  static EpistemicState from_worlds(std::shared_ptr<const Frame> frame, AgentId owner,
                                    const WorldSet& worlds, unsigned depth, RevisionOperator op,
                                    ModelMap models = {});

  /// Believes exactly the laws, and believes every other agent does too.
  static EpistemicState ignorant(std::shared_ptr<const Frame> frame, AgentId owner, unsigned depth);

  const AgentId& owner() const noexcept;
  const Frame& frame() const noexcept;
  const std::shared_ptr<const Frame>& frame_ptr() const noexcept;
  const Vocabulary& vocabulary() const noexcept { return frame().vocabulary; }
  const std::vector<Formula>& laws() const noexcept { return frame().laws; }
  const StratifiedBase& base() const noexcept;
  const WorldSet& worlds() const noexcept;
  unsigned depth() const noexcept;
  RevisionOperator revision_operator() const noexcept;
  const ModelMap& models() const noexcept;

  bool consistent() const noexcept { return !worlds().empty(); }

  /// The owner's model of `agent`: itself for the owner, the stored nested
  /// model otherwise, or the ignorant state when none is stored.
  EpistemicState model_of(const AgentId& agent) const;

  EpistemicState with_model(const AgentId& agent, EpistemicState model) const;
  EpistemicState with_beliefs(StratifiedBase base, WorldSet worlds) const;

  friend bool operator==(const EpistemicState& a, const EpistemicState& b);

 private:
  struct Data;
  explicit EpistemicState(std::shared_ptr<const Data> data);

  std::shared_ptr<const Data> data_;
};

/// One epistemic state per agent: the objective evaluation context.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::map<AgentId, EpistemicState> states);

  const EpistemicState& at(const AgentId& agent) const;
  bool contains(const AgentId& agent) const { return states_.count(agent) != 0; }
  StateVector with(const AgentId& agent, EpistemicState state) const;
  const std::map<AgentId, EpistemicState>& states() const noexcept { return states_; }
  std::vector<AgentId> agents() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::map<AgentId, EpistemicState> states_;
};

}  // namespace tomex
